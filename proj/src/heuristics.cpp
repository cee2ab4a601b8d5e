#include "mia/heuristics.hpp"

#include <limits>
#include <set>

namespace mia {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

std::set<NodeId> shortest_path_interior(const Topology& topo) {
    auto sp = traditional_shortest_path(topo);
    std::set<NodeId> m;
    if (!sp) return m;
    for (std::size_t i = 1; i + 1 < sp->path.size(); ++i) m.insert(sp->path[i]);
    return m;
}

}  // namespace

std::optional<UnicastSolution> heuristic1(const Topology& topo) {
    auto sp = traditional_shortest_path(topo);
    if (!sp) return std::nullopt;
    std::set<NodeId> m;
    for (std::size_t i = 1; i + 1 < sp->path.size(); ++i) m.insert(sp->path[i]);
    auto sched = greedy_schedule(topo, m);
    if (!sched) return std::nullopt;
    return make_unicast_solution(topo, std::move(*sched));
}

std::optional<UnicastSolution> heuristic2(const Topology& topo) {
    if (!traditional_shortest_path(topo)) return std::nullopt;
    const std::set<NodeId> m = shortest_path_interior(topo);
    const NodeId dest = topo.destination();
    const double i_max = topo.i_max();
    const int nc = topo.node_count();

    std::vector<bool> is_member(nc, false);
    for (NodeId r : m) is_member[r] = true;
    is_member[dest] = true;

    MutualInfoState state = MutualInfoState::initial(nc, i_max);
    std::vector<bool> settled(nc, false);  // decode bookkeeping incl. bystanders
    settled[0] = true;

    Schedule sched;
    NodeId tx = topo.source();

    auto decode_time = [&](NodeId v) {
        const double c = topo.capacity(tx, v);
        if (c <= 0.0) return kInf;
        return std::max(0.0, i_max - state.info[v]) / c;
    };
    auto advance = [&](double dur, NodeId decoder) {
        state = accumulate(state, tx, dur, topo);
        for (NodeId v = 0; v < nc; ++v)
            if (v != decoder) state.decoded[v] = settled[v];
        state.decoded[decoder] = true;
        state.info[decoder] = i_max;
        settled[decoder] = true;
        sched.stages.push_back(Stage{tx, dur, decoder});
        sched.total_delay += dur;
    };

    while (!settled[dest]) {
        // Next node: member of M u {d} that would decode first if the
        // current transmitter kept going.
        NodeId next = -1;
        double t_next = kInf;
        for (NodeId v = 0; v < nc; ++v) {
            if (settled[v] || !is_member[v]) continue;
            const double t = decode_time(v);
            if (t < t_next) {
                t_next = t;
                next = v;
            }
        }
        if (next < 0) return std::nullopt;  // transmitter cut off from M

        NodeId outside = -1;
        double t_out = kInf;
        for (NodeId v = 0; v < nc; ++v) {
            if (settled[v] || is_member[v]) continue;
            const double t = decode_time(v);
            if (t < t_out) {
                t_out = t;
                outside = v;
            }
        }

        if (outside >= 0 && t_out < t_next) {
            // Collect every outside node finishing at the same instant;
            // only the best channel toward `next` may take over.
            std::vector<NodeId> simultaneous;
            for (NodeId v = 0; v < nc; ++v)
                if (!settled[v] && !is_member[v] && decode_time(v) == t_out)
                    simultaneous.push_back(v);
            const NodeId cur = tx;
            advance(t_out, simultaneous.front());
            for (std::size_t i = 1; i < simultaneous.size(); ++i)
                advance(0.0, simultaneous[i]);
            NodeId adopted = -1;
            double best_c = topo.capacity(cur, next);
            for (NodeId v : simultaneous) {
                if (topo.capacity(v, next) > best_c) {
                    best_c = topo.capacity(v, next);
                    adopted = v;
                }
            }
            if (adopted >= 0) tx = adopted;
        } else {
            advance(t_next, next);
            if (next == dest) break;
            tx = next;  // greedy rule: the newest decoder transmits
        }
    }
    return make_unicast_solution(topo, std::move(sched));
}

}  // namespace mia
