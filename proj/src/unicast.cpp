#include "mia/unicast.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <limits>
#include <queue>
#include <stdexcept>

namespace mia {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

std::set<NodeId> mask_to_set(std::uint64_t mask) {
    std::set<NodeId> s;
    for (int i = 0; mask; ++i, mask >>= 1)
        if (mask & 1) s.insert(i + 1);
    return s;
}

// (cardinality, lexicographic) order used to break delay ties.
bool set_less(const std::set<NodeId>& a, const std::set<NodeId>& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

}  // namespace

namespace detail {

std::optional<double> greedy_delay(const Topology& topo, std::uint64_t member_mask,
                                   double upper, std::vector<double>& scratch) {
    const int nc = topo.node_count();
    const NodeId dest = topo.destination();
    const double i_max = topo.i_max();
    const double* cap = topo.capacity_matrix().data();

    double* info = scratch.data();
    std::fill(info, info + nc, 0.0);

    // Undecoded candidates, bit per node id.
    std::uint64_t pending = (member_mask << 1) | (std::uint64_t{1} << dest);
    NodeId tx = topo.source();
    double total = 0.0;

    while (pending) {
        const double* row = cap + static_cast<std::size_t>(tx) * nc;
        double best_time = kInf;
        NodeId decoder = -1;
        for (std::uint64_t m = pending; m;) {
            const int v = std::countr_zero(m);
            m &= m - 1;
            const double c = row[v];
            if (c <= 0.0) continue;
            const double need = std::max(0.0, i_max - info[v]);
            const double t = need / c;
            if (t < best_time) {
                best_time = t;
                decoder = v;
            }
        }
        if (decoder < 0) return std::nullopt;  // infeasible cut
        total += best_time;
        if (upper > 0.0 && total > upper) return std::nullopt;
        pending &= ~(std::uint64_t{1} << decoder);
        for (std::uint64_t m = pending; m;) {
            const int v = std::countr_zero(m);
            m &= m - 1;
            info[v] += best_time * row[v];
        }
        if (decoder == dest) return total;
        tx = decoder;
    }
    return total;
}

}  // namespace detail

std::optional<Schedule> greedy_schedule(const Topology& topo,
                                        const std::set<NodeId>& relay_set) {
    const NodeId dest = topo.destination();
    for (NodeId r : relay_set)
        if (r < 1 || r > topo.n_relays())
            throw std::invalid_argument("greedy_schedule: relay id out of range");

    const double i_max = topo.i_max();
    MutualInfoState state = MutualInfoState::initial(topo.node_count(), i_max);

    std::set<NodeId> pending(relay_set);
    pending.insert(dest);

    Schedule sched;
    NodeId tx = topo.source();
    while (!pending.empty()) {
        double best_time = kInf;
        NodeId decoder = -1;
        for (NodeId v : pending) {
            const double c = topo.capacity(tx, v);
            if (c <= 0.0) continue;
            const double need = std::max(0.0, i_max - state.info[v]);
            const double t = need / c;
            if (t < best_time) {
                best_time = t;
                decoder = v;
            }
        }
        if (decoder < 0) return std::nullopt;
        state = accumulate(state, tx, best_time, topo);
        state.info[decoder] = i_max;
        state.decoded[decoder] = true;
        sched.stages.push_back(Stage{tx, best_time, decoder});
        sched.total_delay += best_time;
        pending.erase(decoder);
        if (decoder == dest) break;
        tx = decoder;
    }
    return sched;
}

UnicastSolution make_unicast_solution(const Topology& topo, Schedule sched) {
    UnicastSolution sol;
    for (const Stage& st : sched.stages)
        if (st.duration > 0.0 && st.transmitter != topo.source() &&
            st.transmitter != topo.destination())
            sol.relay_set.insert(st.transmitter);
    sol.delay = sched.total_delay;
    sol.schedule = std::move(sched);
    return sol;
}

std::optional<UnicastSolution> solve_min_delay(const Topology& topo,
                                               const SolveOptions& opts) {
    const int n = topo.n_relays();
    if (n > 30) throw std::invalid_argument("solve_min_delay: n_relays too large for subset search");

    std::vector<double> scratch(topo.node_count());
    const std::uint64_t n_masks = std::uint64_t{1} << n;

    double best_delay = kInf;
    std::uint64_t best_mask = 0;
    bool found = false;
    std::optional<UnicastSolution> best_sol;  // materialized lazily on ties

    double upper = opts.initial_upper;
    for (std::uint64_t mask = 0; mask < n_masks; ++mask) {
        // The slack keeps a subset whose delay equals the caller-supplied
        // bound (e.g. a heuristic that happens to be optimal) from being
        // pruned over summation-order roundoff.
        const auto d =
            detail::greedy_delay(topo, mask, opts.prune ? upper * (1.0 + 1e-9) : 0.0, scratch);
        if (!d) continue;
        if (!found || *d < best_delay) {
            found = true;
            best_delay = *d;
            best_mask = mask;
            best_sol.reset();
            if (opts.prune && (upper <= 0.0 || best_delay < upper)) upper = best_delay;
        } else if (*d == best_delay) {
            if (!best_sol) {
                auto s = greedy_schedule(topo, mask_to_set(best_mask));
                best_sol = make_unicast_solution(topo, std::move(*s));
            }
            auto s = greedy_schedule(topo, mask_to_set(mask));
            auto cand = make_unicast_solution(topo, std::move(*s));
            if (set_less(cand.relay_set, best_sol->relay_set)) {
                best_sol = std::move(cand);
                best_mask = mask;
            }
        }
    }
    if (!found) return std::nullopt;
    if (!best_sol) {
        auto s = greedy_schedule(topo, mask_to_set(best_mask));
        best_sol = make_unicast_solution(topo, std::move(*s));
    }
    return best_sol;
}

std::optional<PathSolution> traditional_shortest_path(const Topology& topo) {
    const int nc = topo.node_count();
    const double i_max = topo.i_max();
    std::vector<double> dist(nc, kInf);
    std::vector<NodeId> prev(nc, -1);
    std::vector<bool> done(nc, false);
    dist[0] = 0.0;

    using Entry = std::pair<double, NodeId>;
    std::priority_queue<Entry, std::vector<Entry>, std::greater<>> pq;
    pq.push({0.0, 0});
    while (!pq.empty()) {
        const auto [du, u] = pq.top();
        pq.pop();
        if (done[u]) continue;
        done[u] = true;
        for (NodeId v = 0; v < nc; ++v) {
            if (done[v] || v == u) continue;
            const double c = topo.capacity(u, v);
            if (c <= 0.0) continue;
            const double nd = du + i_max / c;
            if (nd < dist[v]) {
                dist[v] = nd;
                prev[v] = u;
                pq.push({nd, v});
            } else if (nd == dist[v] && prev[v] >= 0 && u < prev[v]) {
                prev[v] = u;  // deterministic equal-cost tie-break
            }
        }
    }

    const NodeId dest = topo.destination();
    if (!std::isfinite(dist[dest])) return std::nullopt;
    PathSolution sol;
    sol.delay = dist[dest];
    for (NodeId v = dest; v >= 0; v = prev[v]) {
        sol.path.push_back(v);
        if (v == 0) break;
    }
    std::reverse(sol.path.begin(), sol.path.end());
    return sol;
}

}  // namespace mia
