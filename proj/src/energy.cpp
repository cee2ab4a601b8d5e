#include "mia/energy.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace mia {

namespace {

Topology linear_topology(const GainMatrix& h, double gamma,
                         const std::vector<double>& node_psd, double i_max) {
    if (!(gamma > 0.0)) throw std::invalid_argument("gamma must be > 0");
    if (static_cast<int>(node_psd.size()) != h.node_count)
        throw std::invalid_argument("psd vector size must equal node count");
    for (double p : node_psd)
        if (!(p > 0.0)) throw std::invalid_argument("PSD levels must be > 0");

    Topology topo(h.node_count - 2, i_max);
    for (NodeId i = 0; i < h.node_count; ++i)
        for (NodeId j = 0; j < h.node_count; ++j)
            if (i != j) topo.set_capacity(i, j, gamma * node_psd[i] * h.at(i, j));
    return topo;
}

}  // namespace

std::optional<LinearScheduleResult> greedy_linear_schedule(
    const GainMatrix& h, double gamma, const std::set<NodeId>& relay_set,
    const std::vector<double>& node_psd, double i_max) {
    const Topology topo = linear_topology(h, gamma, node_psd, i_max);
    auto sched = greedy_schedule(topo, relay_set);
    if (!sched) return std::nullopt;

    LinearScheduleResult res;
    for (const Stage& st : sched->stages) {
        const double e = st.duration * node_psd[st.transmitter];
        res.stage_energies.push_back(e);
        res.total_energy += e;
    }
    res.schedule = std::move(*sched);
    return res;
}

std::optional<LinearScheduleResult> greedy_linear_schedule(
    const GainMatrix& h, double gamma, const std::set<NodeId>& relay_set,
    double unit_psd, double i_max) {
    return greedy_linear_schedule(h, gamma, relay_set,
                                  std::vector<double>(h.node_count, unit_psd), i_max);
}

std::optional<EnergySolution> solve_min_energy(const GainMatrix& h, double gamma,
                                               double d_max, double i_max) {
    if (!(d_max > 0.0)) throw std::invalid_argument("d_max must be > 0");

    // At unit PSD each stage burns duration * 1 joules/Hz, so the subset
    // energy equals the subset delay and the unicast subset search applies
    // unchanged (including its tie-breaks).
    const Topology unit = linear_topology(h, gamma, std::vector<double>(h.node_count, 1.0), i_max);
    auto best = solve_min_delay(unit);
    if (!best) return std::nullopt;

    const double unit_delay = best->delay;
    const double factor = unit_delay / d_max;

    EnergySolution sol;
    sol.relay_set = best->relay_set;
    sol.d_max = d_max;
    for (const Stage& st : best->schedule.stages) {
        EnergyStage es;
        es.transmitter = st.transmitter;
        es.decoder = st.decoder;
        es.psd = factor;
        es.duration = st.duration / factor;
        sol.stages.push_back(es);
        sol.total_energy += es.energy();
        sol.delay += es.duration;
    }
    return sol;
}

std::vector<NodeId> nonlinear_decoding_order(double p_s) {
    if (!(p_s > 0.0)) throw std::invalid_argument("p_s must be > 0");

    // Fixture gains: h_s1 dominates so node 1 always decodes first; the
    // logarithmic s-3 link makes the second decoder depend on p_s.
    const double h_s1 = 1.0, h_s2 = 0.05, h_s3 = 0.1;
    const double h_12 = 1.0, h_13 = 1.0, h_23 = 1.0, h_32 = 1.0;
    const double i_max = 1.0;
    const double relay_psd = 1.0;

    auto rate = [&](NodeId i, NodeId j) {
        const double p = (i == 0) ? p_s : relay_psd;
        if (i == 0 && j == 1) return h_s1 * p;
        if (i == 0 && j == 2) return h_s2 * p;
        if (i == 0 && j == 3) return std::log2(1.0 + h_s3 * p);
        if (i == 1 && j == 2) return h_12 * p;
        if (i == 1 && j == 3) return h_13 * p;
        if (i == 2 && j == 3) return h_23 * p;
        if (i == 3 && j == 2) return h_32 * p;
        return 0.0;
    };

    std::vector<double> info(4, 0.0);
    std::vector<bool> decoded(4, false);
    decoded[0] = true;
    info[0] = i_max;

    std::vector<NodeId> order;
    NodeId tx = 0;
    while (order.size() < 3) {
        double best_time = std::numeric_limits<double>::infinity();
        NodeId decoder = -1;
        for (NodeId v = 1; v <= 3; ++v) {
            if (decoded[v]) continue;
            const double c = rate(tx, v);
            if (c <= 0.0) continue;
            const double t = std::max(0.0, i_max - info[v]) / c;
            if (t < best_time) {
                best_time = t;
                decoder = v;
            }
        }
        if (decoder < 0) throw std::logic_error("nonlinear fixture disconnected");
        for (NodeId v = 1; v <= 3; ++v)
            if (!decoded[v]) info[v] += best_time * rate(tx, v);
        decoded[decoder] = true;
        info[decoder] = i_max;
        order.push_back(decoder);
        tx = decoder;
    }
    return order;
}

}  // namespace mia
