#include "mia/line.hpp"

#include <cmath>
#include <stdexcept>

namespace mia {

double LineConfig::capacity_at(double dist) const {
    if (truncation_radius > 0.0 && dist > truncation_radius) return 0.0;
    if (capacity_law) return capacity_law(dist);
    return theta / (dist * dist);
}

Topology line_topology(const LineConfig& cfg) {
    if (!(cfg.theta > 0.0) || !(cfg.i_max > 0.0))
        throw std::invalid_argument("line_topology: theta and i_max must be > 0");
    const int n = static_cast<int>(cfg.relay_x.size());
    std::vector<double> xs;
    xs.push_back(cfg.source_x);
    xs.insert(xs.end(), cfg.relay_x.begin(), cfg.relay_x.end());
    xs.push_back(cfg.dest_x);

    for (std::size_t i = 0; i < xs.size(); ++i)
        for (std::size_t j = i + 1; j < xs.size(); ++j)
            if (std::abs(xs[i] - xs[j]) < 1e-12)
                throw std::invalid_argument("line_topology: co-located nodes");

    Topology topo(n, cfg.i_max);
    std::vector<std::pair<double, double>> pos;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        pos.emplace_back(xs[i], 0.0);
        for (std::size_t j = 0; j < xs.size(); ++j) {
            if (i == j) continue;
            topo.set_capacity(static_cast<NodeId>(i), static_cast<NodeId>(j),
                              cfg.capacity_at(std::abs(xs[i] - xs[j])));
        }
    }
    topo.set_positions(std::move(pos));
    return topo;
}

UnicastSolution solve_line(const LineConfig& cfg) {
    const Topology topo = line_topology(cfg);
    const double lo = std::min(cfg.source_x, cfg.dest_x);
    const double hi = std::max(cfg.source_x, cfg.dest_x);

    std::set<NodeId> between;
    for (std::size_t i = 0; i < cfg.relay_x.size(); ++i)
        if (cfg.relay_x[i] > lo && cfg.relay_x[i] < hi)
            between.insert(static_cast<NodeId>(i + 1));

    auto sched = greedy_schedule(topo, between);
    if (!sched) throw std::logic_error("line with positive capacities must be feasible");
    return make_unicast_solution(topo, std::move(*sched));
}

std::vector<double> line_delay_recursion(int n, double theta, double i_max,
                                         double truncation_radius) {
    if (n < 0 || !(theta > 0.0) || !(i_max > 0.0))
        throw std::invalid_argument("line_delay_recursion: bad arguments");

    // Receiver of stage m is the node at coordinate m+1; the transmitter of
    // stage i sits at coordinate i, so their distance is m+1-i.
    std::vector<double> delta(n + 1, 0.0);
    for (int m = 0; m <= n; ++m) {
        double acc = i_max;
        for (int i = 0; i < m; ++i) {
            const double dist = static_cast<double>(m + 1 - i);
            if (truncation_radius > 0.0 && dist > truncation_radius) continue;
            acc -= delta[i] * theta / (dist * dist);
        }
        delta[m] = acc / theta;
    }
    return delta;
}

DelayRatio delay_ratio(int n) {
    if (n < 1) throw std::invalid_argument("delay_ratio: n must be >= 1");
    const double theta = 1.0, i_max = 1.0;
    const auto delta = line_delay_recursion(n, theta, i_max, 3.0);
    double mia_delay = 0.0;
    for (double d : delta) mia_delay += d;
    const double trad_delay = (n + 1) * i_max / theta;

    DelayRatio r;
    r.ratio = mia_delay / trad_delay;
    r.asymptotic_bound = (n + 1 + 0.25 + 2.0 / 9.0) / ((n + 1) * (1.0 + 0.25 + 1.0 / 9.0));
    return r;
}

}  // namespace mia
