#ifndef MIA_ENERGY_HPP
#define MIA_ENERGY_HPP

#include <optional>
#include <set>
#include <vector>

#include "mia/topology.hpp"
#include "mia/unicast.hpp"

namespace mia {

struct EnergyStage {
    NodeId transmitter = 0;
    double duration = 0.0;
    double psd = 0.0;  // joules/sec/Hz
    NodeId decoder = 0;

    double energy() const { return duration * psd; }  // joules/Hz (W = 1)
};

struct EnergySolution {
    std::set<NodeId> relay_set;
    std::vector<EnergyStage> stages;
    double total_energy = 0.0;
    double delay = 0.0;
    double d_max = 0.0;
};

/// Square gain matrix for the linear rate-power model C_ij(P_i) = gamma P_i h_ij.
struct GainMatrix {
    int node_count = 0;
    std::vector<double> h;  // row-major, diagonal ignored

    GainMatrix() = default;
    GainMatrix(int nodes, double fill = 0.0)
        : node_count(nodes), h(static_cast<std::size_t>(nodes) * nodes, fill) {}
    double& at(NodeId i, NodeId j) { return h[static_cast<std::size_t>(i) * node_count + j]; }
    double at(NodeId i, NodeId j) const { return h[static_cast<std::size_t>(i) * node_count + j]; }
};

struct LinearScheduleResult {
    Schedule schedule;
    std::vector<double> stage_energies;  // duration_j * P_{tx(j)}
    double total_energy = 0.0;
};

/// Greedy unicast schedule under the linear rate-power model with per-node
/// PSDs. Stage energies are independent of the power vector; the decoding
/// order is too.
std::optional<LinearScheduleResult> greedy_linear_schedule(
    const GainMatrix& h, double gamma, const std::set<NodeId>& relay_set,
    const std::vector<double>& node_psd, double i_max = 1.0);

/// Uniform-PSD convenience overload.
std::optional<LinearScheduleResult> greedy_linear_schedule(
    const GainMatrix& h, double gamma, const std::set<NodeId>& relay_set,
    double unit_psd, double i_max = 1.0);

/// Minimum total energy subject to delay <= d_max: subset search at unit
/// PSD, then a single global scale factor D/d_max on power (and 1/factor on
/// durations) so the delay meets d_max exactly with unchanged energy.
std::optional<EnergySolution> solve_min_energy(const GainMatrix& h, double gamma,
                                               double d_max, double i_max = 1.0);

/// Four-node fixture where the rate-power curve of link s-3 is
/// logarithmic while every other link is linear. Returns the greedy decoding
/// order (nodes 1..3) for source PSD p_s; the second decoder flips between
/// nodes 3 and 2 as p_s grows.
std::vector<NodeId> nonlinear_decoding_order(double p_s);

}  // namespace mia

#endif  // MIA_ENERGY_HPP
