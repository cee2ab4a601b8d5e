#ifndef MIA_TOPOLOGY_HPP
#define MIA_TOPOLOGY_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace mia {

using NodeId = int;

/// Node set with pairwise link capacities (bits/sec/Hz, W = 1).
/// Node 0 is the source. For unicast problems node n_relays()+1 is the
/// destination; for broadcast every non-source node is a target.
class Topology {
public:
    Topology() = default;
    Topology(int n_relays, double i_max);

    int n_relays() const { return n_relays_; }
    int node_count() const { return n_relays_ + 2; }
    NodeId source() const { return 0; }
    NodeId destination() const { return n_relays_ + 1; }

    double i_max() const { return i_max_; }
    void set_i_max(double v);

    double capacity(NodeId from, NodeId to) const {
        return cap_[static_cast<std::size_t>(from) * node_count() + to];
    }
    void set_capacity(NodeId from, NodeId to, double c);

    const std::vector<double>& capacity_matrix() const { return cap_; }

    bool has_positions() const { return !positions_.empty(); }
    const std::vector<std::pair<double, double>>& positions() const { return positions_; }
    void set_positions(std::vector<std::pair<double, double>> p);

    /// Throws std::invalid_argument if any invariant is violated
    /// (negative/non-finite capacity, non-zero diagonal, i_max <= 0).
    void validate() const;

private:
    int n_relays_ = 0;
    double i_max_ = 1.0;
    std::vector<double> cap_;  // (n+2)^2 row-major, diagonal zero
    std::vector<std::pair<double, double>> positions_;
};

/// Per-node accumulated mutual information relative to i_max.
struct MutualInfoState {
    std::vector<double> info;
    std::vector<bool> decoded;
    double i_max = 1.0;

    /// All-zero state with only the source holding the full packet.
    static MutualInfoState initial(int node_count, double i_max);

    bool all_decoded() const;

    /// Tolerance below i_max at which a node counts as decoded.
    double decode_tolerance() const { return 1e-12 * i_max; }
};

/// Shannon capacity log2(1 + h p / n0) of an AWGN link.
double capacity_awgn(double h, double p, double n0);

/// Derates a capacity by the rateless-code overhead factor 1/(1 + eps).
double overhead_adjust(double c, double eps);

/// Pure accumulation step: `transmitter` sends for `duration` seconds and
/// every non-decoded node j gains duration * C[t][j] bits. Nodes reaching
/// i_max (within tolerance) are marked decoded and clamped to i_max.
/// Throws if the transmitter has not decoded or duration < 0.
MutualInfoState accumulate(const MutualInfoState& state, NodeId transmitter,
                           double duration, const Topology& topo);

struct TopologyGenConfig {
    int n_relays = 20;
    double area_width = 10.0;
    double area_height = 10.0;
    std::pair<double, double> source_pos{1.0, 2.0};
    std::pair<double, double> dest_pos{8.0, 8.0};
    double alpha = 3.0;  // path-loss exponent
    double i_max = 1.0;
    std::uint64_t seed = 0;
};

/// Random topology: relays uniform in the area, link gains Rayleigh with
/// mean 1 drawn independently per ordered pair, C_ij = log2(1 + h_ij/d_ij^a).
/// Fully deterministic for a fixed seed.
Topology gen_random_topology(const TopologyGenConfig& cfg);

/// Rayleigh(mean 1) scale parameter, sigma = sqrt(2/pi).
double rayleigh_mean1_sigma();

std::string topology_to_json(const Topology& topo);
Topology topology_from_json(const std::string& text);

}  // namespace mia

#endif  // MIA_TOPOLOGY_HPP
