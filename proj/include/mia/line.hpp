#ifndef MIA_LINE_HPP
#define MIA_LINE_HPP

#include <functional>
#include <optional>
#include <vector>

#include "mia/topology.hpp"
#include "mia/unicast.hpp"

namespace mia {

/// All nodes on a line; capacity is a strictly decreasing function of
/// distance (default theta / d^2).
struct LineConfig {
    double source_x = 0.0;
    std::vector<double> relay_x;
    double dest_x = 0.0;
    double theta = 1.0;  // gamma * P for the default law
    double i_max = 1.0;
    /// Ignore contributions from transmitters farther than this; 0 = off.
    double truncation_radius = 0.0;
    /// Optional custom capacity law C(d); must be positive and strictly
    /// decreasing on (0, inf).
    std::function<double(double)> capacity_law;

    double capacity_at(double dist) const;
};

/// Topology with capacity[i][j] = law(|x_i - x_j|); node order is source,
/// relays in the given order, destination.
Topology line_topology(const LineConfig& cfg);

/// Optimal line solution: the cooperating set is every relay strictly
/// between source and destination, scheduled greedily.
UnicastSolution solve_line(const LineConfig& cfg);

/// Stage durations for the equal-unit-spacing line under C(d) = theta/d^2,
/// by forward substitution. truncation_radius = 0 disables truncation.
std::vector<double> line_delay_recursion(int n, double theta, double i_max,
                                         double truncation_radius = 0.0);

struct DelayRatio {
    double ratio = 0.0;        // truncated-model accumulation delay / (n+1) hops
    double asymptotic_bound = 0.0;  // (n + 1 + 1/4 + 2/9) / ((n+1)(1 + 1/4 + 1/9))
};

/// Delay reduction of accumulation over hop-by-hop forwarding on the equal
/// spacing line, evaluated under truncation radius 3. The bound tends to
/// 36/49 for large n.
DelayRatio delay_ratio(int n);

}  // namespace mia

#endif  // MIA_LINE_HPP
