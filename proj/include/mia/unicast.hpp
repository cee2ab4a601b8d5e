#ifndef MIA_UNICAST_HPP
#define MIA_UNICAST_HPP

#include <cstdint>
#include <optional>
#include <set>
#include <vector>

#include "mia/topology.hpp"

namespace mia {

/// One stage of a transmission schedule: `transmitter` sends for `duration`
/// seconds and `decoder` completes decoding exactly at the stage end.
struct Stage {
    NodeId transmitter = 0;
    double duration = 0.0;
    NodeId decoder = 0;
};

struct Schedule {
    std::vector<Stage> stages;
    double total_delay = 0.0;
};

struct UnicastSolution {
    std::set<NodeId> relay_set;  // relays that transmit for a positive duration
    Schedule schedule;
    double delay = 0.0;
};

struct SolveOptions {
    /// Abort a subset's greedy run once its partial delay exceeds the
    /// incumbent. Never changes the result, only the work done.
    bool prune = false;
    /// Incumbent seed for pruning (e.g. a heuristic delay).
    double initial_upper = 0.0;  // <= 0 means none
};

/// Greedy single-transmitter schedule for a fixed relay subset: the newest
/// decoder transmits until the next member of relay_set (or the destination)
/// decodes. Returns nullopt when no candidate can ever decode.
std::optional<Schedule> greedy_schedule(const Topology& topo,
                                        const std::set<NodeId>& relay_set);

/// Optimal minimum-delay unicast: greedy_schedule over all 2^n relay
/// subsets. Ties broken by smaller relay-set cardinality, then
/// lexicographic set order.
std::optional<UnicastSolution> solve_min_delay(const Topology& topo,
                                               const SolveOptions& opts = {});

struct PathSolution {
    std::vector<NodeId> path;  // s ... d
    double delay = 0.0;
};

/// Dijkstra over link weights i_max / C_ij; ties broken by smaller node id.
std::optional<PathSolution> traditional_shortest_path(const Topology& topo);

/// Builds a UnicastSolution from a schedule: relays transmitting with
/// positive duration form the relay set.
UnicastSolution make_unicast_solution(const Topology& topo, Schedule sched);

namespace detail {

/// Delay-only greedy over the member bitmask (bit i = relay i+1; the
/// destination is always a candidate). Returns nullopt if infeasible or,
/// when upper > 0, once the partial delay exceeds upper. `scratch` must
/// hold at least node_count doubles.
std::optional<double> greedy_delay(const Topology& topo, std::uint64_t member_mask,
                                   double upper, std::vector<double>& scratch);

}  // namespace detail

}  // namespace mia

#endif  // MIA_UNICAST_HPP
