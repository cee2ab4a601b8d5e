#ifndef MIA_BROADCAST_HPP
#define MIA_BROADCAST_HPP

#include <cstdint>
#include <optional>
#include <tuple>
#include <vector>

#include "mia/topology.hpp"
#include "mia/unicast.hpp"

namespace mia {

/// Minimum-delay broadcast solution. Unlike unicast, a stage transmitter may
/// be any informed node and may repeat across stages; zero-duration stages
/// mark simultaneous decodes. A stage with decoder == -1 is a transmitter
/// handoff at a non-decode instant: some optima need the final nodes to
/// finish simultaneously, which forces the last stretch to be time-shared
/// between transmitters.
struct BroadcastSolution {
    std::vector<Stage> stages;
    std::vector<NodeId> decoding_order;  // permutation of 1..n
    double delay = 0.0;
};

struct BroadcastOptions {
    /// Prune branches whose partial delay already reaches the incumbent.
    /// Must not change the optimum.
    bool prune = true;
};

struct BroadcastRun {
    NodeId decoder = -1;
    double duration = 0.0;
    MutualInfoState state;
};

/// One greedy run: `transmitter` (which must have decoded) sends until the
/// first undecoded node finishes; ties broken by smaller id. Returns nullopt
/// when the transmitter reaches no undecoded node.
std::optional<BroadcastRun> broadcast_run(const Topology& topo,
                                          const MutualInfoState& state,
                                          NodeId transmitter);

/// Exhaustive depth-first search over per-stage transmitter choices (every
/// informed node is a branch, leaves are complete broadcasts), followed by
/// an exact refinement over decoding orders that catches the rare optima
/// the stage-aligned search cannot express.
std::optional<BroadcastSolution> solve_min_delay_broadcast(
    const Topology& topo, const BroadcastOptions& opts = {});

/// Leaves visited by the pruning-free search (= n! on connected inputs).
std::uint64_t broadcast_leaf_count(const Topology& topo);

}  // namespace mia

#endif  // MIA_BROADCAST_HPP
