#ifndef MIA_HEURISTICS_HPP
#define MIA_HEURISTICS_HPP

#include <optional>

#include "mia/topology.hpp"
#include "mia/unicast.hpp"

namespace mia {

/// Polynomial heuristic: apply the greedy single-transmitter schedule to
/// the interior nodes M of the traditional shortest path.
std::optional<UnicastSolution> heuristic1(const Topology& topo);

/// Like heuristic1, but while simulating the greedy schedule over M the
/// mutual information of every node is tracked; an outside node that
/// decodes before the next M node is adopted as transmitter when it has the
/// better channel to that next node. Adopted nodes hand control back to the
/// greedy rule once the next M node decodes.
std::optional<UnicastSolution> heuristic2(const Topology& topo);

}  // namespace mia

#endif  // MIA_HEURISTICS_HPP
