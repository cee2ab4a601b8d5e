#ifndef MIA_JSON_IO_HPP
#define MIA_JSON_IO_HPP

#include <string>

#include "mia/broadcast.hpp"
#include "mia/energy.hpp"
#include "mia/unicast.hpp"

namespace mia {

/// method: "optimal" | "h1" | "h2" | "sp" | "line".
std::string solution_to_json(const UnicastSolution& sol, const std::string& method);
std::string path_solution_to_json(const PathSolution& sol);
std::string energy_solution_to_json(const EnergySolution& sol);
std::string broadcast_solution_to_json(const BroadcastSolution& sol);

}  // namespace mia

#endif  // MIA_JSON_IO_HPP
