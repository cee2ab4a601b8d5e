#ifndef MIA_EXPERIMENT_HPP
#define MIA_EXPERIMENT_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "mia/topology.hpp"

namespace mia {

struct CdfRow {
    std::uint64_t seed = 0;
    double delay_opt = 0.0;
    double delay_h1 = 0.0;
    double delay_h2 = 0.0;
    double delay_sp = 0.0;
    double r_h1 = 0.0;
    double r_h2 = 0.0;
    double r_sp = 0.0;
};

struct CdfConfig {
    int n_relays = 20;
    int instances = 100;
    std::uint64_t seed0 = 0;
    double alpha = 3.0;
    double i_max = 1.0;
    int workers = 1;
};

/// Runs the random-topology batch: per seed, optimal (bound-pruned subset
/// search), both heuristics and the shortest-path baseline. Rows come back
/// in seed order regardless of worker scheduling.
std::vector<CdfRow> run_cdf_experiment(const CdfConfig& cfg);

/// Data rows plus summary_mean / summary_p50 / summary_p90 rows.
std::string cdf_to_csv(const std::vector<CdfRow>& rows);

}  // namespace mia

#endif  // MIA_EXPERIMENT_HPP
