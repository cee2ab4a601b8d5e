#ifndef MIA_TEST_UTIL_HPP
#define MIA_TEST_UTIL_HPP

#include <random>
#include <vector>

#include "mia/topology.hpp"
#include "mia/unicast.hpp"

namespace mia::test {

/// Independent schedule replay: re-runs the stage list through accumulate
/// and reports the largest amount of information any decoder was still
/// missing at its stage end. Also checks that transmitters were informed.
inline double replay_max_error(const Topology& topo, const std::vector<Stage>& stages) {
    const double i_max = topo.i_max();
    std::vector<double> raw(topo.node_count(), 0.0);
    std::vector<bool> informed(topo.node_count(), false);
    raw[0] = i_max;
    informed[0] = true;

    double worst = 0.0;
    for (const Stage& st : stages) {
        if (!informed[st.transmitter]) return 1e18;  // transmitted without the packet
        for (int j = 0; j < topo.node_count(); ++j)
            if (!informed[j]) raw[j] += st.duration * topo.capacity(st.transmitter, j);
        worst = std::max(worst, std::max(0.0, i_max - raw[st.decoder]));
        informed[st.decoder] = true;
    }
    return worst;
}

/// Fully connected random topology with capacities uniform in [lo, hi].
inline Topology random_topology(std::mt19937_64& rng, int n_relays, double lo = 0.1,
                                double hi = 4.0, double i_max = 1.0) {
    std::uniform_real_distribution<double> u(lo, hi);
    Topology topo(n_relays, i_max);
    for (int i = 0; i < topo.node_count(); ++i)
        for (int j = 0; j < topo.node_count(); ++j)
            if (i != j) topo.set_capacity(i, j, u(rng));
    return topo;
}

}  // namespace mia::test

#endif  // MIA_TEST_UTIL_HPP
