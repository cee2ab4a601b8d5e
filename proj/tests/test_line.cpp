#include <doctest.h>

#include <stdexcept>

#include <cmath>
#include <numeric>

#include "mia/line.hpp"
#include "mia/unicast.hpp"

using namespace mia;

namespace {

LineConfig equal_spacing(int n) {
    LineConfig cfg;
    cfg.source_x = 0.0;
    for (int i = 1; i <= n; ++i) cfg.relay_x.push_back(static_cast<double>(i));
    cfg.dest_x = static_cast<double>(n + 1);
    return cfg;
}

}  // namespace

TEST_CASE("LineConfig::capacity_at") {
    LineConfig cfg;
    cfg.theta = 2.0;
    CHECK(cfg.capacity_at(1.0) == doctest::Approx(2.0));
    CHECK(cfg.capacity_at(2.0) == doctest::Approx(0.5));
    SUBCASE("truncation zeroes far links") {
        cfg.truncation_radius = 3.0;
        CHECK(cfg.capacity_at(3.0) == doctest::Approx(2.0 / 9.0));
        CHECK(cfg.capacity_at(3.0 + 1e-9) == 0.0);
    }
    SUBCASE("custom law overrides the default") {
        cfg.capacity_law = [](double d) { return 1.0 / d; };
        CHECK(cfg.capacity_at(4.0) == doctest::Approx(0.25));
    }
}

TEST_CASE("line_topology") {
    LineConfig cfg = equal_spacing(2);
    const Topology topo = line_topology(cfg);
    CHECK(topo.n_relays() == 2);
    CHECK(topo.capacity(0, 1) == doctest::Approx(1.0));
    CHECK(topo.capacity(0, 3) == doctest::Approx(1.0 / 9.0));
    CHECK(topo.capacity(3, 0) == doctest::Approx(1.0 / 9.0));

    LineConfig bad = cfg;
    bad.relay_x.push_back(2.0);  // co-located with an existing relay
    CHECK_THROWS_AS(line_topology(bad), std::invalid_argument);
}

TEST_CASE("line_delay_recursion") {
    SUBCASE("first stages by hand") {
        auto d = line_delay_recursion(2, 1.0, 1.0);
        REQUIRE(d.size() == 3);
        CHECK(d[0] == doctest::Approx(1.0));
        CHECK(d[1] == doctest::Approx(0.75));
        CHECK(d[2] == doctest::Approx(1.0 - 1.0 / 9.0 - 0.75 / 4.0));
    }
    SUBCASE("theta and i_max scale the durations") {
        auto base = line_delay_recursion(3, 1.0, 1.0);
        auto scaled = line_delay_recursion(3, 2.0, 3.0);
        for (std::size_t i = 0; i < base.size(); ++i)
            CHECK(scaled[i] == doctest::Approx(base[i] * 3.0 / 2.0));
    }
    SUBCASE("truncation drops transmitters beyond the radius") {
        auto full = line_delay_recursion(3, 1.0, 1.0);
        auto trunc = line_delay_recursion(3, 1.0, 1.0, 3.0);
        CHECK(trunc[0] == full[0]);
        CHECK(trunc[1] == full[1]);
        CHECK(trunc[2] == full[2]);
        // Stage 3 loses the source contribution (distance 4).
        CHECK(trunc[3] == doctest::Approx(1.0 - trunc[1] / 9.0 - trunc[2] / 4.0));
        CHECK(trunc[3] > full[3]);
    }
}

TEST_CASE("solve_line") {
    SUBCASE("equal spacing matches the recursion") {
        for (int n : {0, 1, 2, 4, 8}) {
            auto sol = solve_line(equal_spacing(n));
            auto d = line_delay_recursion(n, 1.0, 1.0);
            CHECK(sol.delay ==
                  doctest::Approx(std::accumulate(d.begin(), d.end(), 0.0)).epsilon(1e-12));
            CHECK(static_cast<int>(sol.relay_set.size()) == n);
        }
    }
    SUBCASE("relays outside the segment are excluded") {
        LineConfig cfg = equal_spacing(2);
        cfg.relay_x.push_back(-1.5);
        cfg.relay_x.push_back(4.5);
        auto sol = solve_line(cfg);
        CHECK(sol.relay_set == std::set<NodeId>{1, 2});
    }
    SUBCASE("the between set is optimal over all subsets") {
        for (int n : {1, 2, 3, 4}) {
            LineConfig cfg = equal_spacing(n);
            cfg.relay_x.push_back(-1.0);  // one decoy behind the source
            auto line = solve_line(cfg);
            auto brute = solve_min_delay(line_topology(cfg));
            REQUIRE(brute);
            CHECK(line.delay == doctest::Approx(brute->delay).epsilon(1e-12));
        }
    }
}

TEST_CASE("delay_ratio") {
    SUBCASE("accumulation always beats hop-by-hop") {
        for (int n : {1, 2, 5, 10, 50}) {
            auto r = delay_ratio(n);
            CHECK(r.ratio < 1.0);
            CHECK(r.ratio <= r.asymptotic_bound + 1e-9);
        }
    }
    SUBCASE("bound formula") {
        auto r = delay_ratio(3);
        CHECK(r.asymptotic_bound ==
              doctest::Approx((4.0 + 0.25 + 2.0 / 9.0) / (4.0 * (1.0 + 0.25 + 1.0 / 9.0))));
    }
    SUBCASE("both tend to 36/49 for long lines") {
        auto r = delay_ratio(400);
        CHECK(r.asymptotic_bound == doctest::Approx(36.0 / 49.0).epsilon(1e-2));
        CHECK(r.ratio == doctest::Approx(36.0 / 49.0).epsilon(1e-2));
    }
}
