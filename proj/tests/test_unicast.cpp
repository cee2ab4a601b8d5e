#include <doctest.h>

#include <stdexcept>

#include <random>

#include "mia/lp.hpp"
#include "mia/unicast.hpp"
#include "test_util.hpp"

using namespace mia;

namespace {

Topology one_relay_fixture() {
    Topology topo(1, 1.0);
    topo.set_capacity(0, 1, 2.0);   // s -> r
    topo.set_capacity(0, 2, 0.5);   // s -> d
    topo.set_capacity(1, 2, 2.0);   // r -> d
    return topo;
}

}  // namespace

TEST_CASE("greedy_schedule") {
    SUBCASE("empty relay set is the direct link") {
        Topology topo(0, 1.0);
        topo.set_capacity(0, 1, 0.8);
        auto s = greedy_schedule(topo, {});
        REQUIRE(s);
        CHECK(s->stages.size() == 1);
        CHECK(s->total_delay == doctest::Approx(1.0 / 0.8));
    }
    SUBCASE("one relay, hand forward substitution") {
        auto s = greedy_schedule(one_relay_fixture(), {1});
        REQUIRE(s);
        REQUIRE(s->stages.size() == 2);
        CHECK(s->stages[0].transmitter == 0);
        CHECK(s->stages[0].decoder == 1);
        CHECK(s->stages[0].duration == doctest::Approx(0.5));
        CHECK(s->stages[1].transmitter == 1);
        CHECK(s->stages[1].duration == doctest::Approx(0.375));
        CHECK(s->total_delay == doctest::Approx(0.875));
    }
    SUBCASE("zero-capacity cut is infeasible") {
        Topology topo(1, 1.0);
        topo.set_capacity(1, 2, 3.0);  // s reaches nobody
        CHECK_FALSE(greedy_schedule(topo, {1}));
    }
    SUBCASE("decode-time ties go to the smaller node id") {
        Topology topo(2, 1.0);
        topo.set_capacity(0, 1, 1.0);
        topo.set_capacity(0, 2, 1.0);
        topo.set_capacity(1, 3, 1.0);
        topo.set_capacity(2, 3, 1.0);
        auto s = greedy_schedule(topo, {1, 2});
        REQUIRE(s);
        CHECK(s->stages[0].decoder == 1);
    }
}

TEST_CASE("solve_min_delay") {
    SUBCASE("no relays") {
        Topology topo(0, 2.0);
        topo.set_capacity(0, 1, 4.0);
        auto sol = solve_min_delay(topo);
        REQUIRE(sol);
        CHECK(sol->delay == doctest::Approx(0.5));
        CHECK(sol->relay_set.empty());
    }
    SUBCASE("equal-spacing line, n = 2") {
        // C = theta / d^2 on the line 0,1,2,3.
        Topology topo(2, 1.0);
        const double xs[4] = {0, 1, 2, 3};
        for (int i = 0; i < 4; ++i)
            for (int j = 0; j < 4; ++j)
                if (i != j) topo.set_capacity(i, j, 1.0 / ((xs[i] - xs[j]) * (xs[i] - xs[j])));
        auto sol = solve_min_delay(topo);
        REQUIRE(sol);
        CHECK(sol->relay_set == std::set<NodeId>{1, 2});
        const double d0 = 1.0;
        const double d1 = 1.0 - d0 / 4.0;
        const double d2 = 1.0 - d0 / 9.0 - d1 / 4.0;
        CHECK(sol->delay == doctest::Approx(d0 + d1 + d2).epsilon(1e-12));
    }
    SUBCASE("fully disconnected is infeasible") {
        Topology topo(1, 1.0);
        CHECK_FALSE(solve_min_delay(topo));
    }
}

TEST_CASE("traditional_shortest_path") {
    SUBCASE("no relays") {
        Topology topo(0, 1.0);
        topo.set_capacity(0, 1, 0.5);
        auto sp = traditional_shortest_path(topo);
        REQUIRE(sp);
        CHECK(sp->path == std::vector<NodeId>{0, 1});
        CHECK(sp->delay == doctest::Approx(2.0));
    }
    SUBCASE("relay triangle beats the direct link") {
        Topology topo(1, 1.0);
        topo.set_capacity(0, 1, 4.0);
        topo.set_capacity(1, 2, 4.0);
        topo.set_capacity(0, 2, 1.0);
        auto sp = traditional_shortest_path(topo);
        REQUIRE(sp);
        CHECK(sp->path == std::vector<NodeId>{0, 1, 2});
        CHECK(sp->delay == doctest::Approx(0.5));
    }
    SUBCASE("unreachable destination") {
        Topology topo(1, 1.0);
        topo.set_capacity(0, 1, 1.0);
        CHECK_FALSE(traditional_shortest_path(topo));
    }
}

TEST_CASE("schedules replay through accumulate") {
    std::mt19937_64 rng(11);
    for (int it = 0; it < 100; ++it) {
        const Topology topo = test::random_topology(rng, 4);
        auto sol = solve_min_delay(topo);
        REQUIRE(sol);
        CHECK(test::replay_max_error(topo, sol->schedule.stages) < 1e-9);
    }
}

TEST_CASE("optimum dominates every subset and the shortest path") {
    std::mt19937_64 rng(17);
    for (int it = 0; it < 50; ++it) {
        const Topology topo = test::random_topology(rng, 5);
        auto opt = solve_min_delay(topo);
        auto sp = traditional_shortest_path(topo);
        REQUIRE(opt);
        REQUIRE(sp);
        CHECK(sp->delay >= opt->delay - 1e-9);

        std::set<NodeId> random_subset;
        for (NodeId r = 1; r <= topo.n_relays(); ++r)
            if (rng() & 1) random_subset.insert(r);
        auto sub = greedy_schedule(topo, random_subset);
        REQUIRE(sub);
        CHECK(sub->total_delay >= opt->delay - 1e-9);
    }
}

TEST_CASE("adding capacity never hurts") {
    std::mt19937_64 rng(23);
    std::uniform_real_distribution<double> bump(0.01, 2.0);
    for (int it = 0; it < 40; ++it) {
        Topology topo = test::random_topology(rng, 4);
        auto before = solve_min_delay(topo);
        REQUIRE(before);
        const int nc = topo.node_count();
        int i = static_cast<int>(rng() % nc), j = static_cast<int>(rng() % nc);
        if (i == j) j = (j + 1) % nc;
        topo.set_capacity(i, j, topo.capacity(i, j) + bump(rng));
        auto after = solve_min_delay(topo);
        REQUIRE(after);
        CHECK(after->delay <= before->delay + 1e-9);
    }
}

TEST_CASE("bound pruning does not change the result") {
    std::mt19937_64 rng(31);
    for (int it = 0; it < 30; ++it) {
        const Topology topo = test::random_topology(rng, 5);
        auto plain = solve_min_delay(topo);
        SolveOptions opts;
        opts.prune = true;
        auto pruned = solve_min_delay(topo, opts);
        REQUIRE(plain);
        REQUIRE(pruned);
        CHECK(pruned->delay == plain->delay);
        CHECK(pruned->relay_set == plain->relay_set);
    }
}

TEST_CASE("greedy matches the LP oracle on small instances") {
    std::mt19937_64 rng(37);
    for (int it = 0; it < 20; ++it) {
        const Topology topo = test::random_topology(rng, 4);
        auto greedy = solve_min_delay(topo);
        auto oracle = exhaustive_unicast(topo);
        REQUIRE(greedy);
        REQUIRE(oracle);
        CHECK(greedy->delay == doctest::Approx(oracle->delay).epsilon(1e-6));
    }
}
