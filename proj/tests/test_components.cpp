#include "doctest.h"
#include "oracles.hpp"

#include "tempograph/components.hpp"

using namespace tempograph;

namespace {

TemporalGraph two_edge_graph() {
    TemporalGraph g;
    g.n = 3;
    g.tmax = 5;
    g.edges = {{0, 1, 1}, {1, 2, 5}};
    return g;
}

} // namespace

TEST_CASE("delta components split and merge with delta") {
    CHECK(delta_edge_components(two_edge_graph(), 2).count == 2);
    CHECK(delta_edge_components(two_edge_graph(), 4).count == 1);

    TemporalGraph single;
    single.n = 2;
    single.tmax = 3;
    single.edges = {{0, 1, 2}};
    CHECK(delta_edge_components(single, 1).count == 1);
    CHECK(delta_edge_components(single, 100).count == 1);
}

TEST_CASE("delta components match the pairwise closure oracle") {
    Rng rng(23);
    for (int trial = 0; trial < 300; ++trial) {
        TemporalGraph g = oracles::random_graph(rng, 10, 8, 0.5,
                                                trial % 3 == 0 ? EdgeMode::Multiedge
                                                               : EdgeMode::Simple);
        int delta = rng.uniform_int(1, 6);
        DeltaComponents lib = delta_edge_components(g, delta);
        std::vector<int> ref = oracles::ref_components(g, delta);
        REQUIRE(lib.assignment.size() == ref.size());
        CHECK(lib.assignment == ref);
    }
}

TEST_CASE("raising delta never increases the component count") {
    Rng rng(29);
    for (int trial = 0; trial < 100; ++trial) {
        TemporalGraph g = oracles::random_graph(rng, 10, 10, 0.4);
        int prev = g.instance_count() + 1;
        for (int delta = 1; delta <= g.tmax; ++delta) {
            int count = delta_edge_components(g, delta).count;
            CHECK(count <= prev);
            prev = count;
        }
    }
}

TEST_CASE("a single seed's log stays inside one component") {
    Rng rng(31);
    for (int trial = 0; trial < 150; ++trial) {
        TemporalGraph g = oracles::random_graph(rng, 8, 8, 0.5);
        if (g.n == 0) continue;
        int delta = rng.uniform_int(1, 4);
        DeltaComponents comps = delta_edge_components(g, delta);
        Seed seed{rng.uniform_int(0, g.n - 1), rng.uniform_int(0, g.tmax)};
        InfectionLog log = simulate(g, {seed}, {delta, 1});
        int component = -1;
        for (const LogEntry& e : log.entries) {
            if (e.is_seed()) continue;
            int idx = find_instance(g, e.infector, e.infectee, e.time);
            REQUIRE(idx >= 0);
            if (component < 0) component = comps.assignment[idx];
            CHECK(comps.assignment[idx] == component);
        }
    }
}

TEST_CASE("temporal paths need strictly increasing labels") {
    TemporalGraph g;
    g.n = 3;
    g.tmax = 2;
    g.edges = {{0, 1, 1}, {1, 2, 2}};
    CHECK(is_temporal_path(g, {0, 1, 2}));

    g.edges = {{0, 1, 2}, {1, 2, 1}};
    CHECK_FALSE(is_temporal_path(g, {0, 1, 2}));

    CHECK(is_temporal_path(g, {1}));
    CHECK_FALSE(is_temporal_path(g, {0, 2}));
}

TEST_CASE("temporal paths pick labels greedily in multi modes") {
    TemporalGraph g;
    g.n = 3;
    g.tmax = 5;
    g.mode = EdgeMode::Multiedge;
    g.edges = {{0, 1, 1}, {0, 1, 4}, {1, 2, 3}};
    CHECK(is_temporal_path(g, {0, 1, 2}));  // 1 then 3
    CHECK(is_temporal_path(g, {2, 1, 0}));  // 3 then 4
}

TEST_CASE("ideal patient zero enumeration") {
    TemporalGraph g;
    g.n = 3;
    g.tmax = 2;
    g.edges = {{0, 1, 1}, {1, 2, 2}};
    auto found = find_ideal_patient_zero(g, {1, 1});
    REQUIRE(found.has_value());
    CHECK(*found == Seed{0, 0});

    TemporalGraph isolated;
    isolated.n = 2;
    isolated.tmax = 1;
    CHECK_FALSE(find_ideal_patient_zero(isolated, {1, 1}).has_value());

    TemporalGraph lonely;
    lonely.n = 1;
    lonely.tmax = 1;
    auto self = find_ideal_patient_zero(lonely, {1, 1});
    REQUIRE(self.has_value());
    CHECK(*self == Seed{0, 0});
}

TEST_CASE("ideal patient zero does not depend on tie breaks") {
    Rng rng(37);
    for (int trial = 0; trial < 80; ++trial) {
        TemporalGraph g = oracles::random_graph(rng, 7, 6, 0.5);
        if (g.n == 0) continue;
        SirParams params{rng.uniform_int(1, 3), 1};
        for (int v = 0; v < g.n; ++v)
            for (int t = 0; t <= g.tmax; ++t) {
                int low = simulate(g, {{v, t}}, params, TieBreak::LowestInfector).infected_count();
                int high =
                    simulate(g, {{v, t}}, params, TieBreak::HighestInfector).infected_count();
                CHECK(low == high);
            }
    }
}

// The naive "seed just below an adjacent label" heuristic misses some
// instances: this graph has an ideal patient zero, but no ideal patient zero
// pair is of the form (u, label-1) for an edge at u. Seeding node 0 at the
// label-adjacent times opens its second edge, which derails the chain.
TEST_CASE("some instances have only off-label ideal patient zeros") {
    TemporalGraph g;
    g.n = 4;
    g.tmax = 6;
    g.edges = {{0, 1, 2}, {0, 2, 3}, {1, 2, 4}, {2, 3, 6}};
    SirParams params{2, 1};

    auto ipz = find_ideal_patient_zero(g, params);
    REQUIRE(ipz.has_value());
    CHECK(*ipz == Seed{0, 0});

    // exhaustively: every engulfing pair avoids the (u, label-1) form
    int engulfing = 0;
    for (int v = 0; v < g.n; ++v)
        for (int t = 0; t <= g.tmax; ++t) {
            if (simulate(g, {{v, t}}, params).infected_count() != g.n) continue;
            ++engulfing;
            for (const EdgeInstance& e : g.edges)
                if (e.u == v || e.v == v) CHECK(e.label - 1 != t);
        }
    CHECK(engulfing > 0);
}
