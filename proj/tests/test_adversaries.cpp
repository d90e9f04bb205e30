#include "doctest.h"
#include "oracles.hpp"

#include "tempograph/adversaries.hpp"
#include "tempograph/components.hpp"
#include "tempograph/discovery.hpp"
#include "tempograph/generators.hpp"

#include <cmath>

using namespace tempograph;

namespace {

DiscoveryConfig lazy_cfg(int n, int tmax, int delta, int k,
                         KnowledgeMode knowledge = KnowledgeMode::KnownStatic,
                         EdgeMode mode = EdgeMode::Simple) {
    DiscoveryConfig cfg;
    cfg.n = n;
    cfg.tmax = tmax;
    cfg.params = {delta, k};
    cfg.knowledge = knowledge;
    cfg.edge_mode = mode;
    cfg.cross_check = false;
    return cfg;
}

} // namespace

TEST_CASE("the honest adversary finalizes consistently by construction") {
    Rng rng(3);
    for (int trial = 0; trial < 20; ++trial) {
        TemporalGraph g = oracles::random_graph(rng, 7, 6, 0.5);
        if (g.n == 0) continue;
        DiscoveryConfig cfg = lazy_cfg(g.n, g.tmax, rng.uniform_int(1, 3), 1);
        cfg.edge_mode = g.mode;
        auto d = discovery_follow_discoverer(false);
        auto a = honest_adversary(g, cfg.params);
        DiscoveryTranscript tr = run_discovery_game(*d, *a, cfg);
        CHECK(tr.finalize_consistent);
        CHECK(tr.verdict.discoverer_wins);
    }
}

TEST_CASE("hub path adversary forces the potential bound on brute force") {
    for (int delta : {1, 2}) {
        for (int k : {1, 2}) {
            int n = 8, tmax = 8;
            DiscoveryConfig cfg = lazy_cfg(n, tmax, delta, k);
            auto d = brute_force_discoverer();
            auto a = hub_path_adversary(n, tmax, cfg.params);
            DiscoveryTranscript tr = run_discovery_game(*d, *a, cfg);
            // batched seeds can shadow each other, so the win is only
            // guaranteed for the paper's single-seed schedule
            if (k == 1) CHECK(tr.verdict.discoverer_wins);
            CHECK(tr.finalize_consistent);
            long long bound = static_cast<long long>(n) * (tmax - 3) / (2 * delta * k);
            CHECK(tr.rounds_total() >= bound);
        }
    }
}

TEST_CASE("hub path adversary also holds off discovery follow") {
    int n = 8, tmax = 8, delta = 1, k = 1;
    DiscoveryConfig cfg = lazy_cfg(n, tmax, delta, k);
    auto d = discovery_follow_discoverer(false);
    auto a = hub_path_adversary(n, tmax, cfg.params);
    DiscoveryTranscript tr = run_discovery_game(*d, *a, cfg);
    CHECK(tr.verdict.discoverer_wins);
    CHECK(tr.finalize_consistent);
    CHECK(tr.rounds_total() >= static_cast<long long>(n) * (tmax - 3) / (2 * delta * k));
}

TEST_CASE("the potential over template edges drops by at most delta*k per round") {
    int n = 10, tmax = 9;
    for (int delta : {1, 3}) {
        for (int k : {1, 2}) {
            DiscoveryConfig cfg = lazy_cfg(n, tmax, delta, k);
            auto d = brute_force_discoverer();
            auto a = hub_path_adversary(n, tmax, cfg.params);
            DiscoveryTranscript tr = run_discovery_game(*d, *a, cfg);
            if (k == 1) REQUIRE(tr.verdict.discoverer_wins);

            HubFamily fam = build_hub_family(n, tmax);
            std::vector<std::pair<PairKey, int>> relevant;
            for (size_t i = 0; i < fam.graph.edges.size(); ++i)
                if (!fam.fixed[i])
                    relevant.push_back({PairKey(fam.graph.edges[i].u, fam.graph.edges[i].v), 1});
            LabelKnowledge phi(n, tmax, delta, EdgeMode::Simple, KnowledgeMode::KnownStatic,
                               relevant);
            long long prev = phi.phi();
            for (const DiscoveryRound& r : tr.rounds) {
                phi.apply_round(r.seeds, &r.log, r.times);
                CHECK(prev - phi.phi() <= static_cast<long long>(delta) * k);
                prev = phi.phi();
            }
        }
    }
}

TEST_CASE("unknown graph adversary forces the nodes-only bound") {
    int n = 8, tmax = 8, delta = 2, k = 1, m = 8;
    DiscoveryConfig cfg = lazy_cfg(n, tmax, delta, k, KnowledgeMode::NodesOnly);
    auto d = brute_force_discoverer();
    auto a = unknown_graph_adversary(n, m, tmax, cfg.params);
    DiscoveryTranscript tr = run_discovery_game(*d, *a, cfg);
    CHECK(tr.verdict.discoverer_wins);
    CHECK(tr.finalize_consistent);
    CHECK(tr.rounds_total() >= static_cast<long long>(n) * tmax / (2 * delta * k));

    TemporalGraph fin = a->finalize();
    CHECK(fin.instance_count() == m);
    CHECK(delta_edge_components(fin, delta).count <= 2);
}

TEST_CASE("the unknown graph bound instantiates to 6 at n=4") {
    // floor(n * tmax / (2 * delta * k)) with n=4, tmax=3, delta=1, k=1
    CHECK(4 * 3 / 2 == 6);
    int n = 4, tmax = 3, m = 1;
    DiscoveryConfig cfg = lazy_cfg(n, tmax, 1, 1, KnowledgeMode::NodesOnly);
    auto d = brute_force_discoverer();
    auto a = unknown_graph_adversary(n, m, tmax, cfg.params);
    DiscoveryTranscript tr = run_discovery_game(*d, *a, cfg);
    CHECK(tr.verdict.discoverer_wins);
    CHECK(tr.rounds_total() >= 6);
}

TEST_CASE("multilabel adversary forces the vertex-cover bound") {
    int n = 8, tmax = 8, delta = 2, k = 1, m = 10;
    DiscoveryConfig cfg = lazy_cfg(n, tmax, delta, k, KnowledgeMode::KnownStatic,
                                   EdgeMode::Multilabel);
    auto d = brute_force_discoverer();
    auto a = multilabel_adversary(n, m, tmax, cfg.params);
    DiscoveryTranscript tr = run_discovery_game(*d, *a, cfg);
    CHECK(tr.verdict.discoverer_wins);
    CHECK(tr.finalize_consistent);
    long long bound = static_cast<long long>(std::min(n / 2, m)) * tmax / (delta * k);
    CHECK(tr.rounds_total() >= bound);
}

TEST_CASE("the balanced edge set keeps degrees near m/n") {
    for (int n : {6, 10, 16}) {
        for (int m : {5, 12, 20}) {
            if (m > n * (n - 1) / 2) continue;
            std::vector<PairKey> edges = build_balanced_edge_set(n, m);
            CHECK(static_cast<int>(edges.size()) == m);
            std::vector<int> degree(n, 0);
            for (const PairKey& e : edges) {
                ++degree[e.a];
                ++degree[e.b];
            }
            int max_degree = *std::max_element(degree.begin(), degree.end());
            // the greedy balances to within one of the average degree 2m/n;
            // a ceil(m/n) cap is impossible once m reaches n by handshake
            CHECK(max_degree <= (2 * m + n - 1) / n + 1);
        }
    }
}

TEST_CASE("multilabel finalize stays consistent and adds one extra label") {
    int n = 6, tmax = 5, m = 7;
    SirParams params{1, 1};
    DiscoveryConfig cfg = lazy_cfg(n, tmax, 1, 1, KnowledgeMode::KnownStatic,
                                   EdgeMode::Multilabel);
    auto d = brute_force_discoverer();
    auto a = multilabel_adversary(n, m, tmax, params);
    DiscoveryTranscript tr = run_discovery_game(*d, *a, cfg);
    CHECK(tr.finalize_consistent);
    TemporalGraph fin = a->finalize();
    CHECK(fin.instance_count() == m + 1); // every edge at 1 plus the extra
    CHECK(delta_edge_components(fin, 1).count <= 2);
}
