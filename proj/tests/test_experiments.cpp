#include "doctest.h"

#include "tempograph/experiments.hpp"
#include "tempograph/generators.hpp"

#include <cmath>

using namespace tempograph;

TEST_CASE("least squares recovers a known slope") {
    std::vector<double> xs{1, 2, 3, 4, 5};
    std::vector<double> ys;
    for (double x : xs) ys.push_back(3.0 + 2.5 * x);
    CHECK(least_squares_slope(xs, ys) == doctest::Approx(2.5));
}

TEST_CASE("spearman spots monotone relationships and ties") {
    std::vector<double> xs{1, 2, 3, 4, 5, 6};
    std::vector<double> up{2, 9, 11, 30, 31, 40};
    std::vector<double> down{9, 7, 5.5, 4, 2, 1};
    CHECK(spearman(xs, up) == doctest::Approx(1.0));
    CHECK(spearman(xs, down) == doctest::Approx(-1.0));
    std::vector<double> tied{1, 1, 2, 2, 3, 3};
    CHECK(spearman(xs, tied) > 0.9);
}

TEST_CASE("median handles both parities") {
    CHECK(median({3, 1, 2}) == doctest::Approx(2.0));
    CHECK(median({4, 1, 2, 3}) == doctest::Approx(2.5));
}

TEST_CASE("discovery experiments recount their transcript") {
    TemporalGraph g = gen_ert({15, 0.3, 8, 5});
    ExperimentRow row = run_discovery_experiment(g, 2, 0.3, 5, false);
    CHECK(row.won);
    CHECK(row.rounds_total == row.rounds_discovery + row.rounds_exploration);
    CHECK(row.m == g.instance_count());
    CHECK(row.components >= 1);
}

TEST_CASE("sweeps are reproducible byte for byte") {
    SweepSpec spec;
    spec.n_values = {10, 15};
    spec.p_values = {0.2, 0.5};
    spec.tmax_over_n = {0.5, 2.0};
    spec.delta_over_tmax = {0.3};
    spec.trials = 2;
    spec.master_seed = 31;

    SweepResult a = run_sweep(spec);
    SweepResult b = run_sweep(spec);
    REQUIRE(a.rows.size() == b.rows.size());
    std::string csv_a = experiment_row_header(), csv_b = experiment_row_header();
    for (const ExperimentRow& r : a.rows) csv_a += "\n" + to_csv(r);
    for (const ExperimentRow& r : b.rows) csv_b += "\n" + to_csv(r);
    CHECK(csv_a == csv_b);
    for (const ExperimentRow& r : a.rows) CHECK(r.won);
}

TEST_CASE("sweep summaries expose the hypothesis statistics") {
    SweepSpec spec = SweepSpec::quick_grid();
    spec.n_values = {15, 25};
    spec.p_values = {0.1, 0.4};
    spec.tmax_over_n = {0.5, 3.0};
    spec.trials = 2;
    SweepResult res = run_sweep(spec);
    CHECK(res.summary.slope_rounds_vs_m > 0.0);
    CHECK_FALSE(res.summary.threshold_curve.empty());
    // denser graphs spend a smaller share on component discovery
    CHECK(res.summary.spearman_discovery_share_vs_p < 0.0);
}

TEST_CASE("detect rows format as the documented schema") {
    DetectTrialRow row;
    row.trial = 3;
    row.n = 64;
    row.algorithm = "watch_all";
    row.behavior = "consistent";
    row.knowledge = "known_static";
    row.won = true;
    row.price = 128;
    row.rounds = 2;
    row.rng_seed = 17;
    CHECK(detect_row_header() == "trial,n,algorithm,behavior,knowledge,won,price,rounds,rng_seed");
    CHECK(to_csv(row) == "3,64,watch_all,consistent,known_static,1,128,2,17");
}
