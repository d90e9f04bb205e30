#pragma once

#include "tempograph/discovery.hpp"
#include "tempograph/source_detection.hpp"

#include <cstdint>
#include <string>
#include <tuple>
#include <vector>

namespace tempograph {

// ---- statistics helpers ----

// slope of the least-squares line y = a + b x
double least_squares_slope(const std::vector<double>& xs, const std::vector<double>& ys);
// Spearman rank correlation with average ranks on ties
double spearman(const std::vector<double>& xs, const std::vector<double>& ys);
double median(std::vector<double> values);

// ---- discovery sweep ----

struct SweepSpec {
    std::vector<int> n_values;
    std::vector<double> p_values;
    std::vector<double> tmax_over_n;   // tmax = max(1, round(ratio * n))
    std::vector<double> delta_over_tmax; // delta = max(1, round(ratio * tmax)); <= tmax kept
    bool include_delta_one = true;
    int trials = 5;
    std::uint64_t master_seed = 1;
    bool skip_redundant = true;

    // the grid used in the experimental evaluation (large; hours of runtime)
    static SweepSpec paper_grid();
    // a small grid suitable for smoke runs
    static SweepSpec quick_grid();
};

struct ExperimentRow {
    int n = 0;
    double p = -1.0; // -1 when the instance came from a file
    int tmax = 1;
    int delta = 1;
    int m = 0;          // edge instances
    int components = 0; // delta-edge connected components
    double mean_component_size = 0.0;
    long long rounds_total = 0;
    long long rounds_discovery = 0;
    long long rounds_exploration = 0;
    std::uint64_t rng_seed = 0;
    bool won = false;
};

std::string experiment_row_header();
std::string to_csv(const ExperimentRow& row);

// One discovery game against the honest adversary on the given graph.
ExperimentRow run_discovery_experiment(const TemporalGraph& graph, int delta, double p,
                                       std::uint64_t seed, bool skip_redundant,
                                       FeedbackMode feedback = FeedbackMode::FullLog,
                                       const std::string& algorithm = "discovery_follow");

struct SweepSummary {
    double slope_rounds_vs_m = 0.0;
    double spearman_discovery_share_vs_p = 0.0;
    double spearman_mean_component_vs_ratio = 0.0; // vs np/tmax
    // discovery share by np/tmax, averaged per distinct ratio, ratio-sorted
    std::vector<std::pair<double, double>> threshold_curve;
    // least-squares slope per (p, tmax/n) facet
    std::vector<std::tuple<double, double, double>> facet_slopes;
};

struct SweepResult {
    std::vector<ExperimentRow> rows;
    SweepSummary summary;
};

SweepResult run_sweep(const SweepSpec& spec);
SweepSummary summarize_sweep(const std::vector<ExperimentRow>& rows);

// ---- source detection trial batches ----

struct DetectTrialRow {
    int trial = 0;
    int n = 0;
    std::string algorithm;
    std::string behavior;
    std::string knowledge;
    bool won = false;
    long long price = 0;
    long long rounds = 0;
    std::uint64_t rng_seed = 0;
    SourceMetrics metrics;
};

std::string detect_row_header();
std::string to_csv(const DetectTrialRow& row);

struct DetectSummary {
    int trials = 0;
    double success_rate = 0.0;
    double median_price = 0.0;
    double median_rounds = 0.0;
    long long max_rounds = 0;
    long long max_phases = 0;
};

DetectSummary summarize_detect(const std::vector<DetectTrialRow>& rows);

} // namespace tempograph
