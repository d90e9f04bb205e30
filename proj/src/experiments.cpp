#include "tempograph/experiments.hpp"

#include "tempograph/adversaries.hpp"
#include "tempograph/components.hpp"
#include "tempograph/generators.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <sstream>
#include <stdexcept>

namespace tempograph {

double least_squares_slope(const std::vector<double>& xs, const std::vector<double>& ys) {
    if (xs.size() != ys.size() || xs.size() < 2)
        throw std::invalid_argument("need two or more points");
    double mx = 0, my = 0;
    for (size_t i = 0; i < xs.size(); ++i) {
        mx += xs[i];
        my += ys[i];
    }
    mx /= xs.size();
    my /= ys.size();
    double num = 0, den = 0;
    for (size_t i = 0; i < xs.size(); ++i) {
        num += (xs[i] - mx) * (ys[i] - my);
        den += (xs[i] - mx) * (xs[i] - mx);
    }
    if (den == 0) throw std::invalid_argument("degenerate x values");
    return num / den;
}

namespace {

std::vector<double> average_ranks(const std::vector<double>& v) {
    std::vector<size_t> idx(v.size());
    for (size_t i = 0; i < idx.size(); ++i) idx[i] = i;
    std::sort(idx.begin(), idx.end(), [&](size_t a, size_t b) { return v[a] < v[b]; });
    std::vector<double> ranks(v.size());
    size_t i = 0;
    while (i < idx.size()) {
        size_t j = i;
        while (j + 1 < idx.size() && v[idx[j + 1]] == v[idx[i]]) ++j;
        double rank = (static_cast<double>(i) + static_cast<double>(j)) / 2.0 + 1.0;
        for (size_t k = i; k <= j; ++k) ranks[idx[k]] = rank;
        i = j + 1;
    }
    return ranks;
}

} // namespace

double spearman(const std::vector<double>& xs, const std::vector<double>& ys) {
    if (xs.size() != ys.size() || xs.size() < 2)
        throw std::invalid_argument("need two or more points");
    std::vector<double> rx = average_ranks(xs), ry = average_ranks(ys);
    double mx = 0, my = 0;
    for (size_t i = 0; i < rx.size(); ++i) {
        mx += rx[i];
        my += ry[i];
    }
    mx /= rx.size();
    my /= ry.size();
    double num = 0, dx = 0, dy = 0;
    for (size_t i = 0; i < rx.size(); ++i) {
        num += (rx[i] - mx) * (ry[i] - my);
        dx += (rx[i] - mx) * (rx[i] - mx);
        dy += (ry[i] - my) * (ry[i] - my);
    }
    if (dx == 0 || dy == 0) return 0.0;
    return num / std::sqrt(dx * dy);
}

double median(std::vector<double> values) {
    if (values.empty()) throw std::invalid_argument("median of nothing");
    std::sort(values.begin(), values.end());
    size_t mid = values.size() / 2;
    return values.size() % 2 ? values[mid] : (values[mid - 1] + values[mid]) / 2.0;
}

SweepSpec SweepSpec::paper_grid() {
    SweepSpec s;
    for (int n = 1; n <= 100; n += 5) s.n_values.push_back(n);
    s.p_values = {0.01, 0.05, 0.1, 0.15, 0.2, 0.25, 0.3, 0.35, 0.4, 0.5, 0.7, 0.9};
    s.tmax_over_n = {0.05, 0.1, 0.2, 0.3, 0.4, 0.5, 0.7, 0.9, 1.0, 2.0, 3.0, 5.0, 7.0, 10.0};
    s.delta_over_tmax = {0.01, 0.05, 0.1, 0.3, 0.5};
    s.include_delta_one = true;
    s.trials = 5;
    return s;
}

SweepSpec SweepSpec::quick_grid() {
    SweepSpec s;
    s.n_values = {20, 30, 40};
    s.p_values = {0.05, 0.1, 0.2, 0.4, 0.7};
    s.tmax_over_n = {0.1, 0.5, 1.0, 3.0, 10.0};
    s.delta_over_tmax = {0.1, 0.5};
    s.include_delta_one = true;
    s.trials = 3;
    return s;
}

std::string experiment_row_header() {
    return "n,p,tmax,delta,m,components,mean_component_size,rounds_total,rounds_discovery,"
           "rounds_exploration,rng_seed,won";
}

std::string to_csv(const ExperimentRow& r) {
    std::ostringstream out;
    out << r.n << ',' << r.p << ',' << r.tmax << ',' << r.delta << ',' << r.m << ','
        << r.components << ',' << r.mean_component_size << ',' << r.rounds_total << ','
        << r.rounds_discovery << ',' << r.rounds_exploration << ',' << r.rng_seed << ','
        << (r.won ? 1 : 0);
    return out.str();
}

ExperimentRow run_discovery_experiment(const TemporalGraph& graph, int delta, double p,
                                       std::uint64_t seed, bool skip_redundant,
                                       FeedbackMode feedback, const std::string& algorithm) {
    ExperimentRow row;
    row.n = graph.n;
    row.p = p;
    row.tmax = graph.tmax;
    row.delta = delta;
    row.m = graph.instance_count();
    DeltaComponents comps = delta_edge_components(graph, delta);
    row.components = comps.count;
    row.mean_component_size = comps.mean_size();
    row.rng_seed = seed;

    DiscoveryConfig cfg;
    cfg.feedback = feedback;
    cfg.knowledge = KnowledgeMode::KnownStatic;
    cfg.edge_mode = graph.mode;
    cfg.params = {delta, 1};
    cfg.n = graph.n;
    cfg.tmax = graph.tmax;

    std::unique_ptr<DiscovererStrategy> d;
    if (algorithm == "brute")
        d = brute_force_discoverer();
    else if (algorithm == "discovery_follow" || algorithm == "follow")
        d = discovery_follow_discoverer(skip_redundant);
    else
        throw std::invalid_argument("unknown discovery algorithm: " + algorithm);

    auto a = honest_adversary(graph, cfg.params);
    DiscoveryTranscript tr = run_discovery_game(*d, *a, cfg);
    row.rounds_total = tr.rounds_total();
    row.rounds_discovery = tr.rounds_in_phase(Phase::ComponentDiscovery);
    row.rounds_exploration = tr.rounds_in_phase(Phase::ComponentExploration);
    row.won = tr.verdict.discoverer_wins;
    return row;
}

SweepSummary summarize_sweep(const std::vector<ExperimentRow>& rows) {
    SweepSummary sum;
    std::vector<double> ms, rounds, ps, shares, ratios, comp_sizes;
    std::map<double, std::pair<double, int>> by_ratio;
    std::map<std::pair<double, double>, std::pair<std::vector<double>, std::vector<double>>> facets;
    for (const ExperimentRow& r : rows) {
        if (r.m == 0 || r.rounds_total == 0) continue;
        double share = static_cast<double>(r.rounds_discovery) / r.rounds_total;
        double ratio = r.n * r.p / r.tmax;
        ms.push_back(r.m);
        rounds.push_back(static_cast<double>(r.rounds_total));
        ps.push_back(r.p);
        shares.push_back(share);
        ratios.push_back(ratio);
        comp_sizes.push_back(r.mean_component_size);
        auto& acc = by_ratio[ratio];
        acc.first += share;
        acc.second += 1;
        auto& facet = facets[{r.p, static_cast<double>(r.tmax) / r.n}];
        facet.first.push_back(r.m);
        facet.second.push_back(static_cast<double>(r.rounds_total));
    }
    if (ms.size() >= 2) {
        sum.slope_rounds_vs_m = least_squares_slope(ms, rounds);
        sum.spearman_discovery_share_vs_p = spearman(ps, shares);
        sum.spearman_mean_component_vs_ratio = spearman(ratios, comp_sizes);
    }
    for (const auto& [ratio, acc] : by_ratio)
        sum.threshold_curve.push_back({ratio, acc.first / acc.second});
    for (const auto& [key, data] : facets) {
        bool distinct = false;
        for (double x : data.first)
            if (x != data.first.front()) distinct = true;
        if (data.first.size() >= 2 && distinct)
            sum.facet_slopes.push_back(
                {key.first, key.second, least_squares_slope(data.first, data.second)});
    }
    return sum;
}

SweepResult run_sweep(const SweepSpec& spec) {
    SweepResult res;
    std::uint64_t cell = 0;
    for (int n : spec.n_values)
        for (double p : spec.p_values)
            for (double tn : spec.tmax_over_n) {
                int tmax = std::max(1, static_cast<int>(std::lround(tn * n)));
                std::vector<int> deltas;
                if (spec.include_delta_one) deltas.push_back(1);
                for (double dt : spec.delta_over_tmax) {
                    int delta = std::max(1, static_cast<int>(std::lround(dt * tmax)));
                    if (delta <= tmax &&
                        std::find(deltas.begin(), deltas.end(), delta) == deltas.end())
                        deltas.push_back(delta);
                }
                for (int delta : deltas) {
                    for (int trial = 0; trial < spec.trials; ++trial) {
                        std::uint64_t seed =
                            Rng::trial_seed(spec.master_seed, cell * 1000003ULL + trial);
                        ErtParams params{n, p, tmax, seed};
                        TemporalGraph g = gen_ert(params);
                        res.rows.push_back(run_discovery_experiment(
                            g, delta, p, seed, spec.skip_redundant, FeedbackMode::FullLog,
                            "discovery_follow"));
                    }
                    ++cell;
                }
            }
    res.summary = summarize_sweep(res.rows);
    return res;
}

std::string detect_row_header() {
    return "trial,n,algorithm,behavior,knowledge,won,price,rounds,rng_seed";
}

std::string to_csv(const DetectTrialRow& r) {
    std::ostringstream out;
    out << r.trial << ',' << r.n << ',' << r.algorithm << ',' << r.behavior << ',' << r.knowledge
        << ',' << (r.won ? 1 : 0) << ',' << r.price << ',' << r.rounds << ',' << r.rng_seed;
    return out.str();
}

DetectSummary summarize_detect(const std::vector<DetectTrialRow>& rows) {
    DetectSummary sum;
    sum.trials = static_cast<int>(rows.size());
    if (rows.empty()) return sum;
    std::vector<double> prices, rounds;
    int wins = 0;
    for (const DetectTrialRow& r : rows) {
        if (r.won) ++wins;
        prices.push_back(static_cast<double>(r.price));
        rounds.push_back(static_cast<double>(r.rounds));
        sum.max_rounds = std::max(sum.max_rounds, r.rounds);
        sum.max_phases = std::max(sum.max_phases, r.metrics.phases);
    }
    sum.success_rate = static_cast<double>(wins) / rows.size();
    sum.median_price = median(prices);
    sum.median_rounds = median(rounds);
    return sum;
}

} // namespace tempograph
