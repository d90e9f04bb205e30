// tempograph: SIR spreading games on temporal graphs from the command line.

#include "CLI11.hpp"

#include "tempograph/adversaries.hpp"
#include "tempograph/components.hpp"
#include "tempograph/discovery.hpp"
#include "tempograph/experiments.hpp"
#include "tempograph/generators.hpp"
#include "tempograph/io.hpp"
#include "tempograph/source_detection.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

using namespace tempograph;

namespace {

struct CommonOpts {
    std::string graph_path;
    int delta = 0; // 0: take the file's delta
    int tmax = 0;
    int k = 1;
    std::uint64_t seed = 1;
    std::string feedback = "log";
    std::string mode;
    std::string out;
};

GraphFile load_graph(const CommonOpts& opts) {
    GraphFile file = read_graph_file(opts.graph_path);
    if (opts.delta > 0) file.delta = opts.delta;
    if (opts.tmax > 0) file.graph.tmax = opts.tmax;
    if (!opts.mode.empty()) {
        auto mode = edge_mode_from_string(opts.mode);
        if (!mode) throw CLI::ValidationError("--mode", "unknown mode " + opts.mode);
        file.graph.mode = *mode;
    }
    if (auto err = validate(file.graph)) throw std::runtime_error("invalid graph: " + *err);
    return file;
}

std::ostream& open_out(std::ofstream& file, const std::string& path) {
    if (path.empty()) return std::cout;
    file.open(path);
    if (!file) throw std::runtime_error("cannot open " + path);
    return file;
}

FeedbackMode parse_feedback(const std::string& s) {
    if (s == "log") return FeedbackMode::FullLog;
    if (s == "times") return FeedbackMode::TimesOnly;
    throw CLI::ValidationError("--feedback", "expected log or times");
}

void add_common(CLI::App* cmd, CommonOpts& opts, bool needs_graph = true) {
    auto* g = cmd->add_option("--graph", opts.graph_path, "temporal edge list file");
    if (needs_graph) g->required();
    cmd->add_option("--delta", opts.delta, "infectious duration (overrides the file)");
    cmd->add_option("--tmax", opts.tmax, "lifetime override");
    cmd->add_option("--k", opts.k, "seeds or watchers per round");
    cmd->add_option("--seed", opts.seed, "rng seed");
    cmd->add_option("--feedback", opts.feedback, "feedback mode: log|times");
    cmd->add_option("--mode", opts.mode, "edge mode override: simple|multilabel|multiedge");
    cmd->add_option("--out", opts.out, "output file (default stdout)");
}

int cmd_simulate(const CommonOpts& opts, const std::vector<std::string>& infections,
                 const std::string& tie) {
    GraphFile file = load_graph(opts);
    SeedSet seeds;
    for (const std::string& spec : infections) {
        auto at = spec.find('@');
        if (at == std::string::npos)
            throw CLI::ValidationError("--infect", "expected node@time, got " + spec);
        seeds.push_back({std::stoi(spec.substr(0, at)), std::stoi(spec.substr(at + 1))});
    }
    SirParams params{file.delta, std::max<int>(opts.k, static_cast<int>(seeds.size()))};
    TieBreak tb = tie == "high" ? TieBreak::HighestInfector : TieBreak::LowestInfector;
    InfectionLog log = simulate(file.graph, seeds, params, tb);

    std::ofstream sink;
    std::ostream& out = open_out(sink, opts.out);
    out << "LOG";
    for (const LogEntry& e : log.entries)
        out << " (" << e.infector << ',' << e.infectee << ',' << e.time << ')';
    out << "\nTIMETABLE";
    Timetable times = project_timetable(log, file.graph.n);
    for (int v = 0; v < file.graph.n; ++v)
        if (times.infected(v)) out << " (" << v << ',' << times.time_of(v) << ')';
    out << "\ninfected " << log.infected_count() << " of " << file.graph.n << "\n";
    return 0;
}

int cmd_components(const CommonOpts& opts) {
    GraphFile file = load_graph(opts);
    DeltaComponents comps = delta_edge_components(file.graph, file.delta);
    std::ofstream sink;
    std::ostream& out = open_out(sink, opts.out);
    out << comps.count << " component" << (comps.count == 1 ? "" : "s") << ", mean size "
        << comps.mean_size() << "\n";
    for (int i = 0; i < file.graph.instance_count(); ++i) {
        const EdgeInstance& e = file.graph.edges[i];
        out << "edge " << e.u << ' ' << e.v << ' ' << e.label << " -> " << comps.assignment[i]
            << "\n";
    }
    return 0;
}

int cmd_ipz(const CommonOpts& opts) {
    GraphFile file = load_graph(opts);
    auto found = find_ideal_patient_zero(file.graph, {file.delta, 1});
    std::ofstream sink;
    std::ostream& out = open_out(sink, opts.out);
    if (found)
        out << "(" << found->node << "," << found->time << ")\n";
    else
        out << "none\n";
    return 0;
}

int cmd_discover(const CommonOpts& opts, const std::string& algorithm, bool skip_redundant,
                 bool print_transcript) {
    GraphFile file = load_graph(opts);
    FeedbackMode feedback = parse_feedback(opts.feedback);

    DiscoveryConfig cfg;
    cfg.feedback = feedback;
    cfg.edge_mode = file.graph.mode;
    cfg.params = {file.delta, opts.k};
    cfg.n = file.graph.n;
    cfg.tmax = file.graph.tmax;

    std::unique_ptr<DiscovererStrategy> d;
    if (algorithm == "brute")
        d = brute_force_discoverer();
    else if (algorithm == "discovery_follow" || algorithm == "follow")
        d = discovery_follow_discoverer(skip_redundant);
    else
        throw CLI::ValidationError("--algorithm", "expected brute or discovery_follow");

    auto a = honest_adversary(file.graph, cfg.params);
    DiscoveryTranscript tr = run_discovery_game(*d, *a, cfg);

    ExperimentRow row;
    row.n = file.graph.n;
    row.p = -1.0;
    row.tmax = file.graph.tmax;
    row.delta = file.delta;
    row.m = file.graph.instance_count();
    DeltaComponents comps = delta_edge_components(file.graph, file.delta);
    row.components = comps.count;
    row.mean_component_size = comps.mean_size();
    row.rounds_total = tr.rounds_total();
    row.rounds_discovery = tr.rounds_in_phase(Phase::ComponentDiscovery);
    row.rounds_exploration = tr.rounds_in_phase(Phase::ComponentExploration);
    row.rng_seed = opts.seed;
    row.won = tr.verdict.discoverer_wins;

    std::ofstream sink;
    std::ostream& out = open_out(sink, opts.out);
    out << experiment_row_header() << "\n" << to_csv(row) << "\n";
    if (print_transcript) out << write_transcript(tr);
    out << "verdict: " << (tr.verdict.discoverer_wins ? "DISCOVERER" : "ADVERSARY") << " ("
        << tr.verdict.reason << ")\n";
    return tr.verdict.discoverer_wins ? 0 : 1;
}

struct InstanceSpec {
    TemporalGraph graph;
    int delta = 1;
    int source = -1; // -1: uniform per trial
    int t0 = 0;
    std::vector<int> schedule; // dynamic start times; empty: consistent
};

InstanceSpec parse_instance(const std::string& spec, const CommonOpts& opts, std::uint64_t seed) {
    InstanceSpec inst;
    if (!opts.graph_path.empty()) {
        GraphFile file = load_graph(opts);
        inst.graph = file.graph;
        inst.delta = file.delta;
        return inst;
    }
    std::vector<std::string> parts;
    std::istringstream in(spec);
    std::string token;
    while (std::getline(in, token, ':')) parts.push_back(token);
    if (parts.empty()) throw CLI::ValidationError("--instance", "empty instance spec");
    const std::string& kind = parts[0];
    auto arg = [&](size_t i, int fallback) {
        return parts.size() > i ? std::stoi(parts[i]) : fallback;
    };
    if (kind == "tree") {
        int n = arg(1, 64);
        inst.graph =
            relabel_bfs_depth(gen_random_tree(n, LabelRule::constant_label(1), 0, seed), 0);
        inst.delta = inst.graph.tmax;
    } else if (kind == "path") {
        int n = arg(1, 32);
        inst.graph = gen_path(n, LabelRule::increasing());
        inst.delta = inst.graph.tmax;
    } else if (kind == "ert") {
        int n = arg(1, 50);
        double p = parts.size() > 2 ? std::stod(parts[2]) : 0.1;
        int tmax = arg(3, n);
        inst.graph = gen_ert({n, p, tmax, seed});
        inst.delta = std::max(1, tmax / 4);
    } else if (kind == "path_lb") {
        int n = arg(1, 32);
        int s = arg(2, (n + 1) / 2);
        SourcePathInstance built = build_source_path_lb(n, s);
        inst.graph = built.graph;
        inst.delta = built.params.delta;
        inst.source = built.source;
        inst.t0 = built.t0;
    } else if (kind == "ham") {
        int n = arg(1, 9);
        HamiltonianInstance built = build_hamiltonian_lb(n, seed);
        inst.graph = built.graph;
        inst.delta = built.params.delta;
        inst.source = built.source;
        inst.schedule = built.t0_schedule;
    } else {
        throw CLI::ValidationError("--instance",
                                   "expected tree:N, path:N, ert:N:P:T, path_lb:N:S or ham:N");
    }
    if (opts.delta > 0) inst.delta = opts.delta;
    return inst;
}

int cmd_detect(const CommonOpts& opts, const std::string& instance, const std::string& algorithm,
               int trials, const std::string& behavior, int source_flag, int t0_flag) {
    std::vector<DetectTrialRow> rows;
    std::ofstream sink;
    std::ostream& out = open_out(sink, opts.out);
    out << detect_row_header() << "\n";

    for (int trial = 0; trial < trials; ++trial) {
        std::uint64_t trial_seed = Rng::trial_seed(opts.seed, trial);
        InstanceSpec inst = parse_instance(instance, opts, trial_seed);
        int n = inst.graph.n;

        Rng rng(trial_seed ^ 0x5851f42d4c957f2dULL);
        int source = source_flag >= 0 ? source_flag : inst.source;
        if (source < 0) source = rng.uniform_int(0, n - 1);
        int t0 = t0_flag >= 0 ? t0_flag : inst.t0;

        SirParams params{inst.delta, 1};
        bool dynamic = behavior == "dynamic" || !inst.schedule.empty();
        std::unique_ptr<SourceAdversary> adversary;
        if (dynamic) {
            std::vector<int> schedule = inst.schedule;
            if (schedule.empty()) schedule = {t0, std::min(t0 + 1, inst.graph.tmax)};
            adversary = dynamic_adversary(inst.graph, source, schedule, params);
        } else {
            adversary = consistent_adversary(inst.graph, source, t0, params);
        }

        SourceGameConfig cfg;
        cfg.behavior = dynamic ? SourceBehavior::ObliviouslyDynamic : SourceBehavior::Consistent;
        cfg.params = params;
        cfg.n = n;
        cfg.tmax = inst.graph.tmax;

        std::unique_ptr<SourceDiscoverer> d;
        if (algorithm == "watch_all") {
            d = watch_all_discoverer();
            cfg.knowledge = KnowledgeMode::NodesOnly;
        } else if (algorithm == "sqrt") {
            d = sqrt_discoverer(true);
            cfg.knowledge = KnowledgeMode::NodesOnly;
        } else if (algorithm == "sqrt_exact") {
            d = sqrt_discoverer(false);
            cfg.knowledge = KnowledgeMode::NodesOnly;
        } else if (algorithm == "random_watch") {
            d = random_watch_discoverer();
            cfg.knowledge = KnowledgeMode::NodesOnly;
        } else if (algorithm == "separator") {
            d = separator_discoverer(std::max(2, opts.k));
            cfg.knowledge = KnowledgeMode::KnownStatic;
        } else if (algorithm == "separator_unknown") {
            d = wrap_known_to_unknown(separator_discoverer(std::max(2, (n + 1) / 2)));
            cfg.knowledge = KnowledgeMode::NodesOnly;
        } else if (algorithm == "centroid2") {
            d = centroid_two_watch_discoverer();
            cfg.knowledge = KnowledgeMode::KnownStatic;
            cfg.watchers = 2;
        } else if (algorithm == "centroid2_1watch") {
            if (dynamic)
                throw CLI::ValidationError("--algorithm",
                                           "the k-to-one wrapper needs consistent behavior");
            d = wrap_k_to_one(centroid_two_watch_discoverer(), 2);
            cfg.knowledge = KnowledgeMode::KnownStatic;
            cfg.watchers = 1;
        } else {
            throw CLI::ValidationError(
                "--algorithm", "expected watch_all, sqrt, sqrt_exact, random_watch, separator, "
                               "separator_unknown, centroid2 or centroid2_1watch");
        }

        SourceGameResult res = run_source_game(*d, *adversary, cfg, trial_seed);
        DetectTrialRow row;
        row.trial = trial;
        row.n = n;
        row.algorithm = algorithm;
        row.behavior = to_string(cfg.behavior);
        row.knowledge = to_string(cfg.knowledge);
        row.won = res.won;
        row.price = res.price.total_infections;
        row.rounds = res.price.rounds;
        row.rng_seed = trial_seed;
        row.metrics = res.metrics;
        rows.push_back(row);
        out << to_csv(row) << "\n";
    }

    DetectSummary sum = summarize_detect(rows);
    std::cerr << "trials " << sum.trials << ", success rate " << sum.success_rate
              << ", median price " << sum.median_price << ", median rounds " << sum.median_rounds
              << "\n";
    return 0;
}

int cmd_sweep(const CommonOpts& opts, const std::string& preset, int trials) {
    SweepSpec spec = preset == "paper" ? SweepSpec::paper_grid() : SweepSpec::quick_grid();
    if (trials > 0) spec.trials = trials;
    spec.master_seed = opts.seed;

    SweepResult res = run_sweep(spec);
    std::ofstream sink;
    std::ostream& out = open_out(sink, opts.out);
    out << experiment_row_header() << "\n";
    for (const ExperimentRow& row : res.rows) out << to_csv(row) << "\n";

    const SweepSummary& s = res.summary;
    std::cerr << "rows " << res.rows.size() << "\n"
              << "slope rounds vs m: " << s.slope_rounds_vs_m << "\n"
              << "spearman(discovery share, p): " << s.spearman_discovery_share_vs_p << "\n"
              << "spearman(mean component size, np/tmax): " << s.spearman_mean_component_vs_ratio
              << "\n"
              << "threshold curve (np/tmax -> discovery share):\n";
    for (const auto& [ratio, share] : s.threshold_curve)
        std::cerr << "  " << ratio << " -> " << share << "\n";
    return 0;
}

int cmd_ingest(const CommonOpts& opts, const std::string& csv_path, int buckets) {
    std::ifstream in(csv_path);
    if (!in) throw std::runtime_error("cannot open " + csv_path);
    std::ostringstream buf;
    buf << in.rdbuf();
    SnapIngestResult res = snap_ingest(buf.str(), buckets);
    GraphFile file{res.graph, opts.delta > 0 ? opts.delta : 1};
    std::ofstream sink;
    std::ostream& out = open_out(sink, opts.out);
    out << write_temporal_edge_list(file);
    std::cerr << "rows " << res.rows << ", dropped self loops " << res.dropped_self_loops
              << ", nodes " << res.graph.n << ", instances " << res.graph.instance_count() << "\n";
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"SIR spreading games on temporal graphs"};
    app.require_subcommand(1);

    CommonOpts opts;

    auto* sim = app.add_subcommand("simulate", "run one SIR round");
    add_common(sim, opts);
    std::vector<std::string> infections;
    std::string tie = "low";
    sim->add_option("--infect", infections, "seed infection node@time (repeatable)");
    sim->add_option("--tie-break", tie, "low|high infector id");

    auto* comps = app.add_subcommand("components", "delta-edge connected components");
    add_common(comps, opts);

    auto* ipz = app.add_subcommand("ipz", "find an ideal patient zero");
    add_common(ipz, opts);

    auto* disc = app.add_subcommand("discover", "play the graph discovery game");
    add_common(disc, opts);
    std::string algorithm = "discovery_follow";
    bool skip_redundant = false;
    bool print_transcript = false;
    disc->add_option("--algorithm", algorithm, "brute|discovery_follow");
    disc->add_flag("--skip-redundant", skip_redundant, "skip redundant seed infections");
    disc->add_flag("--transcript", print_transcript, "print the round transcript");

    auto* detect = app.add_subcommand("detect", "play the source detection game");
    add_common(detect, opts, false);
    std::string instance = "tree:64";
    std::string detect_algorithm = "watch_all";
    std::string behavior = "consistent";
    int trials = 10;
    int source_flag = -1, t0_flag = -1;
    detect->add_option("--instance", instance, "tree:N | path:N | ert:N:P:T | path_lb:N:S | ham:N");
    detect->add_option("--algorithm", detect_algorithm, "detection algorithm");
    detect->add_option("--trials", trials, "number of Monte Carlo trials");
    detect->add_option("--behavior", behavior, "consistent|dynamic");
    detect->add_option("--source", source_flag, "fix the source node");
    detect->add_option("--t0", t0_flag, "fix the seed time");

    auto* sweep = app.add_subcommand("sweep", "discovery experiments over an ERT grid");
    add_common(sweep, opts, false);
    std::string preset = "quick";
    int sweep_trials = 0;
    sweep->add_option("--preset", preset, "quick|paper grid");
    sweep->add_option("--trials", sweep_trials, "trials per grid cell");

    auto* ingest = app.add_subcommand("ingest", "convert an interaction CSV to an edge list");
    add_common(ingest, opts, false);
    std::string csv_path;
    int buckets = 10;
    ingest->add_option("--csv", csv_path, "interaction CSV `u,v,timestamp`")->required();
    ingest->add_option("--buckets", buckets, "number of time buckets");

    CLI11_PARSE(app, argc, argv);

    try {
        if (sim->parsed()) return cmd_simulate(opts, infections, tie);
        if (comps->parsed()) return cmd_components(opts);
        if (ipz->parsed()) return cmd_ipz(opts);
        if (disc->parsed()) return cmd_discover(opts, algorithm, skip_redundant, print_transcript);
        if (detect->parsed())
            return cmd_detect(opts, instance, detect_algorithm, trials, behavior, source_flag,
                              t0_flag);
        if (sweep->parsed()) return cmd_sweep(opts, preset, sweep_trials);
        if (ingest->parsed()) return cmd_ingest(opts, csv_path, buckets);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
