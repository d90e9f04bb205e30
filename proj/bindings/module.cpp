#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "tempograph/adversaries.hpp"
#include "tempograph/components.hpp"
#include "tempograph/discovery.hpp"
#include "tempograph/experiments.hpp"
#include "tempograph/generators.hpp"
#include "tempograph/io.hpp"
#include "tempograph/source_detection.hpp"

#include <sstream>

namespace py = pybind11;
using namespace tempograph;

namespace {

TemporalGraph make_graph(int n, int tmax, const std::vector<std::tuple<int, int, int>>& edges,
                         const std::string& mode) {
    TemporalGraph g;
    g.n = n;
    g.tmax = tmax;
    auto parsed = edge_mode_from_string(mode);
    if (!parsed) throw py::value_error("unknown edge mode: " + mode);
    g.mode = *parsed;
    for (const auto& [u, v, t] : edges) g.edges.push_back({u, v, t});
    return g;
}

std::vector<std::tuple<int, int, int>> edge_list(const TemporalGraph& g) {
    std::vector<std::tuple<int, int, int>> out;
    out.reserve(g.edges.size());
    for (const EdgeInstance& e : g.edges) out.emplace_back(e.u, e.v, e.label);
    return out;
}

SeedSet to_seeds(const std::vector<std::pair<int, int>>& seeds) {
    SeedSet out;
    for (auto [v, t] : seeds) out.push_back({v, t});
    return out;
}

py::dict discovery_summary(const DiscoveryTranscript& tr) {
    py::dict d;
    d["won"] = tr.verdict.discoverer_wins;
    d["reason"] = tr.verdict.reason;
    d["rounds"] = tr.rounds_total();
    d["rounds_discovery"] = tr.rounds_in_phase(Phase::ComponentDiscovery);
    d["rounds_exploration"] = tr.rounds_in_phase(Phase::ComponentExploration);
    d["timed_out"] = tr.timed_out;
    d["finalize_consistent"] = tr.finalize_consistent;
    if (tr.claim) d["claim"] = edge_list(*tr.claim);
    d["transcript"] = write_transcript(tr);
    return d;
}

} // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "SIR spreading games on temporal graphs";

    py::class_<TemporalGraph>(m, "TemporalGraph")
        .def(py::init(&make_graph), py::arg("n"), py::arg("tmax"),
             py::arg("edges") = std::vector<std::tuple<int, int, int>>{},
             py::arg("mode") = "simple")
        .def_readonly("n", &TemporalGraph::n)
        .def_readonly("tmax", &TemporalGraph::tmax)
        .def_property_readonly("mode",
                               [](const TemporalGraph& g) { return to_string(g.mode); })
        .def_property_readonly("edges", &edge_list)
        .def("__repr__", [](const TemporalGraph& g) {
            std::ostringstream out;
            out << "TemporalGraph(n=" << g.n << ", m=" << g.edges.size() << ", tmax=" << g.tmax
                << ", mode=" << to_string(g.mode) << ")";
            return out.str();
        });

    m.def(
        "validate",
        [](const TemporalGraph& g) -> py::object {
            auto err = validate(g);
            if (err) return py::str(*err);
            return py::none();
        },
        "Returns None when the graph is valid, otherwise the first violation.");

    m.def(
        "simulate",
        [](const TemporalGraph& g, const std::vector<std::pair<int, int>>& seeds, int delta,
           const std::string& tie_break) {
            SirParams params{delta, std::max<int>(1, static_cast<int>(seeds.size()))};
            TieBreak tb = tie_break == "high" ? TieBreak::HighestInfector
                                              : TieBreak::LowestInfector;
            InfectionLog log = simulate(g, to_seeds(seeds), params, tb);
            std::vector<std::tuple<int, int, int>> out;
            for (const LogEntry& e : log.entries) out.emplace_back(e.infector, e.infectee, e.time);
            return out;
        },
        py::arg("graph"), py::arg("seeds"), py::arg("delta"), py::arg("tie_break") = "low",
        "Runs one SIR round; returns (infector, infectee, time) entries, seeds as (v, v, t).");

    m.def(
        "project_timetable",
        [](const std::vector<std::tuple<int, int, int>>& log, int n) {
            InfectionLog l;
            for (const auto& [u, v, t] : log) l.entries.push_back({u, v, t});
            Timetable times = project_timetable(l, n);
            std::vector<std::pair<int, int>> out;
            for (int v = 0; v < times.size(); ++v)
                if (times.infected(v)) out.emplace_back(v, times.time_of(v));
            return out;
        },
        py::arg("log"), py::arg("n") = 0);

    m.def(
        "check_consistency",
        [](const TemporalGraph& g, const std::vector<std::pair<int, int>>& seeds,
           const std::vector<std::tuple<int, int, int>>& log, int delta) {
            InfectionLog l;
            for (const auto& [u, v, t] : log) l.entries.push_back({u, v, t});
            SirParams params{delta, std::max<int>(1, static_cast<int>(seeds.size()))};
            return check_consistency(g, to_seeds(seeds), l, params);
        },
        py::arg("graph"), py::arg("seeds"), py::arg("log"), py::arg("delta"));

    m.def(
        "delta_edge_components",
        [](const TemporalGraph& g, int delta) {
            DeltaComponents c = delta_edge_components(g, delta);
            return py::make_tuple(c.count, c.assignment);
        },
        py::arg("graph"), py::arg("delta"),
        "Returns (component count, per-edge component ids).");

    m.def(
        "is_temporal_path",
        [](const TemporalGraph& g, const std::vector<int>& nodes) {
            return is_temporal_path(g, nodes);
        },
        py::arg("graph"), py::arg("nodes"));

    m.def(
        "find_ideal_patient_zero",
        [](const TemporalGraph& g, int delta) -> py::object {
            auto found = find_ideal_patient_zero(g, {delta, 1});
            if (!found) return py::none();
            return py::make_tuple(found->node, found->time);
        },
        py::arg("graph"), py::arg("delta"));

    // generators
    m.def(
        "gen_ert",
        [](int n, double p, int tmax, std::uint64_t seed) {
            return gen_ert({n, p, tmax, seed});
        },
        py::arg("n"), py::arg("p"), py::arg("tmax"), py::arg("seed") = 0);
    m.def(
        "gen_path",
        [](int n, int tmax, std::uint64_t seed) {
            return gen_path(n, LabelRule::increasing(), tmax, seed);
        },
        py::arg("n"), py::arg("tmax") = 0, py::arg("seed") = 0);
    m.def(
        "gen_star",
        [](int n, int tmax, std::uint64_t seed) {
            return gen_star(n, tmax == 0 ? LabelRule::increasing() : LabelRule::uniform(), tmax,
                            seed);
        },
        py::arg("n"), py::arg("tmax") = 0, py::arg("seed") = 0);
    m.def(
        "gen_random_tree",
        [](int n, int tmax, std::uint64_t seed) {
            return gen_random_tree(n, tmax == 0 ? LabelRule::increasing() : LabelRule::uniform(),
                                   tmax, seed);
        },
        py::arg("n"), py::arg("tmax") = 0, py::arg("seed") = 0);
    m.def(
        "gen_complete",
        [](int n, int tmax, std::uint64_t seed) {
            return gen_complete(n, tmax == 0 ? LabelRule::increasing() : LabelRule::uniform(),
                                tmax, seed);
        },
        py::arg("n"), py::arg("tmax") = 0, py::arg("seed") = 0);

    m.def("build_source_path_lb", [](int n, int s) {
        SourcePathInstance inst = build_source_path_lb(n, s);
        py::dict d;
        d["graph"] = inst.graph;
        d["source"] = inst.source;
        d["t0"] = inst.t0;
        d["delta"] = inst.params.delta;
        return d;
    }, py::arg("n"), py::arg("s"));
    m.def("build_hamiltonian_lb", [](int n, std::uint64_t seed) {
        HamiltonianInstance inst = build_hamiltonian_lb(n, seed);
        py::dict d;
        d["graph"] = inst.graph;
        d["source"] = inst.source;
        d["paths"] = inst.paths;
        d["t0_schedule"] = inst.t0_schedule;
        d["delta"] = inst.params.delta;
        return d;
    }, py::arg("n"), py::arg("seed") = 0);
    m.def("build_hub_family", [](int n, int tmax) {
        HubFamily fam = build_hub_family(n, tmax);
        py::dict d;
        d["graph"] = fam.graph;
        d["fixed"] = fam.fixed;
        d["relevant_edges"] = fam.relevant_edges;
        return d;
    }, py::arg("n"), py::arg("tmax"));
    m.def("build_witness_hard_family", [](int x) {
        WitnessHardFamily fam = build_witness_hard_family(x);
        py::dict d;
        d["graph"] = fam.graph;
        d["x"] = fam.x;
        d["delta"] = fam.params.delta;
        return d;
    }, py::arg("x"));

    // io
    m.def("parse_temporal_edge_list", [](const std::string& text) {
        GraphFile file = parse_temporal_edge_list(text);
        return py::make_tuple(file.graph, file.delta);
    });
    m.def(
        "write_temporal_edge_list",
        [](const TemporalGraph& g, int delta) {
            return write_temporal_edge_list({g, delta});
        },
        py::arg("graph"), py::arg("delta") = 1);
    m.def(
        "snap_ingest",
        [](const std::string& csv, int buckets) {
            SnapIngestResult res = snap_ingest(csv, buckets);
            py::dict d;
            d["graph"] = res.graph;
            d["dropped_self_loops"] = res.dropped_self_loops;
            d["rows"] = res.rows;
            return d;
        },
        py::arg("csv"), py::arg("buckets"));

    // discovery game
    m.def(
        "run_discovery_game",
        [](const TemporalGraph& g, int delta, const std::string& algorithm,
           const std::string& feedback, bool skip_redundant, int k) {
            DiscoveryConfig cfg;
            cfg.feedback = feedback == "times" ? FeedbackMode::TimesOnly : FeedbackMode::FullLog;
            cfg.edge_mode = g.mode;
            cfg.params = {delta, k};
            cfg.n = g.n;
            cfg.tmax = g.tmax;
            std::unique_ptr<DiscovererStrategy> d;
            if (algorithm == "brute")
                d = brute_force_discoverer();
            else if (algorithm == "discovery_follow")
                d = discovery_follow_discoverer(skip_redundant);
            else
                throw py::value_error("unknown algorithm: " + algorithm);
            auto a = honest_adversary(g, cfg.params);
            return discovery_summary(run_discovery_game(*d, *a, cfg));
        },
        py::arg("graph"), py::arg("delta"), py::arg("algorithm") = "discovery_follow",
        py::arg("feedback") = "log", py::arg("skip_redundant") = false, py::arg("k") = 1,
        "Plays the discovery game against the honest adversary; returns a summary dict.");

    m.def(
        "witness_verify",
        [](const TemporalGraph& g, const std::vector<std::vector<std::pair<int, int>>>& schedule,
           int delta) {
            std::vector<SeedSet> rounds;
            for (const auto& s : schedule) rounds.push_back(to_seeds(s));
            int k = 1;
            for (const auto& s : rounds) k = std::max<int>(k, static_cast<int>(s.size()));
            return witness_verify(g, rounds, {delta, k});
        },
        py::arg("graph"), py::arg("schedule"), py::arg("delta"));

    // source detection
    m.def(
        "run_source_game",
        [](const TemporalGraph& g, int delta, int source, const std::vector<int>& t0_schedule,
           const std::string& algorithm, std::uint64_t seed, int separator_bound) {
            SirParams params{delta, 1};
            std::unique_ptr<SourceAdversary> a;
            if (t0_schedule.size() <= 1) {
                int t0 = t0_schedule.empty() ? 0 : t0_schedule.front();
                a = consistent_adversary(g, source, t0, params);
            } else {
                a = dynamic_adversary(g, source, t0_schedule, params);
            }
            SourceGameConfig cfg;
            cfg.behavior = t0_schedule.size() <= 1 ? SourceBehavior::Consistent
                                                   : SourceBehavior::ObliviouslyDynamic;
            cfg.params = params;
            cfg.n = g.n;
            cfg.tmax = g.tmax;
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
                d = separator_discoverer(separator_bound);
                cfg.knowledge = KnowledgeMode::KnownStatic;
            } else if (algorithm == "centroid2") {
                d = centroid_two_watch_discoverer();
                cfg.knowledge = KnowledgeMode::KnownStatic;
                cfg.watchers = 2;
            } else {
                throw py::value_error("unknown algorithm: " + algorithm);
            }
            SourceGameResult res = run_source_game(*d, *a, cfg, seed);
            py::dict out;
            out["won"] = res.won;
            out["suspect"] = res.suspect;
            out["source"] = res.true_source;
            out["price"] = res.price.total_infections;
            out["rounds"] = res.price.rounds;
            out["phases"] = res.metrics.phases;
            return out;
        },
        py::arg("graph"), py::arg("delta"), py::arg("source"),
        py::arg("t0_schedule") = std::vector<int>{0}, py::arg("algorithm") = "watch_all",
        py::arg("seed") = 1, py::arg("separator_bound") = 2,
        "Plays the source detection game; a schedule with several start times "
        "makes the source obliviously dynamic.");

    // experiments
    m.def(
        "run_sweep",
        [](const std::vector<int>& n_values, const std::vector<double>& p_values,
           const std::vector<double>& tmax_over_n, const std::vector<double>& delta_over_tmax,
           int trials, std::uint64_t seed, bool skip_redundant) {
            SweepSpec spec;
            spec.n_values = n_values;
            spec.p_values = p_values;
            spec.tmax_over_n = tmax_over_n;
            spec.delta_over_tmax = delta_over_tmax;
            spec.trials = trials;
            spec.master_seed = seed;
            spec.skip_redundant = skip_redundant;
            SweepResult res = run_sweep(spec);
            std::ostringstream csv;
            csv << experiment_row_header() << "\n";
            for (const ExperimentRow& r : res.rows) csv << to_csv(r) << "\n";
            py::dict out;
            out["csv"] = csv.str();
            out["slope_rounds_vs_m"] = res.summary.slope_rounds_vs_m;
            out["spearman_discovery_share_vs_p"] = res.summary.spearman_discovery_share_vs_p;
            out["spearman_mean_component_vs_ratio"] =
                res.summary.spearman_mean_component_vs_ratio;
            out["threshold_curve"] = res.summary.threshold_curve;
            return out;
        },
        py::arg("n_values"), py::arg("p_values"), py::arg("tmax_over_n"),
        py::arg("delta_over_tmax"), py::arg("trials") = 3, py::arg("seed") = 1,
        py::arg("skip_redundant") = true);
}
