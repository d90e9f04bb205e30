#include "tempograph/discovery.hpp"

#include "tempograph/components.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>
#include <stdexcept>

namespace tempograph {

namespace {

StaticView make_view(const DiscoveryConfig& cfg, const AdversaryStrategy& a) {
    StaticView view;
    view.n = cfg.n;
    view.tmax = cfg.tmax;
    view.params = cfg.params;
    view.mode = cfg.edge_mode;
    view.knowledge = cfg.knowledge;
    view.feedback = cfg.feedback;
    if (cfg.knowledge == KnowledgeMode::KnownStatic) view.pairs = a.pairs_view();
    return view;
}

LabelKnowledge make_knowledge(const DiscoveryConfig& cfg, const StaticView& view) {
    return LabelKnowledge(cfg.n, cfg.tmax, cfg.params.delta, cfg.edge_mode, cfg.knowledge,
                          view.pairs);
}

void apply_feedback(LabelKnowledge& k, const DiscoveryConfig& cfg, const SeedSet& seeds,
                    const InfectionLog& log, const Timetable& times) {
    const InfectionLog* lp = cfg.feedback == FeedbackMode::FullLog ? &log : nullptr;
    k.apply_round(seeds, lp, times);
}

bool round_consistent_with(const TemporalGraph& g, const DiscoveryConfig& cfg,
                           const DiscoveryRound& r) {
    if (cfg.feedback == FeedbackMode::FullLog)
        return check_consistency(g, r.seeds, r.log, cfg.params);
    InfectionLog ref = simulate(g, r.seeds, cfg.params, cfg.tie_break);
    return project_timetable(ref, g.n) == r.times;
}

// Exhaustive enumeration over all labelings of the candidate universe; counts
// graphs consistent with every round. Only used at desk sizes.
struct Enumeration {
    long long consistent = 0;
    std::optional<TemporalGraph> first;
    std::optional<TemporalGraph> second;
};

bool enumeration_feasible(const DiscoveryConfig& cfg, const StaticView& view,
                          double* out_total) {
    if (cfg.n > 6 || cfg.tmax > 6) return false;
    double total = 1;
    auto choose = [](int n, int k) {
        double c = 1;
        for (int i = 0; i < k; ++i) c = c * (n - i) / (i + 1);
        return c;
    };
    if (cfg.knowledge == KnowledgeMode::NodesOnly) {
        int pairs = cfg.n * (cfg.n - 1) / 2;
        for (int i = 0; i < pairs; ++i) total *= cfg.tmax + 1;
    } else {
        for (const auto& [key, mult] : view.pairs) {
            switch (cfg.edge_mode) {
            case EdgeMode::Simple: total *= cfg.tmax; break;
            case EdgeMode::Multiedge: total *= choose(cfg.tmax, mult); break;
            case EdgeMode::Multilabel: total *= (1 << cfg.tmax) - 1; break;
            }
            if (total > 1e7) return false;
        }
    }
    *out_total = total;
    return total <= 200000;
}

Enumeration enumerate_consistent(const DiscoveryConfig& cfg, const StaticView& view,
                                 const std::vector<DiscoveryRound>& rounds) {
    Enumeration result;

    // per-pair option lists
    std::vector<PairKey> keys;
    std::vector<std::vector<std::vector<int>>> options; // pair -> option -> labels
    auto push_pair = [&](PairKey key, int mult) {
        keys.push_back(key);
        std::vector<std::vector<int>> opts;
        if (cfg.knowledge == KnowledgeMode::NodesOnly) {
            opts.push_back({}); // absent
            for (int t = 1; t <= cfg.tmax; ++t) opts.push_back({t});
        } else {
            switch (cfg.edge_mode) {
            case EdgeMode::Simple:
                for (int t = 1; t <= cfg.tmax; ++t) opts.push_back({t});
                break;
            case EdgeMode::Multiedge: {
                std::vector<int> pick(mult);
                // all label subsets of the given size
                std::vector<int> idx(mult);
                for (int i = 0; i < mult; ++i) idx[i] = i + 1;
                while (true) {
                    opts.push_back(idx);
                    int i = mult - 1;
                    while (i >= 0 && idx[i] == cfg.tmax - (mult - 1 - i)) --i;
                    if (i < 0) break;
                    ++idx[i];
                    for (int j = i + 1; j < mult; ++j) idx[j] = idx[j - 1] + 1;
                }
                break;
            }
            case EdgeMode::Multilabel:
                for (int mask = 1; mask < (1 << cfg.tmax); ++mask) {
                    std::vector<int> labels;
                    for (int t = 1; t <= cfg.tmax; ++t)
                        if (mask & (1 << (t - 1))) labels.push_back(t);
                    opts.push_back(labels);
                }
                break;
            }
        }
        options.push_back(std::move(opts));
    };
    if (cfg.knowledge == KnowledgeMode::NodesOnly) {
        for (int a = 0; a < cfg.n; ++a)
            for (int b = a + 1; b < cfg.n; ++b) push_pair(PairKey(a, b), 1);
    } else {
        for (const auto& [key, mult] : view.pairs) push_pair(key, mult);
    }

    std::vector<size_t> odo(keys.size(), 0);
    while (true) {
        TemporalGraph g;
        g.n = cfg.n;
        g.tmax = cfg.tmax;
        g.mode = cfg.edge_mode;
        for (size_t i = 0; i < keys.size(); ++i)
            for (int t : options[i][odo[i]]) g.edges.push_back({keys[i].a, keys[i].b, t});
        bool ok = true;
        for (const DiscoveryRound& r : rounds)
            if (!round_consistent_with(g, cfg, r)) {
                ok = false;
                break;
            }
        if (ok) {
            ++result.consistent;
            if (!result.first)
                result.first = g;
            else if (!result.second && !same_instance_set(*result.first, g))
                result.second = g;
        }
        // advance odometer
        size_t i = 0;
        while (i < odo.size() && ++odo[i] == options[i].size()) odo[i++] = 0;
        if (i == odo.size()) break;
        if (odo.empty()) break;
    }
    if (keys.empty()) {
        // single empty labeling
        result.consistent = 1;
        TemporalGraph g;
        g.n = cfg.n;
        g.tmax = cfg.tmax;
        g.mode = cfg.edge_mode;
        result.first = g;
    }
    return result;
}

} // namespace

AdjudicationResult adjudicate_unique(const DiscoveryConfig& cfg, const StaticView& view,
                                     const std::vector<DiscoveryRound>& rounds,
                                     const TemporalGraph& claim) {
    AdjudicationResult res;

    // a claim refuted by some round loses immediately
    for (size_t i = 0; i < rounds.size(); ++i) {
        if (!round_consistent_with(claim, cfg, rounds[i])) {
            res.discoverer_wins = false;
            res.reason = "claim inconsistent with round " + std::to_string(i);
            res.counterexample_round = static_cast<int>(i);
            return res;
        }
    }

    // claimed static structure must match what was revealed
    if (cfg.knowledge == KnowledgeMode::KnownStatic) {
        auto claimed = static_pairs(claim);
        auto revealed = view.pairs;
        std::sort(revealed.begin(), revealed.end());
        bool structure_ok = claimed.size() == revealed.size();
        if (structure_ok && cfg.edge_mode == EdgeMode::Multilabel) {
            for (size_t i = 0; i < claimed.size(); ++i)
                if (!(claimed[i].first == revealed[i].first)) structure_ok = false;
        } else if (structure_ok) {
            for (size_t i = 0; i < claimed.size(); ++i)
                if (!(claimed[i] == revealed[i])) structure_ok = false;
        }
        if (!structure_ok) {
            res.discoverer_wins = false;
            res.reason = "claimed static structure differs from the revealed one";
            return res;
        }
    }

    LabelKnowledge knowledge = make_knowledge(cfg, view);
    for (const DiscoveryRound& r : rounds) apply_feedback(knowledge, cfg, r.seeds, r.log, r.times);

    bool resolved = knowledge.fully_resolved();
    bool matches = resolved && same_instance_set(claim, knowledge.claim_graph());
    res.discoverer_wins = resolved && matches;
    if (res.discoverer_wins)
        res.reason = "claim matches the uniquely determined labeling";
    else if (!resolved)
        res.reason = "labels not uniquely determined by the feedback";
    else
        res.reason = "claim differs from the determined labeling";

    double total = 0;
    if (cfg.cross_check && enumeration_feasible(cfg, view, &total)) {
        Enumeration en = enumerate_consistent(cfg, view, rounds);
        res.cross_checked = true;
        res.consistent_labelings = en.consistent;
        if (res.discoverer_wins &&
            (en.consistent != 1 || !en.first || !same_instance_set(*en.first, claim)))
            throw std::logic_error("adjudication cross-check mismatch: knowledge says unique, "
                                   "enumeration disagrees");
        if (!res.discoverer_wins && en.second && !res.counterexample)
            res.counterexample =
                same_instance_set(*en.first, claim) ? *en.second : *en.first;
    }
    return res;
}

DiscoveryTranscript run_discovery_game(DiscovererStrategy& d, AdversaryStrategy& a,
                                       const DiscoveryConfig& cfg) {
    if (a.n() != cfg.n || a.tmax() != cfg.tmax)
        throw std::invalid_argument("adversary dimensions do not match the config");

    DiscoveryTranscript tr;
    tr.cfg = cfg;
    StaticView view = make_view(cfg, a);
    d.start(view);

    LabelKnowledge knowledge = make_knowledge(cfg, view);
    const long long cap = cfg.effective_round_cap();

    while (true) {
        DiscovererAction action = d.next_round();
        if (std::holds_alternative<TemporalGraph>(action)) {
            tr.claim = std::get<TemporalGraph>(action);
            tr.verdict = adjudicate_unique(cfg, view, tr.rounds, *tr.claim);
            break;
        }
        SeedRequest req = std::get<SeedRequest>(action);
        if (tr.rounds_total() >= cap) {
            tr.timed_out = true;
            tr.verdict.discoverer_wins = false;
            tr.verdict.reason = "round cap exceeded";
            break;
        }
        if (static_cast<int>(req.seeds.size()) > cfg.params.k)
            throw std::invalid_argument("discoverer submitted more seeds than k allows");

        DiscoveryRound round;
        round.seeds = req.seeds;
        round.phase = req.phase;
        round.log = a.respond(req.seeds);
        round.times = project_timetable(round.log, cfg.n);
        apply_feedback(knowledge, cfg, round.seeds, round.log, round.times);
        round.phi_after = knowledge.phi();
        tr.rounds.push_back(std::move(round));

        RoundFeedback fb;
        fb.log = cfg.feedback == FeedbackMode::FullLog ? &tr.rounds.back().log : nullptr;
        fb.times = &tr.rounds.back().times;
        d.observe(fb);
    }

    // the adversary must be able to exhibit a graph consistent with every round
    TemporalGraph fin = a.finalize();
    tr.finalize_consistent = !validate(fin).has_value();
    for (const DiscoveryRound& r : tr.rounds)
        if (tr.finalize_consistent && !round_consistent_with(fin, cfg, r))
            tr.finalize_consistent = false;

    if (tr.claim && !tr.verdict.discoverer_wins && !tr.verdict.counterexample) {
        if (!same_instance_set(fin, *tr.claim)) tr.verdict.counterexample = fin;
    }
    return tr;
}

IpzGameResult run_ipz_game(IpzDiscoverer& d, AdversaryStrategy& a, const DiscoveryConfig& cfg) {
    if (a.n() != cfg.n || a.tmax() != cfg.tmax)
        throw std::invalid_argument("adversary dimensions do not match the config");

    IpzGameResult res;
    StaticView view = make_view(cfg, a);
    d.start(view);
    const long long cap = cfg.effective_round_cap();

    while (true) {
        IpzAction action = d.next_round();
        if (std::holds_alternative<IpzAnswer>(action)) {
            res.answer = std::get<IpzAnswer>(action);
            break;
        }
        SeedRequest req = std::get<SeedRequest>(action);
        if (res.rounds >= cap) {
            res.timed_out = true;
            break;
        }
        DiscoveryRound record;
        record.seeds = req.seeds;
        record.phase = req.phase;
        record.log = a.respond(req.seeds);
        record.times = project_timetable(record.log, cfg.n);
        ++res.rounds;
        RoundFeedback fb;
        fb.log = cfg.feedback == FeedbackMode::FullLog ? &record.log : nullptr;
        fb.times = &record.times;
        d.observe(fb);
        res.round_records.push_back(std::move(record));
    }

    TemporalGraph fin = a.finalize();
    std::optional<Seed> oracle = find_ideal_patient_zero(fin, cfg.params);
    if (res.timed_out)
        res.correct = false;
    else if (res.answer.pair.has_value())
        res.correct = oracle.has_value() && *oracle == *res.answer.pair;
    else
        res.correct = !oracle.has_value();
    return res;
}

// ---------------------------------------------------------------------------
// brute force

namespace {

class BruteForceDiscoverer final : public DiscovererStrategy {
public:
    void start(const StaticView& view) override {
        view_ = view;
        knowledge_ = std::make_unique<LabelKnowledge>(view.n, view.tmax, view.params.delta,
                                                      view.mode, view.knowledge, view.pairs);
        // time-major order keeps any window of min(k, n) seeds node-disjoint
        for (int t = 0; t <= view.tmax - 1; ++t)
            for (int v = 0; v < view.n; ++v) queue_.push_back({v, t});
        next_ = 0;
    }

    DiscovererAction next_round() override {
        if (next_ >= queue_.size()) return knowledge_->claim_graph();
        int batch = std::min<int>(view_.params.k, std::max(view_.n, 1));
        SeedRequest req;
        req.phase = Phase::Other;
        while (next_ < queue_.size() && static_cast<int>(req.seeds.size()) < batch)
            req.seeds.push_back(queue_[next_++]);
        pending_ = req.seeds;
        return req;
    }

    void observe(const RoundFeedback& fb) override {
        knowledge_->apply_round(pending_, fb.log, *fb.times);
    }

private:
    StaticView view_;
    std::unique_ptr<LabelKnowledge> knowledge_;
    std::vector<Seed> queue_;
    size_t next_ = 0;
    SeedSet pending_;
};

// ---------------------------------------------------------------------------
// follow-style exploration shared by the ipz and graph discovery variants

struct ExploreState {
    std::set<std::pair<int, int>> done;   // (node, time) seeds performed
    std::set<std::pair<int, int>> queued; // (node, time) infections enqueued
    std::deque<std::pair<int, int>> queue;

    void enqueue_observations(const Timetable& times, const SeedSet& own_seeds) {
        std::vector<std::pair<int, int>> obs; // (time, node)
        for (int v = 0; v < times.size(); ++v) {
            int t = times.time_of(v);
            if (t < 0) continue;
            bool was_seed = false;
            for (const Seed& s : own_seeds)
                if (s.node == v && s.time == t) was_seed = true;
            if (was_seed) continue;
            obs.push_back({t, v});
        }
        std::sort(obs.begin(), obs.end());
        for (auto [t, v] : obs)
            if (queued.insert({v, t}).second) queue.push_back({v, t});
    }
};

class FollowDiscovererImpl final : public IpzDiscoverer {
public:
    explicit FollowDiscovererImpl(int v0) : v0_(v0) {}

    void start(const StaticView& view) override {
        view_ = view;
        knowledge_ = std::make_unique<LabelKnowledge>(view.n, view.tmax, view.params.delta,
                                                      view.mode, view.knowledge, view.pairs);
        if (v0_ < 0 || v0_ >= view.n) v0_ = 0;
        sweep_count_ = (view.tmax + view.params.delta - 1) / view.params.delta;
        sweep_i_ = 0;
        pending_steps_.clear();
    }

    IpzAction next_round() override {
        // initial search at v0 in steps of delta
        while (sweep_i_ < sweep_count_) {
            int t = std::min(sweep_i_ * view_.params.delta, view_.tmax);
            ++sweep_i_;
            if (!ex_.done.insert({v0_, t}).second) continue;
            return emit({v0_, t}, Phase::ComponentDiscovery);
        }
        // explore observed infections
        while (!pending_steps_.empty() || !ex_.queue.empty()) {
            if (pending_steps_.empty()) {
                auto [node, t] = ex_.queue.front();
                ex_.queue.pop_front();
                for (int off : {-(view_.params.delta + 1), -1, 0}) {
                    // a negative probe time clamps to zero so that labels at
                    // the very start of the lifetime stay covered
                    int tp = std::max(0, t + off);
                    pending_steps_.push_back({node, tp});
                }
            }
            while (!pending_steps_.empty()) {
                auto seed = pending_steps_.front();
                pending_steps_.pop_front();
                if (!ex_.done.insert({seed.first, seed.second}).second) continue;
                return emit({seed.first, seed.second}, Phase::ComponentExploration);
            }
        }
        // answer offline from the confirmed edges
        TemporalGraph discovered;
        discovered.n = view_.n;
        discovered.tmax = view_.tmax;
        discovered.mode = view_.mode;
        for (const auto& st : knowledge_->states())
            for (int t : st.confirmed.to_vector())
                discovered.edges.push_back({st.pair.a, st.pair.b, t});
        IpzAnswer ans;
        auto found = find_ideal_patient_zero(discovered, view_.params);
        if (found) ans.pair = *found;
        return ans;
    }

    void observe(const RoundFeedback& fb) override {
        knowledge_->apply_round(pending_, fb.log, *fb.times);
        ex_.enqueue_observations(*fb.times, pending_);
    }

private:
    IpzAction emit(Seed s, Phase phase) {
        SeedRequest req;
        req.seeds = {s};
        req.phase = phase;
        pending_ = req.seeds;
        return req;
    }

    StaticView view_;
    std::unique_ptr<LabelKnowledge> knowledge_;
    ExploreState ex_;
    std::deque<std::pair<int, int>> pending_steps_;
    int v0_;
    int sweep_count_ = 0, sweep_i_ = 0;
    SeedSet pending_;
};

class DiscoveryFollowDiscoverer final : public DiscovererStrategy {
public:
    explicit DiscoveryFollowDiscoverer(bool skip_redundant) : skip_redundant_(skip_redundant) {}

    void start(const StaticView& view) override {
        view_ = view;
        knowledge_ = std::make_unique<LabelKnowledge>(view.n, view.tmax, view.params.delta,
                                                      view.mode, view.knowledge, view.pairs);
        sweep_count_ = (view.tmax + view.params.delta - 1) / view.params.delta;
        v0_ = -1;
        phi_at_iteration_start_ = -1;
        progressed_ = true;
    }

    DiscovererAction next_round() override {
        while (true) {
            // drain exploration before moving to the next unknown node
            while (!pending_steps_.empty() || !ex_.queue.empty()) {
                if (pending_steps_.empty()) {
                    auto [node, t] = ex_.queue.front();
                    ex_.queue.pop_front();
                    for (int off : {-(view_.params.delta + 1), -1, 0}) {
                        int tp = std::max(0, t + off);
                        pending_steps_.push_back({node, tp});
                    }
                }
                while (!pending_steps_.empty()) {
                    auto seed = pending_steps_.front();
                    pending_steps_.pop_front();
                    if (skip_redundant_ && knowledge_->node_fully_known(seed.first)) continue;
                    if (!ex_.done.insert(seed).second) continue;
                    progressed_ = true;
                    return emit({seed.first, seed.second}, Phase::ComponentExploration);
                }
            }
            if (v0_ >= 0 && sweep_i_ < sweep_count_) {
                if (skip_redundant_ && knowledge_->node_fully_known(v0_)) {
                    sweep_i_ = sweep_count_;
                } else {
                    int t = std::min(sweep_i_ * view_.params.delta, view_.tmax);
                    ++sweep_i_;
                    ex_.done.insert({v0_, t});
                    return emit({v0_, t}, Phase::ComponentDiscovery);
                }
            }
            // pick the lowest node that still has an unknown adjacent label
            int next_v0 = -1;
            for (int v = 0; v < view_.n && next_v0 < 0; ++v)
                if (!knowledge_->node_fully_known(v)) next_v0 = v;
            if (next_v0 < 0) return knowledge_->claim_graph();

            // guard against adversaries that let a full iteration pass without
            // any new information: claim and let adjudication decide
            if (!progressed_ && knowledge_->phi() == phi_at_iteration_start_)
                return knowledge_->claim_graph();
            phi_at_iteration_start_ = knowledge_->phi();
            progressed_ = false;
            v0_ = next_v0;
            sweep_i_ = 0;
        }
    }

    void observe(const RoundFeedback& fb) override {
        knowledge_->apply_round(pending_, fb.log, *fb.times);
        ex_.enqueue_observations(*fb.times, pending_);
    }

private:
    DiscovererAction emit(Seed s, Phase phase) {
        SeedRequest req;
        req.seeds = {s};
        req.phase = phase;
        pending_ = req.seeds;
        return req;
    }

    StaticView view_;
    std::unique_ptr<LabelKnowledge> knowledge_;
    ExploreState ex_;
    std::deque<std::pair<int, int>> pending_steps_;
    bool skip_redundant_;
    int v0_ = -1;
    int sweep_count_ = 0, sweep_i_ = 0;
    long long phi_at_iteration_start_ = -1;
    bool progressed_ = true;
    SeedSet pending_;
};

} // namespace

std::unique_ptr<DiscovererStrategy> brute_force_discoverer() {
    return std::make_unique<BruteForceDiscoverer>();
}

std::unique_ptr<DiscovererStrategy> discovery_follow_discoverer(bool skip_redundant) {
    return std::make_unique<DiscoveryFollowDiscoverer>(skip_redundant);
}

std::unique_ptr<IpzDiscoverer> follow_discoverer(int v0) {
    return std::make_unique<FollowDiscovererImpl>(v0);
}

// ---------------------------------------------------------------------------
// witness machinery

bool witness_verify(const TemporalGraph& g, const std::vector<SeedSet>& schedule,
                    const SirParams& params, std::vector<long long>* phi_trace) {
    LabelKnowledge knowledge(g.n, g.tmax, params.delta, g.mode, KnowledgeMode::KnownStatic,
                             static_pairs(g));
    AdjacencyIndex adj(g);
    long long prev = knowledge.phi();
    for (const SeedSet& seeds : schedule) {
        InfectionLog log = simulate(g, adj, seeds, params);
        Timetable times = project_timetable(log, g.n);
        knowledge.apply_round(seeds, &log, times);
        if (knowledge.phi() > prev)
            throw std::logic_error("potential increased during witness verification");
        prev = knowledge.phi();
        if (phi_trace) phi_trace->push_back(prev);
    }
    return knowledge.phi() == g.instance_count();
}

std::vector<SeedSet> trivial_witness_schedule(const TemporalGraph& g) {
    std::vector<SeedSet> schedule;
    schedule.reserve(g.edges.size());
    for (const EdgeInstance& e : g.edges) {
        int endpoint = std::min(e.u, e.v);
        schedule.push_back({{endpoint, e.label - 1}});
    }
    return schedule;
}

} // namespace tempograph
