#include "tempograph/source_detection.hpp"

#include "tempograph/rng.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <stdexcept>

namespace tempograph {

std::string to_string(SourceBehavior b) {
    return b == SourceBehavior::Consistent ? "consistent" : "dynamic";
}

namespace {

class ConsistentAdversary final : public SourceAdversary {
public:
    ConsistentAdversary(TemporalGraph graph, int source, int t0, SirParams params)
        : graph_(std::move(graph)), source_(source) {
        if (source < 0 || source >= graph_.n) throw std::invalid_argument("source out of range");
        if (t0 < 0 || t0 > graph_.tmax) throw std::invalid_argument("t0 out of [0, tmax]");
        SirParams single = params;
        single.k = 1;
        log_ = simulate(graph_, {{source_, t0}}, single);
    }

    const TemporalGraph& graph() const override { return graph_; }
    int source() const override { return source_; }
    const InfectionLog& round_log(long long) override { return log_; }

private:
    TemporalGraph graph_;
    int source_;
    InfectionLog log_;
};

class DynamicAdversary final : public SourceAdversary {
public:
    DynamicAdversary(TemporalGraph graph, int source, std::vector<int> schedule, SirParams params)
        : graph_(std::move(graph)), source_(source) {
        if (schedule.empty()) throw std::invalid_argument("empty t0 schedule");
        if (source < 0 || source >= graph_.n) throw std::invalid_argument("source out of range");
        SirParams single = params;
        single.k = 1;
        logs_.reserve(schedule.size());
        for (int t0 : schedule) {
            if (t0 < 0 || t0 > graph_.tmax) throw std::invalid_argument("t0 out of [0, tmax]");
            logs_.push_back(simulate(graph_, {{source_, t0}}, single));
        }
    }

    const TemporalGraph& graph() const override { return graph_; }
    int source() const override { return source_; }
    const InfectionLog& round_log(long long round) override {
        return logs_[static_cast<size_t>(round % logs_.size())];
    }

private:
    TemporalGraph graph_;
    int source_;
    std::vector<InfectionLog> logs_;
};

} // namespace

std::unique_ptr<SourceAdversary> consistent_adversary(TemporalGraph graph, int source, int t0,
                                                      SirParams params) {
    return std::make_unique<ConsistentAdversary>(std::move(graph), source, t0, params);
}

std::unique_ptr<SourceAdversary> dynamic_adversary(TemporalGraph graph, int source,
                                                   std::vector<int> t0_schedule, SirParams params) {
    return std::make_unique<DynamicAdversary>(std::move(graph), source, std::move(t0_schedule),
                                              params);
}

SourceGameResult run_source_game(SourceDiscoverer& d, SourceAdversary& a,
                                 const SourceGameConfig& cfg, std::uint64_t rng_seed) {
    SourceGameResult res;
    res.true_source = a.source();

    SourceGameView view;
    view.n = cfg.n;
    view.tmax = cfg.tmax;
    view.watchers = cfg.watchers;
    view.params = cfg.params;
    view.behavior = cfg.behavior;
    view.knowledge = cfg.knowledge;
    if (cfg.knowledge == KnowledgeMode::KnownStatic) {
        for (const auto& [key, mult] : static_pairs(a.graph())) view.static_edges.push_back(key);
    }
    if (a.graph().n != cfg.n) throw std::invalid_argument("adversary graph size mismatch");
    d.start(view, rng_seed);

    const long long cap = cfg.effective_round_cap();
    while (true) {
        SourceAction action = d.next_round();
        if (std::holds_alternative<int>(action)) {
            res.suspect = std::get<int>(action);
            res.won = res.suspect == res.true_source;
            break;
        }
        const WatchSet& watches = std::get<WatchSet>(action);
        if (static_cast<int>(watches.size()) > cfg.watchers)
            throw std::invalid_argument("discoverer watches more nodes than allowed");
        if (res.price.rounds >= cap) {
            res.timed_out = true;
            res.won = false;
            break;
        }

        const InfectionLog& log = a.round_log(res.price.rounds);
        ++res.price.rounds;
        res.price.total_infections += log.infected_count();

        WatchFeedback fb;
        for (int w : watches) {
            WatchObservation obs;
            obs.node = w;
            for (const LogEntry& e : log.entries) {
                if (e.infectee != w) continue;
                obs.infected = true;
                obs.time = e.time;
                obs.origin = e.is_seed() ? kSeedOrigin : e.infector;
                break;
            }
            fb.observations.push_back(obs);
        }
        res.rounds.push_back({watches, fb, log.infected_count()});
        d.observe(fb);
    }
    res.metrics = d.metrics();
    return res;
}

// ---------------------------------------------------------------------------
// discoverers

namespace {

class WatchAllDiscoverer final : public SourceDiscoverer {
public:
    void start(const SourceGameView& view, std::uint64_t) override {
        n_ = view.n;
        next_ = 0;
        found_ = -1;
    }
    SourceAction next_round() override {
        if (found_ >= 0) return found_;
        if (next_ >= n_) return found_ >= 0 ? found_ : 0; // unreachable with a seeded source
        WatchSet w{next_++};
        return w;
    }
    void observe(const WatchFeedback& fb) override {
        for (const WatchObservation& o : fb.observations)
            if (o.infected && o.origin == kSeedOrigin) found_ = o.node;
    }

private:
    int n_ = 0, next_ = 0, found_ = -1;
};

class SqrtDiscoverer final : public SourceDiscoverer {
public:
    explicit SqrtDiscoverer(bool abort) : abort_(abort) {}

    void start(const SourceGameView& view, std::uint64_t seed) override {
        n_ = view.n;
        rng_ = std::make_unique<Rng>(seed);
        budget_ = static_cast<int>(std::ceil(std::sqrt(static_cast<double>(n_))));
        samples_ = rng_->sample_without_replacement(n_, budget_);
        sample_i_ = 0;
        state_ = State::Sampling;
        suspect_ = -1;
        metrics_ = {};
    }

    SourceAction next_round() override {
        if (suspect_ >= 0) return suspect_;
        switch (state_) {
        case State::Sampling:
            if (sample_i_ < static_cast<int>(samples_.size()))
                return WatchSet{samples_[sample_i_++]};
            pick_anchor();
            return next_round();
        case State::Tracing:
            if (abort_ && metrics_.traceback >= budget_) return current_; // give up on the trace
            ++metrics_.traceback;
            return WatchSet{current_};
        case State::Fallback:
            return WatchSet{rng_->uniform_int(0, n_ - 1)};
        }
        return 0;
    }

    void observe(const WatchFeedback& fb) override {
        const WatchObservation& o = fb.observations.front();
        switch (state_) {
        case State::Sampling:
            if (o.infected) sample_obs_.push_back(o);
            break;
        case State::Tracing:
            if (!o.infected) return; // cannot happen against a consistent source
            if (o.origin == kSeedOrigin)
                suspect_ = o.node;
            else
                current_ = o.origin;
            break;
        case State::Fallback:
            if (o.infected) {
                if (o.origin == kSeedOrigin)
                    suspect_ = o.node;
                else {
                    current_ = o.origin;
                    state_ = State::Tracing;
                }
            }
            break;
        }
    }

    SourceMetrics metrics() const override { return metrics_; }

private:
    enum class State { Sampling, Tracing, Fallback };

    void pick_anchor() {
        if (sample_obs_.empty()) {
            if (abort_) {
                suspect_ = samples_.front(); // out of rounds; guess
            } else {
                state_ = State::Fallback;
            }
            return;
        }
        const WatchObservation* best = &sample_obs_.front();
        for (const WatchObservation& o : sample_obs_)
            if (o.time < best->time || (o.time == best->time && o.node < best->node)) best = &o;
        if (best->origin == kSeedOrigin) {
            suspect_ = best->node;
            return;
        }
        current_ = best->origin;
        state_ = State::Tracing;
    }

    bool abort_;
    int n_ = 0, budget_ = 0, sample_i_ = 0;
    int current_ = -1, suspect_ = -1;
    State state_ = State::Sampling;
    std::vector<int> samples_;
    std::vector<WatchObservation> sample_obs_;
    std::unique_ptr<Rng> rng_;
    SourceMetrics metrics_;
};

class RandomWatchDiscoverer final : public SourceDiscoverer {
public:
    void start(const SourceGameView& view, std::uint64_t seed) override {
        n_ = view.n;
        rng_ = std::make_unique<Rng>(seed);
        suspect_ = -1;
    }
    SourceAction next_round() override {
        if (suspect_ >= 0) return suspect_;
        return WatchSet{rng_->uniform_int(0, n_ - 1)};
    }
    void observe(const WatchFeedback& fb) override {
        const WatchObservation& o = fb.observations.front();
        if (o.infected) suspect_ = o.origin == kSeedOrigin ? o.node : o.origin;
    }

private:
    int n_ = 0, suspect_ = -1;
    std::unique_ptr<Rng> rng_;
};

class SeparatorDiscoverer final : public SourceDiscoverer {
public:
    explicit SeparatorDiscoverer(int size_bound) : size_bound_(size_bound) {}

    void start(const SourceGameView& view, std::uint64_t seed) override {
        if (view.knowledge != KnowledgeMode::KnownStatic)
            throw std::invalid_argument("separator search needs the static graph");
        graph_ = StaticGraph::from_pairs(view.n, view.static_edges);
        rng_ = std::make_unique<Rng>(seed);
        candidates_.resize(view.n);
        for (int v = 0; v < view.n; ++v) candidates_[v] = v;
        suspect_ = -1;
        metrics_ = {};
        begin_phase();
    }

    SourceAction next_round() override {
        if (suspect_ >= 0) return suspect_;
        if (candidates_.size() == 1) return candidates_.front();
        if (sep_i_ < static_cast<int>(separator_.size())) return WatchSet{separator_[sep_i_++]};
        in_fallback_ = true;
        return WatchSet{candidates_[rng_->uniform_int(0, static_cast<int>(candidates_.size()) - 1)]};
    }

    void observe(const WatchFeedback& fb) override {
        const WatchObservation& o = fb.observations.front();
        if (o.infected && o.origin == kSeedOrigin) {
            suspect_ = o.node;
            return;
        }
        if (!in_fallback_) {
            if (o.infected) sep_obs_.push_back(o);
            if (sep_i_ == static_cast<int>(separator_.size())) {
                if (!sep_obs_.empty()) {
                    const WatchObservation* best = &sep_obs_.front();
                    for (const WatchObservation& ob : sep_obs_)
                        if (ob.time < best->time || (ob.time == best->time && ob.node < best->node))
                            best = &ob;
                    restrict_to_component_of(best->origin);
                } else {
                    // clean separator nodes are never infected and cannot be
                    // the source; the random search runs on the rest
                    std::vector<int> next;
                    std::set_difference(candidates_.begin(), candidates_.end(),
                                        separator_.begin(), separator_.end(),
                                        std::back_inserter(next));
                    if (next.empty()) throw std::logic_error("source escaped the candidate pool");
                    candidates_ = std::move(next);
                }
            }
            return;
        }
        if (o.infected) restrict_to_component_of(o.node);
    }

    SourceMetrics metrics() const override { return metrics_; }

private:
    void begin_phase() {
        sep_obs_.clear();
        sep_i_ = 0;
        in_fallback_ = false;
        if (candidates_.size() <= 1) {
            separator_.clear();
            return;
        }
        std::vector<long long> weights(graph_.n, 0);
        for (int v : candidates_) weights[v] = 1;
        auto sep = balanced_separator(graph_, weights, size_bound_);
        if (!sep)
            throw std::runtime_error("no balanced separator within the size bound; raise it");
        separator_ = *sep;
    }

    void restrict_to_component_of(int v) {
        std::vector<bool> removed(graph_.n, false);
        for (int s : separator_) removed[s] = true;
        std::vector<int> comp = graph_.component_of(v, removed);
        std::vector<int> next;
        std::set_intersection(candidates_.begin(), candidates_.end(), comp.begin(), comp.end(),
                              std::back_inserter(next));
        if (next.empty()) throw std::logic_error("candidate restriction emptied the pool");
        candidates_ = std::move(next);
        ++metrics_.phases;
        begin_phase();
    }

    int size_bound_;
    StaticGraph graph_;
    std::vector<int> candidates_, separator_;
    std::vector<WatchObservation> sep_obs_;
    int sep_i_ = 0, suspect_ = -1;
    bool in_fallback_ = false;
    std::unique_ptr<Rng> rng_;
    SourceMetrics metrics_;
};

class CentroidTwoWatchDiscoverer final : public SourceDiscoverer {
public:
    void start(const SourceGameView& view, std::uint64_t seed) override {
        if (view.knowledge != KnowledgeMode::KnownStatic)
            throw std::invalid_argument("centroid search needs the static graph");
        if (view.watchers < 2) throw std::invalid_argument("centroid search watches two nodes");
        graph_ = StaticGraph::from_pairs(view.n, view.static_edges);
        if (!graph_.is_tree()) throw std::invalid_argument("centroid search needs a tree");
        rng_ = std::make_unique<Rng>(seed);
        subtree_.resize(view.n);
        for (int v = 0; v < view.n; ++v) subtree_[v] = v;
        suspect_ = -1;
        metrics_ = {};
        centroid_ = subtree_centroid(graph_, subtree_);
    }

    SourceAction next_round() override {
        if (suspect_ >= 0) return suspect_;
        if (subtree_.size() == 1) return subtree_.front();
        int probe = centroid_;
        while (probe == centroid_)
            probe = subtree_[rng_->uniform_int(0, static_cast<int>(subtree_.size()) - 1)];
        return WatchSet{centroid_, probe};
    }

    void observe(const WatchFeedback& fb) override {
        const WatchObservation& c = fb.observations[0];
        const WatchObservation& r = fb.observations[1];
        for (const WatchObservation* o : {&c, &r})
            if (o->infected && o->origin == kSeedOrigin) {
                suspect_ = o->node;
                return;
            }
        if (c.infected)
            recurse_into(c.origin);
        else if (r.infected)
            recurse_into(r.node);
    }

    SourceMetrics metrics() const override { return metrics_; }

private:
    void recurse_into(int v) {
        std::vector<bool> member(graph_.n, false);
        for (int u : subtree_) member[u] = true;
        std::vector<bool> removed(graph_.n, true);
        for (int u : subtree_) removed[u] = false;
        removed[centroid_] = true;
        // component of v within the current subtree, centroid removed
        std::vector<int> comp;
        if (!removed[v] && member[v]) {
            std::vector<bool> visited(graph_.n, false);
            std::deque<int> queue{v};
            visited[v] = true;
            while (!queue.empty()) {
                int u = queue.front();
                queue.pop_front();
                comp.push_back(u);
                for (int w : graph_.adj[u])
                    if (member[w] && !removed[w] && !visited[w]) {
                        visited[w] = true;
                        queue.push_back(w);
                    }
            }
        }
        if (comp.empty()) throw std::logic_error("recursion emptied the subtree");
        std::sort(comp.begin(), comp.end());
        subtree_ = std::move(comp);
        ++metrics_.max_depth;
        centroid_ = subtree_centroid(graph_, subtree_);
    }

    StaticGraph graph_;
    std::vector<int> subtree_;
    int centroid_ = -1, suspect_ = -1;
    std::unique_ptr<Rng> rng_;
    SourceMetrics metrics_;
};

// ---------------------------------------------------------------------------
// wrappers

class KnownToUnknownWrapperImpl final : public KnownToUnknownWrapper {
public:
    explicit KnownToUnknownWrapperImpl(std::unique_ptr<SourceDiscoverer> inner)
        : inner_(std::move(inner)) {}

    void start(const SourceGameView& view, std::uint64_t seed) override {
        inner_view_ = view;
        inner_view_.knowledge = KnowledgeMode::KnownStatic;
        inner_view_.tmax = view.tmax + view.params.delta + 1;
        inner_view_.static_edges.clear();
        for (int a = 0; a < view.n; ++a)
            for (int b = a + 1; b < view.n; ++b) inner_view_.static_edges.emplace_back(a, b);
        inner_->start(inner_view_, seed);
    }
    SourceAction next_round() override { return inner_->next_round(); }
    void observe(const WatchFeedback& fb) override { inner_->observe(fb); }
    SourceMetrics metrics() const override { return inner_->metrics(); }
    const SourceGameView& inner_view() const override { return inner_view_; }

private:
    std::unique_ptr<SourceDiscoverer> inner_;
    SourceGameView inner_view_;
};

class KToOneWrapper final : public SourceDiscoverer {
public:
    KToOneWrapper(std::unique_ptr<SourceDiscoverer> inner, int inner_watchers)
        : inner_(std::move(inner)), inner_watchers_(inner_watchers) {}

    void start(const SourceGameView& view, std::uint64_t seed) override {
        SourceGameView inner_view = view;
        inner_view.watchers = inner_watchers_;
        inner_->start(inner_view, seed);
        pending_.clear();
        collected_.observations.clear();
    }

    SourceAction next_round() override {
        if (pending_.empty()) {
            SourceAction action = inner_->next_round();
            if (std::holds_alternative<int>(action)) return action;
            pending_ = std::get<WatchSet>(action);
            collected_.observations.clear();
            if (pending_.empty()) {
                // an empty inner watch still costs one round
                pending_wait_ = true;
                return WatchSet{};
            }
        }
        return WatchSet{pending_.front()};
    }

    void observe(const WatchFeedback& fb) override {
        if (pending_wait_) {
            pending_wait_ = false;
            inner_->observe(fb);
            return;
        }
        collected_.observations.push_back(fb.observations.front());
        pending_.erase(pending_.begin());
        if (pending_.empty()) inner_->observe(collected_);
    }

    SourceMetrics metrics() const override { return inner_->metrics(); }

private:
    std::unique_ptr<SourceDiscoverer> inner_;
    int inner_watchers_;
    WatchSet pending_;
    WatchFeedback collected_;
    bool pending_wait_ = false;
};

} // namespace

std::unique_ptr<SourceDiscoverer> watch_all_discoverer() {
    return std::make_unique<WatchAllDiscoverer>();
}
std::unique_ptr<SourceDiscoverer> sqrt_discoverer(bool abort) {
    return std::make_unique<SqrtDiscoverer>(abort);
}
std::unique_ptr<SourceDiscoverer> random_watch_discoverer() {
    return std::make_unique<RandomWatchDiscoverer>();
}
std::unique_ptr<SourceDiscoverer> separator_discoverer(int size_bound) {
    return std::make_unique<SeparatorDiscoverer>(size_bound);
}
std::unique_ptr<SourceDiscoverer> centroid_two_watch_discoverer() {
    return std::make_unique<CentroidTwoWatchDiscoverer>();
}
std::unique_ptr<KnownToUnknownWrapper> wrap_known_to_unknown(
    std::unique_ptr<SourceDiscoverer> inner) {
    return std::make_unique<KnownToUnknownWrapperImpl>(std::move(inner));
}
std::unique_ptr<SourceDiscoverer> wrap_k_to_one(std::unique_ptr<SourceDiscoverer> inner,
                                                int inner_watchers) {
    return std::make_unique<KToOneWrapper>(std::move(inner), inner_watchers);
}

} // namespace tempograph
