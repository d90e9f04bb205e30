#include "tempograph/adversaries.hpp"

#include "tempograph/generators.hpp"
#include "tempograph/knowledge.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

namespace tempograph {

namespace {

class HonestAdversary final : public AdversaryStrategy {
public:
    HonestAdversary(TemporalGraph graph, SirParams params, TieBreak tie_break)
        : graph_(std::move(graph)), adj_(graph_), params_(params), tie_break_(tie_break) {
        if (auto err = validate(graph_)) throw std::invalid_argument("honest adversary: " + *err);
    }

    int n() const override { return graph_.n; }
    int tmax() const override { return graph_.tmax; }
    std::vector<std::pair<PairKey, int>> pairs_view() const override {
        return static_pairs(graph_);
    }
    InfectionLog respond(const SeedSet& seeds) override {
        return simulate(graph_, adj_, seeds, params_, tie_break_);
    }
    TemporalGraph finalize() override { return graph_; }

private:
    TemporalGraph graph_;
    AdjacencyIndex adj_;
    SirParams params_;
    TieBreak tie_break_;
};

// Shared engine for lazy adversaries. Committed (pair, label) instances
// behave like an ordinary simulation. Candidate slots are answered "failed"
// while denial keeps at least one consistent completion, otherwise the label
// is committed on the spot and the infection succeeds. A denial is recorded
// only for observable attempts: if the target is infected in the same step by
// something else, nothing about the slot is revealed.
class LazyAdversaryBase : public AdversaryStrategy {
public:
    LazyAdversaryBase(int n, int tmax, SirParams params) : n_(n), tmax_(tmax), params_(params) {}

    int n() const override { return n_; }
    int tmax() const override { return tmax_; }

    InfectionLog respond(const SeedSet& seeds) override {
        InfectionLog log;
        if (seeds.empty()) return log;
        SeedSet ordered = seeds;
        std::sort(ordered.begin(), ordered.end());

        std::vector<int> time_of(n_, -1);
        size_t next_seed = 0;
        for (int t = ordered.front().time; t <= tmax_; ++t) {
            while (next_seed < ordered.size() && ordered[next_seed].time == t) {
                const Seed& s = ordered[next_seed++];
                if (time_of[s.node] < 0) {
                    time_of[s.node] = t;
                    log.entries.push_back({s.node, s.node, t});
                }
            }
            auto infectious_at = [&](int u) {
                return time_of[u] >= 0 && time_of[u] < t && t <= time_of[u] + params_.delta;
            };
            std::map<int, int> chosen; // target -> infector
            for (const auto& [key, labels] : committed_) {
                if (!labels.count(t)) continue;
                for (int flip = 0; flip < 2; ++flip) {
                    int u = flip ? key.b : key.a;
                    int w = flip ? key.a : key.b;
                    if (!infectious_at(u) || time_of[w] >= 0) continue;
                    auto [pos, inserted] = chosen.emplace(w, u);
                    if (!inserted && u < pos->second) pos->second = u;
                }
            }
            // floating attempts on targets no committed instance reaches
            for (int w = 0; w < n_; ++w) {
                if (time_of[w] >= 0 || chosen.count(w)) continue;
                for (int u = 0; u < n_; ++u) {
                    if (u == w || !infectious_at(u)) continue;
                    PairKey key(u, w);
                    if (!floating_open(key, t)) continue;
                    if (can_deny(key, t)) {
                        deny(key, t);
                    } else {
                        commit_from_play(key, t);
                        chosen.emplace(w, u);
                        break; // remaining attempts on w are unobservable
                    }
                }
            }
            for (const auto& [w, u] : chosen) {
                time_of[w] = t;
                log.entries.push_back({u, w, t});
            }
        }
        std::sort(log.entries.begin(), log.entries.end(),
                  [](const LogEntry& a, const LogEntry& b) {
                      return a.time != b.time ? a.time < b.time : a.infectee < b.infectee;
                  });
        return log;
    }

    TemporalGraph finalize() override {
        TemporalGraph g = base_graph();
        commit_pending();
        for (const auto& [key, labels] : committed_)
            for (int lbl : labels) g.edges.push_back({key.a, key.b, lbl});
        if (auto err = validate(g)) throw std::logic_error("lazy adversary finalize: " + *err);
        return g;
    }

protected:
    // true iff (pair, t) may still host an infection by the lazy rule
    virtual bool floating_open(PairKey key, int t) const = 0;
    // true iff answering "failed" keeps some consistent completion
    virtual bool can_deny(PairKey key, int t) const = 0;
    virtual void deny(PairKey key, int t) = 0;
    // a slot the lazy rule was forced to reveal
    virtual void commit_from_play(PairKey key, int t) { commit(key, t); }
    // resolve still-floating labels into committed form at finalize time
    virtual void commit_pending() {}
    // empty graph carrying n, tmax and the mode; committed labels are appended
    virtual TemporalGraph base_graph() const = 0;

    void commit(PairKey key, int t) { committed_[key].insert(t); }

    int n_, tmax_;
    SirParams params_;
    std::map<PairKey, std::set<int>> committed_;
};

class HubPathAdversary final : public LazyAdversaryBase {
public:
    HubPathAdversary(int n, int tmax, SirParams params) : LazyAdversaryBase(n, tmax, params) {
        family_ = build_hub_family(n, tmax);
        for (size_t i = 0; i < family_.graph.edges.size(); ++i) {
            const EdgeInstance& e = family_.graph.edges[i];
            PairKey key(e.u, e.v);
            if (family_.fixed[i])
                commit(key, e.label);
            else
                candidates_.emplace(key, LabelSet(tmax, true));
        }
    }

    std::vector<std::pair<PairKey, int>> pairs_view() const override {
        return static_pairs(family_.graph);
    }

protected:
    bool floating_open(PairKey key, int t) const override {
        auto it = candidates_.find(key);
        return it != candidates_.end() && it->second.contains(t);
    }
    bool can_deny(PairKey key, int) const override { return candidates_.at(key).size() > 1; }
    void deny(PairKey key, int t) override { candidates_.at(key).erase(t); }
    void commit_from_play(PairKey key, int t) override {
        commit(key, t);
        candidates_.erase(key);
    }
    void commit_pending() override {
        for (auto& [key, cands] : candidates_) commit(key, cands.to_vector().front());
        candidates_.clear();
    }
    TemporalGraph base_graph() const override {
        TemporalGraph g;
        g.n = n_;
        g.tmax = tmax_;
        g.mode = EdgeMode::Simple;
        return g;
    }

private:
    HubFamily family_;
    std::map<PairKey, LabelSet> candidates_;
};

// Global floating pool: of all remaining (pair, time) slots exactly one will
// become real. Denial is allowed while a second slot remains.
class FloatingPoolAdversary : public LazyAdversaryBase {
public:
    using LazyAdversaryBase::LazyAdversaryBase;

protected:
    bool floating_open(PairKey key, int t) const override {
        if (committed_one_) return false;
        auto it = pool_.find(key);
        return it != pool_.end() && it->second.contains(t);
    }
    bool can_deny(PairKey, int) const override { return pool_size_ > 1; }
    void deny(PairKey key, int t) override {
        if (pool_.at(key).erase(t)) --pool_size_;
    }
    void commit_from_play(PairKey key, int t) override {
        commit(key, t);
        committed_one_ = true;
        pool_.clear();
        pool_size_ = 0;
    }
    void commit_pending() override {
        if (committed_one_) return;
        for (auto& [key, slots] : pool_) {
            if (slots.empty()) continue;
            commit_from_play(key, slots.to_vector().front());
            return;
        }
        throw std::logic_error("floating pool drained without a commit");
    }

    void add_slot_range(PairKey key, int lo, int hi) {
        LabelSet s(tmax_, false);
        for (int t = lo; t <= hi; ++t) s.insert(t);
        if (s.empty()) return;
        pool_size_ += s.size();
        pool_.emplace(key, std::move(s));
    }

private:
    std::map<PairKey, LabelSet> pool_;
    long long pool_size_ = 0;
    bool committed_one_ = false;
};

class UnknownGraphAdversary final : public FloatingPoolAdversary {
public:
    UnknownGraphAdversary(int n, int m, int tmax, SirParams params)
        : FloatingPoolAdversary(n, tmax, params) {
        if (m < 1 || m > n * (n - 1) / 2 - n)
            throw std::invalid_argument("unknown graph family needs 1 <= m <= C(n,2) - n");
        // m-1 fixed edges, greedily grown from node 0, every node keeping at
        // most n-2 neighbors, connected by construction
        std::vector<int> degree(n, 0);
        std::set<PairKey> fixed;
        int placed = 0;
        for (int c = 0; c < n && placed < m - 1; ++c) {
            for (int u = 0; u < n && placed < m - 1; ++u) {
                if (u == c || degree[c] >= n - 2) continue;
                PairKey key(c, u);
                if (fixed.count(key) || degree[u] >= n - 2) continue;
                fixed.insert(key);
                ++degree[c];
                ++degree[u];
                ++placed;
            }
        }
        if (placed < m - 1) throw std::logic_error("could not place the fixed edges");
        for (const PairKey& key : fixed) commit(key, 1);
        for (int a = 0; a < n; ++a)
            for (int b = a + 1; b < n; ++b) {
                PairKey key(a, b);
                if (!fixed.count(key)) add_slot_range(key, 1, tmax);
            }
    }

    // meant for the nodes-only game; there is nothing to reveal
    std::vector<std::pair<PairKey, int>> pairs_view() const override { return {}; }

protected:
    TemporalGraph base_graph() const override {
        TemporalGraph g;
        g.n = n_;
        g.tmax = tmax_;
        g.mode = EdgeMode::Simple;
        return g;
    }
};

class MultilabelAdversary final : public FloatingPoolAdversary {
public:
    MultilabelAdversary(int n, int m, int tmax, SirParams params)
        : FloatingPoolAdversary(n, tmax, params), pairs_(build_balanced_edge_set(n, m)) {
        for (const PairKey& key : pairs_) {
            commit(key, 1);
            add_slot_range(key, 2, tmax); // one floating extra label somewhere
        }
        if (tmax < 2) throw std::invalid_argument("multilabel family needs tmax >= 2");
    }

    std::vector<std::pair<PairKey, int>> pairs_view() const override {
        std::vector<std::pair<PairKey, int>> out;
        out.reserve(pairs_.size());
        for (const PairKey& key : pairs_) out.push_back({key, -1});
        return out;
    }

protected:
    TemporalGraph base_graph() const override {
        TemporalGraph g;
        g.n = n_;
        g.tmax = tmax_;
        g.mode = EdgeMode::Multilabel;
        return g;
    }

private:
    std::vector<PairKey> pairs_;
};

} // namespace

std::unique_ptr<AdversaryStrategy> honest_adversary(TemporalGraph graph, SirParams params,
                                                    TieBreak tie_break) {
    return std::make_unique<HonestAdversary>(std::move(graph), params, tie_break);
}

std::unique_ptr<AdversaryStrategy> hub_path_adversary(int n, int tmax, SirParams params) {
    return std::make_unique<HubPathAdversary>(n, tmax, params);
}

std::unique_ptr<AdversaryStrategy> unknown_graph_adversary(int n, int m, int tmax,
                                                           SirParams params) {
    return std::make_unique<UnknownGraphAdversary>(n, m, tmax, params);
}

std::unique_ptr<AdversaryStrategy> multilabel_adversary(int n, int m, int tmax, SirParams params) {
    return std::make_unique<MultilabelAdversary>(n, m, tmax, params);
}

} // namespace tempograph
