#include "tempograph/knowledge.hpp"

#include <algorithm>
#include <cassert>
#include <stdexcept>

namespace tempograph {

std::string to_string(FeedbackMode m) {
    return m == FeedbackMode::FullLog ? "log" : "times";
}
std::string to_string(KnowledgeMode m) {
    return m == KnowledgeMode::KnownStatic ? "known_static" : "nodes_only";
}

LabelSet::LabelSet(int tmax, bool full) : tmax_(tmax) {
    bits_.assign((tmax + 64) / 64, 0);
    if (full) {
        for (int t = 1; t <= tmax; ++t) bits_[t >> 6] |= (std::uint64_t{1} << (t & 63));
        count_ = tmax;
    }
}

bool LabelSet::contains(int label) const {
    if (label < 1 || label > tmax_) return false;
    return (bits_[label >> 6] >> (label & 63)) & 1;
}

bool LabelSet::erase(int label) {
    if (!contains(label)) return false;
    bits_[label >> 6] &= ~(std::uint64_t{1} << (label & 63));
    --count_;
    return true;
}

void LabelSet::insert(int label) {
    if (label < 1 || label > tmax_) throw std::invalid_argument("label out of range");
    if (contains(label)) return;
    bits_[label >> 6] |= (std::uint64_t{1} << (label & 63));
    ++count_;
}

int LabelSet::sole_element() const {
    assert(count_ == 1);
    for (size_t w = 0; w < bits_.size(); ++w)
        if (bits_[w]) return static_cast<int>(w * 64 + __builtin_ctzll(bits_[w]));
    return -1;
}

std::vector<int> LabelSet::to_vector() const {
    std::vector<int> out;
    out.reserve(count_);
    for (int t = 1; t <= tmax_; ++t)
        if (contains(t)) out.push_back(t);
    return out;
}

LabelKnowledge::LabelKnowledge(int n, int tmax, int delta, EdgeMode mode, KnowledgeMode knowledge,
                               const std::vector<std::pair<PairKey, int>>& pairs)
    : n_(n), tmax_(tmax), delta_(delta), mode_(mode), knowledge_(knowledge), by_node_(n) {
    auto add_pair = [&](PairKey key, int multiplicity) {
        PairState st;
        st.pair = key;
        st.candidates = LabelSet(tmax, true);
        st.confirmed = LabelSet(tmax, false);
        st.multiplicity = multiplicity;
        index_[key] = static_cast<int>(states_.size());
        by_node_[key.a].push_back(static_cast<int>(states_.size()));
        by_node_[key.b].push_back(static_cast<int>(states_.size()));
        states_.push_back(std::move(st));
        phi_ += tmax;
    };
    if (knowledge == KnowledgeMode::NodesOnly) {
        for (int a = 0; a < n; ++a)
            for (int b = a + 1; b < n; ++b) add_pair(PairKey(a, b), mode == EdgeMode::Simple ? 1 : -1);
    } else {
        for (const auto& [key, mult] : pairs) {
            int m = mult;
            if (mode_ == EdgeMode::Simple) m = 1;
            if (mode_ == EdgeMode::Multilabel) m = -1; // multiplicity hidden
            add_pair(key, m);
        }
    }
}

void LabelKnowledge::confirm(PairState& st, int label) {
    if (!st.candidates.contains(label))
        throw std::runtime_error("adversary feedback confirms an eliminated label");
    if (st.confirmed.contains(label)) return;
    st.confirmed.insert(label);
    last_confirmations_.push_back({st.pair, label});
    collapse_if_pinned(st);
}

void LabelKnowledge::eliminate(PairState& st, int label) {
    if (st.confirmed.contains(label))
        throw std::runtime_error("adversary feedback eliminates a confirmed label");
    if (st.candidates.erase(label)) --phi_;
}

void LabelKnowledge::collapse_if_pinned(PairState& st) {
    if (st.multiplicity >= 0 && st.confirmed.size() == st.multiplicity &&
        st.candidates.size() > st.confirmed.size()) {
        phi_ -= st.candidates.size() - st.confirmed.size();
        st.candidates = st.confirmed;
    }
}

void LabelKnowledge::apply_round(const SeedSet& seeds, const InfectionLog* log,
                                 const Timetable& times) {
    last_confirmations_.clear();

    auto is_seed_observation = [&](int v, int t) {
        for (const Seed& s : seeds)
            if (s.node == v && s.time == t) return true;
        return false;
    };

    // successful infections fix labels
    if (log != nullptr) {
        for (const LogEntry& e : log->entries) {
            if (e.is_seed()) continue;
            auto it = index_.find(PairKey(e.infector, e.infectee));
            if (it == index_.end()) continue; // outside the tracked universe
            confirm(states_[it->second], e.time);
        }
    } else {
        // times only: attribute an infection when exactly one infectious
        // neighbor is a consistent infector
        for (int v = 0; v < times.size(); ++v) {
            int t = times.time_of(v);
            if (t < 0 || is_seed_observation(v, t)) continue;
            int candidate = -1;
            int candidates_found = 0;
            for (int si : by_node_[v]) {
                const PairState& st = states_[si];
                int w = st.pair.a == v ? st.pair.b : st.pair.a;
                int tw = times.time_of(w);
                if (tw < 0 || !(tw < t && t <= tw + delta_)) continue;
                if (!st.candidates.contains(t)) continue;
                ++candidates_found;
                candidate = si;
            }
            if (candidates_found == 1) confirm(states_[candidate], t);
        }
    }

    // failed attempts eliminate labels: only pairs with an infected endpoint
    // can change
    for (int v = 0; v < times.size(); ++v) {
        int tv = times.time_of(v);
        if (tv < 0) continue;
        for (int si : by_node_[v]) {
            PairState& st = states_[si];
            int w = st.pair.a == v ? st.pair.b : st.pair.a;
            int tw = times.time_of(w);
            int hi = std::min(tv + delta_, tmax_);
            for (int t = tv + 1; t <= hi; ++t) {
                if (tw >= 0 && tw <= t) break; // w no longer susceptible from its infection on
                if (st.confirmed.contains(t)) continue;
                eliminate(st, t);
            }
            collapse_if_pinned(st);
        }
    }
}

bool LabelKnowledge::pair_resolved(const PairState& st) const {
    if (knowledge_ == KnowledgeMode::NodesOnly) {
        // existence itself must be settled: all labels ruled out, or all
        // remaining candidates confirmed
        return st.candidates.empty() || st.candidates == st.confirmed;
    }
    switch (mode_) {
    case EdgeMode::Simple: return st.candidates.size() == 1;
    case EdgeMode::Multiedge: return st.candidates.size() == st.multiplicity;
    case EdgeMode::Multilabel: return st.candidates == st.confirmed;
    }
    return false;
}

bool LabelKnowledge::fully_resolved() const {
    for (const PairState& st : states_)
        if (!pair_resolved(st)) return false;
    return true;
}

bool LabelKnowledge::node_fully_known(int v) const {
    for (int si : by_node_[v])
        if (!pair_resolved(states_[si])) return false;
    return true;
}

const LabelKnowledge::PairState* LabelKnowledge::find(PairKey key) const {
    auto it = index_.find(key);
    return it == index_.end() ? nullptr : &states_[it->second];
}

TemporalGraph LabelKnowledge::claim_graph() const {
    TemporalGraph g;
    g.n = n_;
    g.tmax = tmax_;
    g.mode = mode_;
    for (const PairState& st : states_) {
        if (knowledge_ == KnowledgeMode::NodesOnly) {
            if (st.candidates.empty()) continue;
            for (int t : st.confirmed.to_vector()) g.edges.push_back({st.pair.a, st.pair.b, t});
        } else if (mode_ == EdgeMode::Multilabel) {
            for (int t : st.confirmed.to_vector()) g.edges.push_back({st.pair.a, st.pair.b, t});
        } else if (pair_resolved(st)) {
            for (int t : st.candidates.to_vector()) g.edges.push_back({st.pair.a, st.pair.b, t});
        } else {
            // best effort for unresolved pairs: emit what is confirmed
            for (int t : st.confirmed.to_vector()) g.edges.push_back({st.pair.a, st.pair.b, t});
        }
    }
    return g;
}

} // namespace tempograph
