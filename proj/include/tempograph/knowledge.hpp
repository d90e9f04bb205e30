#pragma once

#include "tempograph/simulate.hpp"
#include "tempograph/temporal_graph.hpp"

#include <map>
#include <vector>

namespace tempograph {

enum class FeedbackMode { FullLog, TimesOnly };
enum class KnowledgeMode { KnownStatic, NodesOnly };

std::string to_string(FeedbackMode m);
std::string to_string(KnowledgeMode m);

// Compact label set over [1, tmax].
class LabelSet {
public:
    LabelSet() = default;
    LabelSet(int tmax, bool full);

    bool contains(int label) const;
    bool erase(int label); // returns true if it was present
    void insert(int label);
    int size() const { return count_; }
    bool empty() const { return count_ == 0; }
    int sole_element() const; // requires size() == 1
    std::vector<int> to_vector() const;
    bool operator==(const LabelSet& o) const { return count_ == o.count_ && bits_ == o.bits_; }

private:
    std::vector<std::uint64_t> bits_;
    int tmax_ = 0;
    int count_ = 0;
};

// Tracks, per candidate edge (or candidate pair when the static graph is
// unknown), the set of labels still consistent with the feedback seen so far,
// plus the labels confirmed by successful infections. The potential is the sum
// of candidate-set sizes; it never increases over a game.
//
// Update rules applied per round:
//  - a successful infection via pair e at time t confirms t as a label of e;
//  - a failed attempt at time t (one endpoint infectious, the other
//    susceptible and not infected during t) removes t from e's candidates;
//  - once the labels of a pair are fully pinned (one confirmation in simple
//    mode, `multiplicity` confirmations in multiedge mode) the remaining
//    unconfirmed candidates drop out.
// Under times-only feedback, a success is attributed only when exactly one
// infectious neighbor is a consistent infector.
class LabelKnowledge {
public:
    struct PairState {
        PairKey pair;
        LabelSet candidates;
        LabelSet confirmed;
        int multiplicity = -1; // known instance count; -1 when unknown
    };

    // known_static universe: the given pairs (multiplicity -1 when the mode
    // hides it); nodes_only universe: all C(n,2) pairs.
    LabelKnowledge(int n, int tmax, int delta, EdgeMode mode, KnowledgeMode knowledge,
                   const std::vector<std::pair<PairKey, int>>& pairs);

    // Applies one round. `log` may be null under times-only feedback; `times`
    // must always be the round's timetable. `seeds` are the discoverer's own.
    void apply_round(const SeedSet& seeds, const InfectionLog* log, const Timetable& times);

    long long phi() const { return phi_; }
    bool fully_resolved() const;
    bool pair_resolved(const PairState& st) const;

    // all adjacent pairs of v resolved (no pair counts as resolved trivially)
    bool node_fully_known(int v) const;

    const PairState* find(PairKey key) const;
    const std::vector<PairState>& states() const { return states_; }

    // pairs confirmed as present during the last apply_round call, with the
    // confirmed label (used by explore-style strategies)
    const std::vector<std::pair<PairKey, int>>& last_confirmations() const {
        return last_confirmations_;
    }

    // The graph the knowledge determines. Only meaningful once fully_resolved.
    TemporalGraph claim_graph() const;

    int n() const { return n_; }
    int tmax() const { return tmax_; }
    EdgeMode mode() const { return mode_; }
    KnowledgeMode knowledge() const { return knowledge_; }

private:
    void confirm(PairState& st, int label);
    void eliminate(PairState& st, int label);
    void collapse_if_pinned(PairState& st);

    int n_, tmax_, delta_;
    EdgeMode mode_;
    KnowledgeMode knowledge_;
    std::vector<PairState> states_;
    std::map<PairKey, int> index_;
    std::vector<std::vector<int>> by_node_; // node -> state indices
    long long phi_ = 0;
    std::vector<std::pair<PairKey, int>> last_confirmations_;
};

} // namespace tempograph
