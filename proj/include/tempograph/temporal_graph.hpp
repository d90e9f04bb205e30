#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace tempograph {

// Edge presence mode. Simple graphs carry one label per node pair; the multi
// modes allow a pair to be present at several time steps. Structurally both
// multi modes are stored as one instance per (pair, label); they differ in
// what a Discoverer is told about multiplicities.
enum class EdgeMode { Simple, Multilabel, Multiedge };

std::string to_string(EdgeMode mode);
std::optional<EdgeMode> edge_mode_from_string(const std::string& s);

// One edge instance: undirected pair {u,v} present exactly at time step `label`.
struct EdgeInstance {
    int u = 0;
    int v = 0;
    int label = 1; // in [1, tmax]

    bool operator==(const EdgeInstance& o) const {
        return ((u == o.u && v == o.v) || (u == o.v && v == o.u)) && label == o.label;
    }
};

struct TemporalGraph {
    int n = 0;    // nodes are 0..n-1
    int tmax = 1; // lifetime, labels live in [1, tmax]
    EdgeMode mode = EdgeMode::Simple;
    std::vector<EdgeInstance> edges;

    int node_count() const { return n; }
    int instance_count() const { return static_cast<int>(edges.size()); }
};

// Unordered node pair with canonical ordering a < b.
struct PairKey {
    int a = 0;
    int b = 0;

    PairKey() = default;
    PairKey(int x, int y) : a(x < y ? x : y), b(x < y ? y : x) {}

    bool operator==(const PairKey& o) const { return a == o.a && b == o.b; }
    bool operator<(const PairKey& o) const { return a != o.a ? a < o.a : b < o.b; }
};

struct SirParams {
    int delta = 1; // infectious duration, >= 1
    int k = 1;     // max seeds (or watched nodes) per round, >= 1
};

struct Seed {
    int node = 0;
    int time = 0; // in [0, tmax]

    bool operator==(const Seed& o) const { return node == o.node && time == o.time; }
    bool operator<(const Seed& o) const { return time != o.time ? time < o.time : node < o.node; }
};

using SeedSet = std::vector<Seed>;

// (infector, infectee, time); seed infections are encoded infector == infectee.
struct LogEntry {
    int infector = 0;
    int infectee = 0;
    int time = 0;

    bool is_seed() const { return infector == infectee; }
    bool operator==(const LogEntry& o) const {
        return infector == o.infector && infectee == o.infectee && time == o.time;
    }
};

struct InfectionLog {
    std::vector<LogEntry> entries;

    int infected_count() const { return static_cast<int>(entries.size()); }
    bool empty() const { return entries.empty(); }
};

// Partial map node -> infection time; -1 marks "never infected".
class Timetable {
public:
    Timetable() = default;
    explicit Timetable(int n) : times_(n, -1) {}

    void set(int node, int time) {
        if (node >= static_cast<int>(times_.size())) times_.resize(node + 1, -1);
        times_[node] = time;
    }
    bool infected(int node) const {
        return node < static_cast<int>(times_.size()) && times_[node] >= 0;
    }
    int time_of(int node) const {
        return node < static_cast<int>(times_.size()) ? times_[node] : -1;
    }
    int infected_count() const {
        int c = 0;
        for (int t : times_)
            if (t >= 0) ++c;
        return c;
    }
    int size() const { return static_cast<int>(times_.size()); }

    bool operator==(const Timetable& o) const;

private:
    std::vector<int> times_;
};

// Returns std::nullopt when all invariants hold, otherwise a description of
// the first violated one.
std::optional<std::string> validate(const TemporalGraph& g);

// Seed-set validity for a given graph and params: times in [0, tmax], at most
// one seed per node, at most k seeds.
std::optional<std::string> validate_seeds(const TemporalGraph& g, const SeedSet& seeds,
                                          const SirParams& params);

// Per-node incidence indexed by label for fast simulation.
class AdjacencyIndex {
public:
    struct Incident {
        int label;
        int other;
        int edge_index;
    };

    AdjacencyIndex() = default;
    explicit AdjacencyIndex(const TemporalGraph& g);

    // all incident instances of u with the given label
    std::pair<const Incident*, const Incident*> at(int u, int label) const;
    const std::vector<Incident>& incident(int u) const { return by_node_[u]; }

private:
    std::vector<std::vector<Incident>> by_node_; // sorted by label
};

// Distinct static pairs with their instance multiplicities, sorted.
std::vector<std::pair<PairKey, int>> static_pairs(const TemporalGraph& g);

// Index of the unique edge instance {u,v} with the given label, or -1.
int find_instance(const TemporalGraph& g, int u, int v, int label);

bool same_instance_set(const TemporalGraph& a, const TemporalGraph& b);

} // namespace tempograph
