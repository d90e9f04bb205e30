#include "tempograph/temporal_graph.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace tempograph {

std::string to_string(EdgeMode mode) {
    switch (mode) {
    case EdgeMode::Simple: return "simple";
    case EdgeMode::Multilabel: return "multilabel";
    case EdgeMode::Multiedge: return "multiedge";
    }
    return "simple";
}

std::optional<EdgeMode> edge_mode_from_string(const std::string& s) {
    if (s == "simple") return EdgeMode::Simple;
    if (s == "multilabel") return EdgeMode::Multilabel;
    if (s == "multiedge") return EdgeMode::Multiedge;
    return std::nullopt;
}

bool Timetable::operator==(const Timetable& o) const {
    int n = std::max(size(), o.size());
    for (int v = 0; v < n; ++v)
        if (time_of(v) != o.time_of(v)) return false;
    return true;
}

std::optional<std::string> validate(const TemporalGraph& g) {
    std::ostringstream err;
    if (g.n < 0) return "negative node count";
    if (g.tmax < 1) return "tmax must be at least 1";
    std::set<std::pair<int, int>> pairs;
    std::set<std::tuple<int, int, int>> instances;
    for (size_t i = 0; i < g.edges.size(); ++i) {
        const EdgeInstance& e = g.edges[i];
        if (e.u < 0 || e.u >= g.n || e.v < 0 || e.v >= g.n) {
            err << "edge " << i << ": endpoint out of range";
            return err.str();
        }
        if (e.u == e.v) {
            err << "edge " << i << ": self loop";
            return err.str();
        }
        if (e.label < 1) {
            err << "edge " << i << ": label below 1";
            return err.str();
        }
        if (e.label > g.tmax) {
            err << "edge " << i << ": label exceeds tmax";
            return err.str();
        }
        PairKey key(e.u, e.v);
        if (g.mode == EdgeMode::Simple) {
            if (!pairs.insert({key.a, key.b}).second) {
                err << "edge " << i << ": duplicate pair in simple mode";
                return err.str();
            }
        } else {
            if (!instances.insert({key.a, key.b, e.label}).second) {
                err << "edge " << i << ": duplicate (pair, label) instance";
                return err.str();
            }
        }
    }
    return std::nullopt;
}

std::optional<std::string> validate_seeds(const TemporalGraph& g, const SeedSet& seeds,
                                          const SirParams& params) {
    if (static_cast<int>(seeds.size()) > params.k) return "more seeds than k allows";
    std::set<int> nodes;
    for (const Seed& s : seeds) {
        if (s.node < 0 || s.node >= g.n) return "seed node out of range";
        if (s.time < 0 || s.time > g.tmax) return "seed time out of [0, tmax]";
        if (!nodes.insert(s.node).second) return "two seeds at the same node";
    }
    return std::nullopt;
}

AdjacencyIndex::AdjacencyIndex(const TemporalGraph& g) : by_node_(g.n) {
    for (size_t i = 0; i < g.edges.size(); ++i) {
        const EdgeInstance& e = g.edges[i];
        by_node_[e.u].push_back({e.label, e.v, static_cast<int>(i)});
        by_node_[e.v].push_back({e.label, e.u, static_cast<int>(i)});
    }
    for (auto& inc : by_node_)
        std::sort(inc.begin(), inc.end(), [](const Incident& a, const Incident& b) {
            return a.label != b.label ? a.label < b.label : a.other < b.other;
        });
}

std::pair<const AdjacencyIndex::Incident*, const AdjacencyIndex::Incident*>
AdjacencyIndex::at(int u, int label) const {
    const auto& inc = by_node_[u];
    Incident probe{label, -1, -1};
    auto lo = std::lower_bound(inc.begin(), inc.end(), probe,
                               [](const Incident& a, const Incident& b) { return a.label < b.label; });
    auto hi = lo;
    while (hi != inc.end() && hi->label == label) ++hi;
    return {lo == inc.end() ? nullptr : &*lo, lo == inc.end() ? nullptr : &*lo + (hi - lo)};
}

std::vector<std::pair<PairKey, int>> static_pairs(const TemporalGraph& g) {
    std::vector<PairKey> keys;
    keys.reserve(g.edges.size());
    for (const EdgeInstance& e : g.edges) keys.emplace_back(e.u, e.v);
    std::sort(keys.begin(), keys.end());
    std::vector<std::pair<PairKey, int>> out;
    for (const PairKey& k : keys) {
        if (!out.empty() && out.back().first == k)
            ++out.back().second;
        else
            out.push_back({k, 1});
    }
    return out;
}

int find_instance(const TemporalGraph& g, int u, int v, int label) {
    PairKey key(u, v);
    for (size_t i = 0; i < g.edges.size(); ++i) {
        const EdgeInstance& e = g.edges[i];
        if (PairKey(e.u, e.v) == key && e.label == label) return static_cast<int>(i);
    }
    return -1;
}

bool same_instance_set(const TemporalGraph& a, const TemporalGraph& b) {
    if (a.n != b.n || a.edges.size() != b.edges.size()) return false;
    auto canon = [](const TemporalGraph& g) {
        std::vector<std::tuple<int, int, int>> v;
        v.reserve(g.edges.size());
        for (const EdgeInstance& e : g.edges) {
            PairKey k(e.u, e.v);
            v.emplace_back(k.a, k.b, e.label);
        }
        std::sort(v.begin(), v.end());
        return v;
    };
    return canon(a) == canon(b);
}

} // namespace tempograph
