#include "tempograph/components.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>

namespace tempograph {

namespace {

class UnionFind {
public:
    explicit UnionFind(int n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0); }
    int find(int x) {
        while (parent_[x] != x) x = parent_[x] = parent_[parent_[x]];
        return x;
    }
    void unite(int a, int b) {
        a = find(a);
        b = find(b);
        if (a != b) parent_[std::max(a, b)] = std::min(a, b);
    }

private:
    std::vector<int> parent_;
};

} // namespace

DeltaComponents delta_edge_components(const TemporalGraph& g, int delta) {
    const int m = g.instance_count();
    UnionFind uf(m);
    // At a shared endpoint, instances sorted by label only need consecutive
    // linking: if two labels differ by at most delta, so does every
    // consecutive gap between them.
    std::vector<std::vector<std::pair<int, int>>> by_node(g.n); // (label, edge idx)
    for (int i = 0; i < m; ++i) {
        by_node[g.edges[i].u].push_back({g.edges[i].label, i});
        by_node[g.edges[i].v].push_back({g.edges[i].label, i});
    }
    for (auto& inc : by_node) {
        std::sort(inc.begin(), inc.end());
        for (size_t j = 1; j < inc.size(); ++j) {
            if (inc[j].first - inc[j - 1].first <= delta)
                uf.unite(inc[j].second, inc[j - 1].second);
        }
    }
    DeltaComponents out;
    out.assignment.resize(m);
    std::map<int, int> renumber;
    for (int i = 0; i < m; ++i) {
        int root = uf.find(i);
        auto [it, inserted] = renumber.emplace(root, out.count);
        if (inserted) ++out.count;
        out.assignment[i] = it->second;
    }
    return out;
}

bool is_temporal_path(const TemporalGraph& g, const std::vector<int>& nodes) {
    for (int v : nodes)
        if (v < 0 || v >= g.n) throw std::invalid_argument("node out of range");
    if (nodes.size() <= 1) return true;

    // greedy: along each hop take the smallest label exceeding the previous one
    std::map<std::pair<int, int>, std::vector<int>> labels;
    for (const EdgeInstance& e : g.edges) {
        PairKey k(e.u, e.v);
        labels[{k.a, k.b}].push_back(e.label);
    }
    for (auto& [k, v] : labels) std::sort(v.begin(), v.end());

    int prev = 0; // labels start at 1, so 0 means "anything"
    for (size_t i = 0; i + 1 < nodes.size(); ++i) {
        PairKey k(nodes[i], nodes[i + 1]);
        auto it = labels.find({k.a, k.b});
        if (it == labels.end()) return false;
        auto up = std::upper_bound(it->second.begin(), it->second.end(), prev);
        if (up == it->second.end()) return false;
        prev = *up;
    }
    return true;
}

std::optional<Seed> find_ideal_patient_zero(const TemporalGraph& g, const SirParams& params) {
    if (g.n == 0) return std::nullopt;
    AdjacencyIndex adj(g);
    SirParams single = params;
    single.k = 1;
    for (int v = 0; v < g.n; ++v) {
        for (int t = 0; t <= g.tmax; ++t) {
            InfectionLog log = simulate(g, adj, {{v, t}}, single);
            if (log.infected_count() == g.n) return Seed{v, t};
        }
    }
    return std::nullopt;
}

} // namespace tempograph
