#include "tempograph/separator.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <stdexcept>

namespace tempograph {

StaticGraph StaticGraph::from_pairs(int n, const std::vector<PairKey>& pairs) {
    StaticGraph g;
    g.n = n;
    g.adj.resize(n);
    std::set<std::pair<int, int>> seen;
    for (const PairKey& p : pairs) {
        if (!seen.insert({p.a, p.b}).second) continue;
        g.adj[p.a].push_back(p.b);
        g.adj[p.b].push_back(p.a);
        ++g.edge_count;
    }
    for (auto& a : g.adj) std::sort(a.begin(), a.end());
    return g;
}

StaticGraph StaticGraph::from_temporal(const TemporalGraph& g) {
    std::vector<PairKey> pairs;
    pairs.reserve(g.edges.size());
    for (const EdgeInstance& e : g.edges) pairs.emplace_back(e.u, e.v);
    return from_pairs(g.n, pairs);
}

bool StaticGraph::connected() const {
    if (n == 0) return true;
    std::vector<bool> removed(n, false);
    return static_cast<int>(component_of(0, removed).size()) == n;
}

bool StaticGraph::is_tree() const { return edge_count == n - 1 && connected(); }

std::vector<int> StaticGraph::component_of(int v, const std::vector<bool>& removed) const {
    std::vector<int> out;
    if (removed[v]) return out;
    std::vector<bool> visited(n, false);
    std::deque<int> queue{v};
    visited[v] = true;
    while (!queue.empty()) {
        int u = queue.front();
        queue.pop_front();
        out.push_back(u);
        for (int w : adj[u])
            if (!visited[w] && !removed[w]) {
                visited[w] = true;
                queue.push_back(w);
            }
    }
    std::sort(out.begin(), out.end());
    return out;
}

namespace {

bool separator_balanced(const StaticGraph& g, const std::vector<long long>& weights,
                        const std::vector<bool>& removed, long long total) {
    std::vector<bool> visited = removed;
    for (int v = 0; v < g.n; ++v) {
        if (visited[v]) continue;
        long long weight = 0;
        std::deque<int> queue{v};
        visited[v] = true;
        while (!queue.empty()) {
            int u = queue.front();
            queue.pop_front();
            weight += weights[u];
            for (int w : g.adj[u])
                if (!visited[w]) {
                    visited[w] = true;
                    queue.push_back(w);
                }
        }
        if (2 * weight > total) return false;
    }
    return true;
}

} // namespace

int weighted_tree_centroid(const StaticGraph& g, const std::vector<long long>& weights) {
    if (g.n == 0) throw std::invalid_argument("empty tree");
    long long total = 0;
    for (long long w : weights) total += w;

    // iterative post-order over the tree rooted at 0
    std::vector<long long> below(g.n, 0);
    std::vector<int> parent(g.n, -1), order;
    order.reserve(g.n);
    std::deque<int> stack{0};
    std::vector<bool> seen(g.n, false);
    seen[0] = true;
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        order.push_back(v);
        for (int w : g.adj[v])
            if (!seen[w]) {
                seen[w] = true;
                parent[w] = v;
                stack.push_back(w);
            }
    }
    for (auto it = order.rbegin(); it != order.rend(); ++it) {
        below[*it] += weights[*it];
        if (parent[*it] >= 0) below[parent[*it]] += below[*it];
    }
    int best = -1;
    long long best_max = 0;
    for (int v = 0; v < g.n; ++v) {
        long long worst = total - below[v]; // the side through the parent
        for (int w : g.adj[v])
            if (w != parent[v]) worst = std::max(worst, below[w]);
        if (best < 0 || worst < best_max) {
            best = v;
            best_max = worst;
        }
    }
    return best;
}

int subtree_centroid(const StaticGraph& g, const std::vector<int>& nodes) {
    if (nodes.empty()) throw std::invalid_argument("empty subtree");
    std::vector<bool> member(g.n, false);
    for (int v : nodes) member[v] = true;

    int best = -1;
    long long best_max = 0;
    std::vector<bool> removed(g.n, true);
    for (int v : nodes) removed[v] = false;
    for (int v : nodes) {
        removed[v] = true;
        long long worst = 0;
        std::vector<bool> visited(g.n, false);
        for (int s : nodes) {
            if (s == v || visited[s]) continue;
            long long size = 0;
            std::deque<int> queue{s};
            visited[s] = true;
            while (!queue.empty()) {
                int u = queue.front();
                queue.pop_front();
                ++size;
                for (int w : g.adj[u])
                    if (member[w] && !visited[w] && !removed[w]) {
                        visited[w] = true;
                        queue.push_back(w);
                    }
            }
            worst = std::max(worst, size);
        }
        removed[v] = false;
        if (best < 0 || worst < best_max) {
            best = v;
            best_max = worst;
        }
    }
    return best;
}

std::optional<std::vector<int>> balanced_separator(const StaticGraph& g,
                                                   const std::vector<long long>& weights,
                                                   int size_bound) {
    if (size_bound < 1) throw std::invalid_argument("size bound must be at least 1");
    long long total = 0;
    for (long long w : weights) total += w;
    if (total <= 0) throw std::invalid_argument("no candidate weight");

    if (g.is_tree()) return std::vector<int>{weighted_tree_centroid(g, weights)};

    if (g.n > 32) throw std::invalid_argument("exhaustive separator search is desk scale only");

    std::vector<bool> removed(g.n, false);
    for (int size = 1; size <= std::min(size_bound, g.n); ++size) {
        std::vector<int> pick(size);
        for (int i = 0; i < size; ++i) pick[i] = i;
        while (true) {
            std::fill(removed.begin(), removed.end(), false);
            for (int v : pick) removed[v] = true;
            if (separator_balanced(g, weights, removed, total)) return pick;
            int i = size - 1;
            while (i >= 0 && pick[i] == g.n - (size - i)) --i;
            if (i < 0) break;
            ++pick[i];
            for (int j = i + 1; j < size; ++j) pick[j] = pick[j - 1] + 1;
        }
    }
    return std::nullopt;
}

} // namespace tempograph
