#include "tempograph/generators.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <stdexcept>

namespace tempograph {

namespace {

int auto_tmax(const LabelRule& rule, int m) {
    switch (rule.kind) {
    case LabelRule::Constant: return std::max(rule.constant, 1);
    case LabelRule::Increasing: return std::max(m, 1);
    case LabelRule::UniformRandom: return std::max(m, 1);
    }
    return 1;
}

TemporalGraph label_edges(int n, const std::vector<PairKey>& pairs, const LabelRule& rule,
                          int tmax, std::uint64_t seed) {
    TemporalGraph g;
    g.n = n;
    g.tmax = tmax > 0 ? tmax : auto_tmax(rule, static_cast<int>(pairs.size()));
    g.mode = EdgeMode::Simple;
    Rng rng(seed);
    for (size_t i = 0; i < pairs.size(); ++i) {
        int label = 1;
        switch (rule.kind) {
        case LabelRule::Constant: label = rule.constant; break;
        case LabelRule::Increasing: label = static_cast<int>(i) + 1; break;
        case LabelRule::UniformRandom: label = rng.uniform_int(1, g.tmax); break;
        }
        if (label < 1 || label > g.tmax)
            throw std::invalid_argument("label rule exceeds the lifetime");
        g.edges.push_back({pairs[i].a, pairs[i].b, label});
    }
    return g;
}

} // namespace

TemporalGraph gen_ert(const ErtParams& params) {
    if (params.p < 0.0 || params.p > 1.0) throw std::invalid_argument("p must be in [0,1]");
    if (params.n < 1 || params.tmax < 1) throw std::invalid_argument("n and tmax must be positive");
    TemporalGraph g;
    g.n = params.n;
    g.tmax = params.tmax;
    g.mode = EdgeMode::Simple;
    Rng rng(params.rng_seed);
    for (int i = 0; i < params.n; ++i)
        for (int j = i + 1; j < params.n; ++j)
            if (rng.bernoulli(params.p)) g.edges.push_back({i, j, rng.uniform_int(1, params.tmax)});
    return g;
}

TemporalGraph gen_path(int n, LabelRule rule, int tmax, std::uint64_t seed) {
    if (n < 1) throw std::invalid_argument("n must be positive");
    std::vector<PairKey> pairs;
    for (int i = 0; i + 1 < n; ++i) pairs.emplace_back(i, i + 1);
    return label_edges(n, pairs, rule, tmax, seed);
}

TemporalGraph gen_star(int n, LabelRule rule, int tmax, std::uint64_t seed) {
    if (n < 1) throw std::invalid_argument("n must be positive");
    std::vector<PairKey> pairs;
    for (int i = 1; i < n; ++i) pairs.emplace_back(0, i);
    return label_edges(n, pairs, rule, tmax, seed);
}

TemporalGraph gen_complete(int n, LabelRule rule, int tmax, std::uint64_t seed) {
    if (n < 1) throw std::invalid_argument("n must be positive");
    std::vector<PairKey> pairs;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) pairs.emplace_back(i, j);
    return label_edges(n, pairs, rule, tmax, seed);
}

TemporalGraph gen_random_tree(int n, LabelRule rule, int tmax, std::uint64_t seed) {
    if (n < 1) throw std::invalid_argument("n must be positive");
    Rng rng(seed);
    std::vector<PairKey> pairs;
    for (int i = 1; i < n; ++i) pairs.emplace_back(rng.uniform_int(0, i - 1), i);
    return label_edges(n, pairs, rule, tmax, seed ^ 0x9e3779b97f4a7c15ULL);
}

TemporalGraph relabel_bfs_depth(const TemporalGraph& g, int root) {
    std::vector<std::vector<int>> adj(g.n);
    for (const EdgeInstance& e : g.edges) {
        adj[e.u].push_back(e.v);
        adj[e.v].push_back(e.u);
    }
    std::vector<int> depth(g.n, -1);
    std::deque<int> bfs{root};
    depth[root] = 0;
    int max_depth = 0;
    while (!bfs.empty()) {
        int v = bfs.front();
        bfs.pop_front();
        for (int w : adj[v])
            if (depth[w] < 0) {
                depth[w] = depth[v] + 1;
                max_depth = std::max(max_depth, depth[w]);
                bfs.push_back(w);
            }
    }
    for (int v = 0; v < g.n; ++v)
        if (depth[v] < 0) throw std::invalid_argument("graph is not connected");
    TemporalGraph out = g;
    out.tmax = std::max(max_depth, 1);
    for (EdgeInstance& e : out.edges) e.label = std::max(depth[e.u], depth[e.v]);
    return out;
}

std::vector<PairKey> build_balanced_edge_set(int n, int m) {
    if (n < 2 || m < 1 || m > n * (n - 1) / 2)
        throw std::invalid_argument("need 1 <= m <= C(n,2)");
    std::vector<int> degree(n, 0);
    std::set<PairKey> edges;
    edges.insert(PairKey(0, 1));
    degree[0] = degree[1] = 1;
    while (static_cast<int>(edges.size()) < m) {
        int a = -1;
        for (int v = 0; v < n; ++v)
            if (degree[v] > 0 && degree[v] < n - 1 && (a < 0 || degree[v] < degree[a])) a = v;
        if (a < 0) throw std::logic_error("no extendable node left");
        int b = -1;
        for (int v = 0; v < n; ++v) {
            if (v == a || edges.count(PairKey(a, v))) continue;
            if (b < 0 || degree[v] < degree[b]) b = v;
        }
        edges.insert(PairKey(a, b));
        ++degree[a];
        ++degree[b];
    }
    return {edges.begin(), edges.end()};
}

SourcePathInstance build_source_path_lb(int n, int s) {
    if (n < 1 || s < 1 || s > n) throw std::invalid_argument("need 1 <= s <= n");
    SourcePathInstance inst;
    inst.graph.n = n;
    inst.graph.tmax = n;
    inst.graph.mode = EdgeMode::Simple;
    for (int i = 1; i <= n - 1; ++i) {
        int label = i < s ? n - i : i;
        inst.graph.edges.push_back({i - 1, i, label});
    }
    inst.source = s - 1;
    inst.t0 = 0;
    inst.params = {n, 1};
    return inst;
}

std::vector<std::vector<int>> hamiltonian_path_decomposition(int x) {
    if (x < 1) throw std::invalid_argument("x must be positive");
    const int nodes = 2 * x;
    // zig-zag base path 0, 1, 2x-1, 2, 2x-2, ... shifted by q, then relabeled
    // so that path q starts at node 2q+1 (paths visit 0..2x-1)
    std::vector<int> base;
    base.push_back(0);
    for (int j = 1; j <= x; ++j) {
        base.push_back(j);
        if (j < x) base.push_back(nodes - j);
    }
    // relabeling: 0..x-1 -> odd ids, x..2x-1 -> even ids
    auto sigma = [&](int v) { return v < x ? 2 * v + 1 : 2 * (v - x); };
    std::vector<std::vector<int>> paths(x);
    for (int q = 0; q < x; ++q) {
        paths[q].reserve(nodes);
        for (int v : base) paths[q].push_back(sigma((v + q) % nodes));
    }
    return paths;
}

HamiltonianInstance build_hamiltonian_lb(int n, std::uint64_t seed) {
    if (n < 3 || n % 2 == 0) throw std::invalid_argument("need odd n >= 3");
    const int x = (n - 1) / 2;
    Rng rng(seed);

    // random placement of the source and the cycle nodes
    std::vector<int> ids(n);
    for (int i = 0; i < n; ++i) ids[i] = i;
    rng.shuffle(ids);
    int source = ids[0];

    std::vector<std::vector<int>> deco = hamiltonian_path_decomposition(x);
    std::vector<int> order(x);
    for (int i = 0; i < x; ++i) order[i] = i;
    rng.shuffle(order);

    HamiltonianInstance inst;
    inst.graph.n = n;
    inst.graph.tmax = (x + 1) * n;
    inst.graph.mode = EdgeMode::Simple;
    inst.source = source;
    inst.params = {1, 1};

    for (int p = 1; p <= x; ++p) {
        const std::vector<int>& deco_path = deco[order[p - 1]];
        std::vector<int> path;
        path.push_back(source);
        for (int v : deco_path) path.push_back(ids[1 + v]);
        // labels p*n + q along the path, closing edge gets position n
        for (int q = 1; q <= n - 1; ++q)
            inst.graph.edges.push_back({path[q - 1], path[q], p * n + q});
        inst.graph.edges.push_back({path[n - 1], source, p * n + n});
        inst.paths.push_back(std::move(path));
        inst.t0_schedule.push_back(p * n);
    }
    return inst;
}

HubFamily build_hub_family(int n, int tmax) {
    if (n < 4 || n % 2 != 0) throw std::invalid_argument("need even n >= 4");
    if (tmax < 4) throw std::invalid_argument("need tmax >= 4");
    HubFamily fam;
    fam.graph.n = n;
    fam.graph.tmax = tmax;
    fam.graph.mode = EdgeMode::Simple;
    const int hub1 = n - 2, hub2 = n - 1;
    // path edges; every second one keeps a lazily-answered label (the stored
    // label is a placeholder for those)
    for (int i = 0; i + 1 <= n - 3; ++i) {
        bool is_fixed = (i % 2) == 1;
        fam.graph.edges.push_back({i, i + 1, is_fixed ? tmax : 1});
        fam.fixed.push_back(is_fixed);
        if (!is_fixed) ++fam.relevant_edges;
    }
    for (int i = 0; i <= n - 3; ++i) {
        fam.graph.edges.push_back({i, hub1, tmax - 2});
        fam.fixed.push_back(true);
    }
    fam.graph.edges.push_back({hub1, hub2, tmax - 1});
    fam.fixed.push_back(true);
    for (int i = 0; i <= n - 3; ++i) {
        fam.graph.edges.push_back({i, hub2, tmax});
        fam.fixed.push_back(true);
    }
    return fam;
}

WitnessHardFamily build_witness_hard_family(int x, WitnessHardReading reading) {
    if (x < 2) throw std::invalid_argument("need x >= 2");
    WitnessHardFamily fam;
    fam.x = x;
    const int delta = 4 * x + 1;
    fam.params = {delta, 1};
    fam.graph.n = 5 * x;
    fam.graph.tmax = x * delta;
    fam.graph.mode = EdgeMode::Simple;

    auto base = [&](int i) { return (i - 1) * delta; };
    auto add = [&](int u, int v, int label) {
        if (label < 1 || label > fam.graph.tmax) return; // clamp rule overflow
        fam.graph.edges.push_back({u, v, label});
    };

    // paths on R in block-local ids 0..2x-1; path q (1-based) starts at the
    // R2 node r_{2q}
    std::vector<std::vector<int>> paths = hamiltonian_path_decomposition(x);

    for (int i = 1; i <= x; ++i) {
        const std::vector<int>& p = paths[i - 1];
        // bipartite edges from l_i to R2; the backup edge from b_i sits one
        // step above the corresponding bipartite label so it catches the
        // infection right away
        if (reading == WitnessHardReading::NodeIndex) {
            for (int k = 1; k <= x; ++k) add(fam.l(i), fam.r(2 * k), base(i) + 4 * k - 2);
            for (int j = 1; j <= 2 * x; ++j) add(fam.b(i), fam.r(j), base(i) + 2 * j - 1);
        } else {
            int rank = 0;
            for (size_t pos = 0; pos < p.size(); ++pos) {
                if (p[pos] % 2 == 0) continue; // block-odd ids are the R2 nodes
                ++rank;
                add(fam.l(i), fam.r(p[pos] + 1), base(i) + 4 * static_cast<int>(pos + 1) + 1);
            }
            for (size_t j = 0; j < p.size(); ++j)
                add(fam.b(i), fam.r(p[j] + 1), base(i) + 2 * static_cast<int>(j + 1) + 2);
        }
        // path edges
        for (size_t j = 0; j + 1 < p.size(); ++j)
            add(fam.r(p[j] + 1), fam.r(p[j + 1] + 1), base(i) + 2 * static_cast<int>(j + 1) + 1);
    }
    for (int i = 1; i <= x; ++i) {
        for (int j = i + 1; j <= x; ++j) add(fam.b(i), fam.b(j), i * delta - 2);
        add(fam.b(i), fam.c(i), i * delta - 1);
        for (int j = 1; j < i; ++j) add(fam.b(i), fam.c(j), i * delta - 2);
        for (int j = 1; j <= 2 * x; ++j) add(fam.c(i), fam.r(j), i * delta);
        for (int l = 1; l <= x; ++l) add(fam.l(l), fam.b(i), i * delta);
    }
    return fam;
}

} // namespace tempograph
