#pragma once

#include "tempograph/rng.hpp"
#include "tempograph/temporal_graph.hpp"

#include <cstdint>
#include <vector>

namespace tempograph {

// Temporal Erdos-Renyi: each unordered pair present independently with
// probability p, each present edge labeled uniformly from [1, tmax].
struct ErtParams {
    int n = 1;
    double p = 0.0;
    int tmax = 1;
    std::uint64_t rng_seed = 0;
};

TemporalGraph gen_ert(const ErtParams& params);

// Label assignment for the structured generators.
struct LabelRule {
    enum Kind { Constant, Increasing, UniformRandom };
    Kind kind = Increasing;
    int constant = 1;

    static LabelRule constant_label(int c) { return {Constant, c}; }
    static LabelRule increasing() { return {Increasing, 1}; }
    static LabelRule uniform() { return {UniformRandom, 1}; }
};

// tmax == 0 picks the smallest lifetime that fits the rule.
TemporalGraph gen_path(int n, LabelRule rule, int tmax = 0, std::uint64_t seed = 0);
TemporalGraph gen_star(int n, LabelRule rule, int tmax = 0, std::uint64_t seed = 0);
TemporalGraph gen_complete(int n, LabelRule rule, int tmax = 0, std::uint64_t seed = 0);
// uniform random recursive tree: node i attaches to a uniform node below it
TemporalGraph gen_random_tree(int n, LabelRule rule, int tmax = 0, std::uint64_t seed = 0);

// Relabels edges with the BFS depth of their deeper endpoint from `root`, so
// a single seed at (root, 0) infects the whole (connected) graph for any
// delta >= 1. tmax becomes the graph's depth.
TemporalGraph relabel_bfs_depth(const TemporalGraph& g, int root);

// Degree-balanced connected edge set: connect the node of smallest positive
// degree to the node of smallest degree until m edges are placed.
std::vector<PairKey> build_balanced_edge_set(int n, int m);

// ---- lower-bound families ----

// Path instance for the source detection bounds: nodes 1..n (0-indexed here),
// labels n-i left of the source and i right of it, delta = n, seed time 0.
// A consistent adversary seeded at the source infects every node each round.
struct SourcePathInstance {
    TemporalGraph graph;
    int source = 0; // 0-indexed node
    int t0 = 0;
    SirParams params;
};

SourcePathInstance build_source_path_lb(int n, int s); // 1 <= s <= n

// Complete graph on odd n decomposed into (n-1)/2 edge-disjoint hub cycles,
// broken into paths at the source; edge labels p*n + q for path index p and
// position q, delta = 1. The cycle-closing edge gets position n on its path.
// Round i of the rotation schedule infects all n nodes along path i mod
// (n-1)/2.
struct HamiltonianInstance {
    TemporalGraph graph;
    int source = 0;
    std::vector<std::vector<int>> paths; // node sequences, each starting at source
    std::vector<int> t0_schedule;        // seed time per path
    SirParams params;
};

HamiltonianInstance build_hamiltonian_lb(int n, std::uint64_t seed);

// Temporally connected host for the graph discovery lower bound: a path of
// n-2 nodes, hub node n-2 joined to every path node at tmax-2, hubs n-2 and
// n-1 joined at tmax-1, hub n-1 joined to every path node at tmax. Alternating
// path edges carry the fixed label tmax as well; the remaining path edges are
// the lazily-answered template slots (their stored label is a placeholder).
struct HubFamily {
    TemporalGraph graph;
    std::vector<bool> fixed; // per edge instance
    int relevant_edges = 0;  // unfixed count
};

HubFamily build_hub_family(int n, int tmax);

// Witness-hardness family of size n = 5x with tmax = x(4x+1) and
// delta = 4x+1: node groups L, R, B, C, x edge-disjoint Hamiltonian paths on
// R, and the eight label rules that confine each L-node's bipartite edges to
// its own phase. Two of the label rules are ambiguous about what j indexes;
// the node-index reading (offsets 4k+1 toward r_{2k} and 2j+2 toward r_j)
// keeps every backup edge one step above the infection it must catch, which
// is what the phase machinery needs. The path-position reading is kept
// selectable for comparison.
struct WitnessHardFamily {
    TemporalGraph graph;
    int x = 0;
    SirParams params; // delta = 4x+1

    // node ids
    int l(int i) const { return i - 1; }              // i in [1, x]
    int r(int j) const { return x + j - 1; }          // j in [1, 2x]
    int b(int i) const { return 3 * x + i - 1; }      // i in [1, x]
    int c(int i) const { return 4 * x + i - 1; }      // i in [1, x]

    bool is_l(int v) const { return v < x; }
    bool is_r2(int v) const { return v >= x && v < 3 * x && (v - x) % 2 == 1; }

    // phase of a label: 1-based index i with label in ((i-1)*delta, i*delta]
    int phase_of(int label) const { return (label - 1) / params.delta + 1; }
};

enum class WitnessHardReading { NodeIndex, PathPosition };

WitnessHardFamily build_witness_hard_family(
    int x, WitnessHardReading reading = WitnessHardReading::NodeIndex);

// x edge-disjoint Hamiltonian paths covering K_{2x} (zig-zag construction),
// path q starting at node 2q (0-indexed nodes 0..2x-1).
std::vector<std::vector<int>> hamiltonian_path_decomposition(int x);

} // namespace tempograph
