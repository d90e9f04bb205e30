#pragma once

#include "tempograph/temporal_graph.hpp"

#include <optional>
#include <vector>

namespace tempograph {

// Undirected static graph (no labels), adjacency-list based.
struct StaticGraph {
    int n = 0;
    std::vector<std::vector<int>> adj;
    int edge_count = 0;

    static StaticGraph from_pairs(int n, const std::vector<PairKey>& pairs);
    static StaticGraph from_temporal(const TemporalGraph& g);

    bool connected() const;
    bool is_tree() const; // connected with exactly n-1 edges

    // nodes reachable from v with `removed` nodes deleted
    std::vector<int> component_of(int v, const std::vector<bool>& removed) const;
};

// Node set S of size <= size_bound such that every component of G - S carries
// at most half of the total weight. Trees use the weighted centroid; other
// graphs fall back to exhaustive subset search by increasing size (desk
// scale). Returns std::nullopt when no separator within the bound exists.
std::optional<std::vector<int>> balanced_separator(const StaticGraph& g,
                                                   const std::vector<long long>& weights,
                                                   int size_bound);

// Weighted centroid of a tree: node minimizing the heaviest component of
// G - v; its maximum component weight is at most half the total.
int weighted_tree_centroid(const StaticGraph& g, const std::vector<long long>& weights);

// Unweighted centroid of the subtree induced by `nodes` (must be connected).
int subtree_centroid(const StaticGraph& g, const std::vector<int>& nodes);

} // namespace tempograph
