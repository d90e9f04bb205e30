#pragma once

#include "tempograph/simulate.hpp"
#include "tempograph/temporal_graph.hpp"

#include <optional>
#include <vector>

namespace tempograph {

// Partition of edge instances: two instances are related iff they share an
// endpoint and their label difference is at most delta; components are the
// transitive closure of that relation. Component ids are contiguous from 0,
// numbered by the smallest edge index they contain.
struct DeltaComponents {
    std::vector<int> assignment; // edge index -> component id
    int count = 0;

    std::vector<int> sizes() const {
        std::vector<int> s(count, 0);
        for (int c : assignment) ++s[c];
        return s;
    }
    double mean_size() const {
        if (count == 0) return 0.0;
        return static_cast<double>(assignment.size()) / count;
    }
};

DeltaComponents delta_edge_components(const TemporalGraph& g, int delta);

// True iff consecutive nodes are adjacent and some choice of labels along the
// edges is strictly increasing. Sequences of length <= 1 hold vacuously.
bool is_temporal_path(const TemporalGraph& g, const std::vector<int>& nodes);

// Enumerates (v, t) over V x [0, tmax] in order (lowest v, then lowest t) and
// returns the first pair whose single seed infection engulfs the whole graph.
std::optional<Seed> find_ideal_patient_zero(const TemporalGraph& g, const SirParams& params);

} // namespace tempograph
