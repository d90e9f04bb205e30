#pragma once

#include "tempograph/discovery.hpp"
#include "tempograph/temporal_graph.hpp"

#include <iosfwd>
#include <string>

namespace tempograph {

// Temporal edge-list text format:
//   n m tmax delta mode
//   u v t          (m lines, 0-indexed nodes, 1-indexed times)
// Writing is canonical, so write(parse(text)) == text for canonical input.
struct GraphFile {
    TemporalGraph graph;
    int delta = 1;
};

// Throws std::runtime_error with a line number on malformed input.
GraphFile parse_temporal_edge_list(const std::string& text);
std::string write_temporal_edge_list(const GraphFile& file);

GraphFile read_graph_file(const std::string& path);
void write_graph_file(const std::string& path, const GraphFile& file);

// SNAP-style interaction CSV: rows `u,v,timestamp[,ignored...]`, one header
// row tolerated. Raw timestamps map linearly onto [1, tmax_buckets]; nodes are
// renumbered by first appearance; self-interaction rows are dropped and
// counted; duplicate (u, v, bucket) instances collapse.
struct SnapIngestResult {
    TemporalGraph graph;
    int dropped_self_loops = 0;
    int rows = 0;
};

SnapIngestResult snap_ingest(const std::string& csv_text, int tmax_buckets);

// Line-oriented transcript serialization:
//   ROUND i PHASE p SEEDS (v,t)... FEEDBACK LOG (u,v,t)... | TIMES (v,t)...
//   CLAIM n m tmax mode EDGES (u,v,t)...
//   VERDICT DISCOVERER|ADVERSARY reason...
std::string write_transcript(const DiscoveryTranscript& tr);

} // namespace tempograph
