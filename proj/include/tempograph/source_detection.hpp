#pragma once

#include "tempograph/knowledge.hpp"
#include "tempograph/separator.hpp"
#include "tempograph/simulate.hpp"
#include "tempograph/temporal_graph.hpp"

#include <cstdint>
#include <memory>
#include <variant>
#include <vector>

namespace tempograph {

enum class SourceBehavior { Consistent, ObliviouslyDynamic };

std::string to_string(SourceBehavior b);

struct SourceGameConfig {
    SourceBehavior behavior = SourceBehavior::Consistent;
    KnowledgeMode knowledge = KnowledgeMode::KnownStatic;
    int watchers = 1;
    SirParams params; // delta; the k field is not used by this game
    int n = 0;
    int tmax = 1;
    long long round_cap = -1; // -1: n^2 + n

    long long effective_round_cap() const {
        return round_cap >= 0 ? round_cap : static_cast<long long>(n) * n + n;
    }
};

// origin of a watched node's infection; the source's own seed shows up as
// kSeedOrigin ("infected but not via an edge")
inline constexpr int kSeedOrigin = -1;

struct WatchObservation {
    int node = -1;
    bool infected = false;
    int time = -1;
    int origin = kSeedOrigin;
};

struct WatchFeedback {
    std::vector<WatchObservation> observations; // one per watched node, same order
};

struct SourceGameView {
    int n = 0;
    int tmax = 1;
    int watchers = 1;
    SirParams params;
    SourceBehavior behavior = SourceBehavior::Consistent;
    KnowledgeMode knowledge = KnowledgeMode::KnownStatic;
    std::vector<PairKey> static_edges; // empty under nodes-only knowledge
};

// The adversary is oblivious to watches: round logs may depend only on the
// round index. The source node never changes; dynamic adversaries may vary
// the seed time (and thereby the realized chain).
class SourceAdversary {
public:
    virtual ~SourceAdversary() = default;
    virtual const TemporalGraph& graph() const = 0;
    virtual int source() const = 0;
    virtual const InfectionLog& round_log(long long round) = 0;
};

using WatchSet = std::vector<int>;
using SourceAction = std::variant<WatchSet, int>; // watch request or suspect

struct SourceMetrics {
    long long phases = 0;     // completed candidate restrictions
    long long traceback = 0;  // trace-back rounds used
    long long max_depth = 0;  // recursion depth (centroid search)
};

class SourceDiscoverer {
public:
    virtual ~SourceDiscoverer() = default;
    virtual void start(const SourceGameView& view, std::uint64_t rng_seed) = 0;
    virtual SourceAction next_round() = 0;
    virtual void observe(const WatchFeedback& fb) = 0;
    virtual SourceMetrics metrics() const { return {}; }
};

struct PriceMeter {
    long long total_infections = 0;
    long long rounds = 0;
};

struct SourceRoundRecord {
    WatchSet watches;
    WatchFeedback feedback;
    int infected_count = 0;
};

struct SourceGameResult {
    bool won = false;
    bool timed_out = false;
    int suspect = -1;
    int true_source = -1;
    PriceMeter price;
    std::vector<SourceRoundRecord> rounds;
    SourceMetrics metrics;
};

// Drives the protocol: each round the adversary's chain unfolds (its
// infections all count toward the price), the discoverer sees feedback for
// its watch set only, and the game ends when a suspect is named.
SourceGameResult run_source_game(SourceDiscoverer& d, SourceAdversary& a,
                                 const SourceGameConfig& cfg, std::uint64_t rng_seed);

// ---- adversaries ----

// Emits the same chain every round: simulate(graph, {(source, t0)}).
std::unique_ptr<SourceAdversary> consistent_adversary(TemporalGraph graph, int source, int t0,
                                                      SirParams params);

// Round i seeds the source at t0_schedule[i mod len]; oblivious to watches.
std::unique_ptr<SourceAdversary> dynamic_adversary(TemporalGraph graph, int source,
                                                   std::vector<int> t0_schedule, SirParams params);

// ---- discoverers ----

// One round per node in id order; terminates on the seed observation. Always
// wins within n rounds, tolerating at most n^2 infections.
std::unique_ptr<SourceDiscoverer> watch_all_discoverer();

// Watches ceil(sqrt(n)) uniform nodes one round each, then traces back the
// infection chain from the earliest-infected sample. With abort=true the
// trace stops after ceil(sqrt(n)) steps so the whole run takes at most
// 2*ceil(sqrt(n)) rounds; without it the trace runs until the source is found
// (falling back to uniform random watching when no sample was infected).
std::unique_ptr<SourceDiscoverer> sqrt_discoverer(bool abort);

// Watches one uniform node per round until the watched node is infected in
// that round, then suspects it (seed observation) or its reported origin.
std::unique_ptr<SourceDiscoverer> random_watch_discoverer();

// Separator-based search on a known static graph with consistent behavior:
// maintain candidates, watch a balanced separator of the candidate weights
// one node per round, fall back to uniform candidate watching when the
// separator stays clean, and restrict candidates to the implicated component.
std::unique_ptr<SourceDiscoverer> separator_discoverer(int size_bound);

// Tree search under obliviously dynamic behavior watching two nodes per
// round: the current centroid plus a uniform candidate.
std::unique_ptr<SourceDiscoverer> centroid_two_watch_discoverer();

// ---- wrappers ----

class KnownToUnknownWrapper : public SourceDiscoverer {
public:
    virtual const SourceGameView& inner_view() const = 0;
};

// Runs a known-static-graph discoverer in a nodes-only game by presenting it
// the complete graph with lifetime tmax + delta + 1 and relaying rounds
// verbatim; suspect and price carry over one-to-one.
std::unique_ptr<KnownToUnknownWrapper> wrap_known_to_unknown(std::unique_ptr<SourceDiscoverer> inner);

// Serializes each inner round of up to k watches into single-watch rounds;
// sound for consistent sources, with price at most k times the inner price.
std::unique_ptr<SourceDiscoverer> wrap_k_to_one(std::unique_ptr<SourceDiscoverer> inner,
                                                int inner_watchers);

} // namespace tempograph
