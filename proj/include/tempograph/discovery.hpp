#pragma once

#include "tempograph/knowledge.hpp"
#include "tempograph/simulate.hpp"
#include "tempograph/temporal_graph.hpp"

#include <memory>
#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace tempograph {

struct DiscoveryConfig {
    FeedbackMode feedback = FeedbackMode::FullLog;
    KnowledgeMode knowledge = KnowledgeMode::KnownStatic;
    EdgeMode edge_mode = EdgeMode::Simple;
    SirParams params;
    int n = 0;
    int tmax = 1;
    long long round_cap = -1; // -1: 4 * n * tmax
    TieBreak tie_break = TieBreak::LowestInfector;
    bool cross_check = true; // exhaustive adjudication cross-check at desk sizes

    long long effective_round_cap() const {
        return round_cap >= 0 ? round_cap : 4LL * n * tmax;
    }
};

// What the Discoverer learns before the first round.
struct StaticView {
    int n = 0;
    int tmax = 1;
    SirParams params;
    EdgeMode mode = EdgeMode::Simple;
    KnowledgeMode knowledge = KnowledgeMode::KnownStatic;
    FeedbackMode feedback = FeedbackMode::FullLog;
    // known static pairs; multiplicity is meaningful only in multiedge mode
    std::vector<std::pair<PairKey, int>> pairs;
};

struct RoundFeedback {
    const InfectionLog* log = nullptr; // null under times-only feedback
    const Timetable* times = nullptr;
};

enum class Phase { ComponentDiscovery, ComponentExploration, Other };

struct SeedRequest {
    SeedSet seeds;
    Phase phase = Phase::Other;
};

using DiscovererAction = std::variant<SeedRequest, TemporalGraph>;

class DiscovererStrategy {
public:
    virtual ~DiscovererStrategy() = default;
    virtual void start(const StaticView& view) = 0;
    virtual DiscovererAction next_round() = 0;
    virtual void observe(const RoundFeedback& fb) = 0;
};

class AdversaryStrategy {
public:
    virtual ~AdversaryStrategy() = default;
    virtual int n() const = 0;
    virtual int tmax() const = 0;
    // pairs revealed when the Discoverer knows the static graph
    virtual std::vector<std::pair<PairKey, int>> pairs_view() const = 0;
    virtual InfectionLog respond(const SeedSet& seeds) = 0;
    // a temporal graph consistent with all feedback given so far
    virtual TemporalGraph finalize() = 0;
};

struct DiscoveryRound {
    SeedSet seeds;
    InfectionLog log;
    Timetable times;
    Phase phase = Phase::Other;
    long long phi_after = 0;
};

struct AdjudicationResult {
    bool discoverer_wins = false;
    std::string reason;
    int counterexample_round = -1; // round whose feedback refutes the claim
    std::optional<TemporalGraph> counterexample;
    // exhaustive cross-check results (when it ran)
    bool cross_checked = false;
    long long consistent_labelings = -1;
};

struct DiscoveryTranscript {
    DiscoveryConfig cfg;
    std::vector<DiscoveryRound> rounds;
    std::optional<TemporalGraph> claim;
    AdjudicationResult verdict;
    bool timed_out = false;
    bool finalize_consistent = true;

    long long rounds_total() const { return static_cast<long long>(rounds.size()); }
    long long rounds_in_phase(Phase p) const {
        long long c = 0;
        for (const auto& r : rounds)
            if (r.phase == p) ++c;
        return c;
    }
};

// Drives the protocol: the Discoverer submits seed sets, the Adversary
// answers with infection logs, and a final claim is adjudicated with
// adjudicate_unique. Exceeding the round cap is an Adversary win by timeout.
DiscoveryTranscript run_discovery_game(DiscovererStrategy& d, AdversaryStrategy& a,
                                       const DiscoveryConfig& cfg);

// Candidate-label elimination adjudication: the claim wins iff it matches the
// accumulated knowledge and every candidate set is pinned. For tiny instances
// an exhaustive enumeration over labelings cross-checks the verdict.
AdjudicationResult adjudicate_unique(const DiscoveryConfig& cfg, const StaticView& view,
                                     const std::vector<DiscoveryRound>& rounds,
                                     const TemporalGraph& claim);

// ---- ideal patient zero game ----

struct IpzAnswer {
    std::optional<Seed> pair; // nullopt encodes "no ideal patient zero"
};

using IpzAction = std::variant<SeedRequest, IpzAnswer>;

class IpzDiscoverer {
public:
    virtual ~IpzDiscoverer() = default;
    virtual void start(const StaticView& view) = 0;
    virtual IpzAction next_round() = 0;
    virtual void observe(const RoundFeedback& fb) = 0;
};

struct IpzGameResult {
    IpzAnswer answer;
    bool correct = false; // against the offline oracle on the finalized graph
    long long rounds = 0;
    bool timed_out = false;
    std::vector<DiscoveryRound> round_records;
};

IpzGameResult run_ipz_game(IpzDiscoverer& d, AdversaryStrategy& a, const DiscoveryConfig& cfg);

// ---- discoverers ----

// Seeds every node at every time in [0, tmax-1], batched k per round, then
// claims the knowledge graph. Works in nodes-only and times-only modes.
std::unique_ptr<DiscovererStrategy> brute_force_discoverer();

// The discovery extension of the follow algorithm: sweep a node with unknown
// adjacent labels in delta steps, then explore every observed infection.
// With skip_redundant, seeds at nodes whose adjacent labels are all known are
// omitted.
std::unique_ptr<DiscovererStrategy> discovery_follow_discoverer(bool skip_redundant = false);

// Ideal-patient-zero discoverer: sweeps v0, explores its delta-edge connected
// components, then answers offline from the discovered labels. v0 < 0 picks
// node 0.
std::unique_ptr<IpzDiscoverer> follow_discoverer(int v0 = -1);

// ---- witness machinery ----

// Simulates each seed set honestly on the known graph, applies the knowledge
// updates, and reports whether the final potential equals the instance count
// (every label uniquely determined). Optionally records the potential after
// each round.
bool witness_verify(const TemporalGraph& g, const std::vector<SeedSet>& schedule,
                    const SirParams& params, std::vector<long long>* phi_trace = nullptr);

// The length-m schedule seeding one endpoint of each edge at label-1.
std::vector<SeedSet> trivial_witness_schedule(const TemporalGraph& g);

} // namespace tempograph
