#pragma once

#include "tempograph/temporal_graph.hpp"

namespace tempograph {

// When several infectious neighbors could infect a susceptible node in the
// same step, exactly one is chosen. LowestInfector is the default; the
// opposite policy exists to test that infection timetables are tie-break
// invariant.
enum class TieBreak { LowestInfector, HighestInfector };

// Runs the discrete SIR process. A node seeded or infected at time t is
// infectious during [t+1, t+delta], then resistant. Seeds are applied in
// global time order before edge infections of the same step; a seed whose
// node is no longer susceptible is ignored (and omitted from the log).
// Throws std::invalid_argument on invalid seeds.
InfectionLog simulate(const TemporalGraph& g, const SeedSet& seeds, const SirParams& params,
                      TieBreak tie_break = TieBreak::LowestInfector);

// Same, reusing a prebuilt adjacency index.
InfectionLog simulate(const TemporalGraph& g, const AdjacencyIndex& adj, const SeedSet& seeds,
                      const SirParams& params, TieBreak tie_break = TieBreak::LowestInfector);

Timetable project_timetable(const InfectionLog& log);
Timetable project_timetable(const InfectionLog& log, int n);

// True iff `log` arises from some tie-break of the infection process on `g`
// seeded with `seeds`: per-entry edge and heap validity plus timetable
// equality with a reference simulation.
bool check_consistency(const TemporalGraph& g, const SeedSet& seeds, const InfectionLog& log,
                       const SirParams& params);

} // namespace tempograph
