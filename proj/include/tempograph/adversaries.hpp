#pragma once

#include "tempograph/discovery.hpp"

#include <memory>

namespace tempograph {

// Fixes the graph up front and simulates faithfully.
std::unique_ptr<AdversaryStrategy> honest_adversary(TemporalGraph graph, SirParams params,
                                                    TieBreak tie_break = TieBreak::LowestInfector);

// Lower-bound construction on a temporally connected host: a path of n-2
// nodes plus two hub nodes whose edges carry fixed labels tmax-2, tmax-1 and
// tmax. Alternating path edges stay unlabeled and are answered lazily:
// "infection failed" while more than one consistent label remains, otherwise
// the last label is committed. Requires n even >= 4 and tmax >= 4.
std::unique_ptr<AdversaryStrategy> hub_path_adversary(int n, int tmax, SirParams params);

// Unknown-static-graph lower bound: m-1 greedily connected edges fixed at
// label 1 (each node keeps at most n-2 neighbors); every other (pair, time)
// stays deniable until only one option would remain, which is then committed
// as the floating m-th edge. Requires m <= C(n,2) - n.
std::unique_ptr<AdversaryStrategy> unknown_graph_adversary(int n, int m, int tmax,
                                                           SirParams params);

// Multilabel lower bound: a degree-balanced connected graph of m edges, all
// carrying label 1, plus one floating extra label answered lazily as above.
std::unique_ptr<AdversaryStrategy> multilabel_adversary(int n, int m, int tmax, SirParams params);

} // namespace tempograph
