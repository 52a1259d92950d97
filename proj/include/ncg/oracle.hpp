#pragma once

#include "ncg/engine.hpp"

namespace ncg {

struct OptimumReport {
  double optimal_total_cost = 0.0;
  long long optimizer_count = 0;
  OwnedGraph one_optimizer;
};

// Scans all 2^(n(n-1)/2) labeled graphs for the minimum total cost. Total
// cost is ownership-blind, so the representative assigns each edge to its
// lower endpoint. n is capped at 7 (2^21 graphs).
OptimumReport brute_force_social_optimum(int n, double alpha);

// True iff no agent has a strictly improving move in the full move space of
// move_set. Weaker than is_local_minimum, which also forbids equal-cost
// moves.
bool verify_nash(const OwnedGraph& g, double alpha, Behaviour behaviour, MoveSet move_set);

// Number of valid moves whose delta is exactly zero under the comparison
// rule. Nonzero counts explain runs that only end at the step cap.
long long degeneracy_scan(const OwnedGraph& g, double alpha, Behaviour behaviour,
                          MoveSet move_set);

}  // namespace ncg
