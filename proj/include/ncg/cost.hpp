#pragma once

#include <span>

#include "ncg/graph.hpp"

namespace ncg {

enum class Behaviour { Selfish, Unselfish };

// One uniform comparison rule for all cost arithmetic: two costs are equal
// when they differ by at most this tolerance. Move acceptance, zero-delta
// classification and equilibrium checks all go through these helpers.
constexpr double kCostTolerance = 1e-9;

inline bool non_worsening(double delta) { return delta <= kCostTolerance; }
inline bool strictly_improving(double delta) { return delta < -kCostTolerance; }
inline bool zero_delta(double delta) {
  return delta >= -kCostTolerance && delta <= kCostTolerance;
}

// How one agent prices configurations: selfish agents see their own edge
// spend plus their own distances, unselfish agents see their own edge spend
// plus the distance sum over all ordered pairs.
struct CostView {
  Behaviour behaviour = Behaviour::Selfish;
  double alpha = 0.0;
  int n = 0;
};

// Substitute distance L for unreachable pairs. L = alpha + n is larger than
// alpha and larger than any possible hop count, so staying disconnected is
// never worth it.
double sentinel(double alpha, int n);
double effective_distance(int raw_hops, double alpha, int n);

// Sum of effective distances from one node to all others (self excluded).
double effective_row_sum(std::span<const int> row, int self, double alpha, int n);

// Sum over all ordered pairs; every unordered distance enters twice.
double ordered_effective_sum(const OwnedGraph& g, double alpha);
double ordered_effective_sum(const DistanceTable& dist, double alpha);

// dist must describe g.
double selfish_cost(const OwnedGraph& g, const DistanceTable& dist, int agent,
                    const CostView& view);
double unselfish_cost(const OwnedGraph& g, const DistanceTable& dist, int agent,
                      const CostView& view);
double agent_cost(const OwnedGraph& g, const DistanceTable& dist, int agent,
                  const CostView& view);

// alpha * |E| + ordered distance sum; equals the sum of all selfish costs.
double total_cost(const OwnedGraph& g, const DistanceTable& dist, double alpha);
double total_cost(const OwnedGraph& g, double alpha);

}  // namespace ncg
