#pragma once

#include <optional>
#include <vector>

#include "ncg/cost.hpp"
#include "ncg/graph.hpp"
#include "ncg/rng.hpp"

namespace ncg {

enum class MoveKind { Buy, Sell, Switch };
enum class MoveSet { BuySellOnly, BuySellPlusSwitch };

// Buy: node_a buys the absent edge {node_a, node_b}.
// Sell: the owner of the present edge {node_a, node_b} may delete it.
// Switch: node_a deletes its edge {node_a, node_b} and buys {node_a, node_c}
// in one atomic move.
struct MoveProposal {
  MoveKind kind = MoveKind::Buy;
  int node_a = -1;
  int node_b = -1;
  int node_c = -1;
  int deciding_agent = -1;
};

// Acceptance is non-worsening (delta <= 0) for every move kind by default.
// The equal-cost rule is only spelled out for buy/sell in the source model,
// so the switch case is a policy that can be flipped for sensitivity runs.
struct AcceptancePolicy {
  bool equal_cost_switch = true;
};

// Draws an ordered pair (i, j) uniformly: buy decision for i when the edge
// is absent, sell decision for the edge's owner when present. One below()
// draw.
MoveProposal propose_random_buysell(const OwnedGraph& g, Rng& rng);

// Uniform draw over all valid (i, j, k) triples: i owns {i,j}, {i,k} absent.
// One below() draw when any triple exists, none otherwise (nullopt).
std::optional<MoveProposal> propose_random_switch(const OwnedGraph& g, Rng& rng);

long long count_switch_triples(const OwnedGraph& g);

// Cost change seen by the proposal's deciding agent if the move were
// applied; negative is an improvement. dist must describe g.
double evaluate(const OwnedGraph& g, const DistanceTable& dist, const MoveProposal& p,
                const CostView& view);

// Same result as evaluate(), but works on g directly (apply, measure,
// revert) instead of copying it. For unselfish views, ordered_sum_before can
// pass in the current ordered_effective_sum(g, alpha), and ordered_sum_after
// receives the sum of the hypothetical graph.
double evaluate_in_place(OwnedGraph& g, const MoveProposal& p, const CostView& view,
                         const double* ordered_sum_before = nullptr,
                         double* ordered_sum_after = nullptr);

bool accept(double delta);
bool accept(double delta, MoveKind kind, const AcceptancePolicy& policy);

void apply(OwnedGraph& g, const MoveProposal& p);

// The move that restores the graph apply(g, p) produced: buy <-> sell,
// switch(i,j,k) <-> switch(i,k,j).
MoveProposal inverse(const MoveProposal& p);

// Visits the full move space in a fixed canonical order (buy/sell over
// ordered pairs, then switch triples, all ascending) until fn returns true;
// reports whether any call did. fn may mutate a non-const g as long as it
// restores it before returning.
template <typename GraphT, typename Fn>
bool scan_moves(GraphT& g, MoveSet move_set, Fn&& fn) {
  const int n = g.node_count();
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (i == j) continue;
      MoveProposal p;
      if (g.has_edge(i, j)) {
        p = MoveProposal{MoveKind::Sell, i, j, -1, g.edge_owner(i, j)};
      } else {
        p = MoveProposal{MoveKind::Buy, i, j, -1, i};
      }
      if (fn(p)) return true;
    }
  }
  if (move_set == MoveSet::BuySellPlusSwitch) {
    for (int i = 0; i < n; ++i) {
      if (g.owned_count(i) == 0 || g.degree(i) == n - 1) continue;
      for (int j = 0; j < n; ++j) {
        if (j == i || !g.has_edge(i, j) || g.edge_owner(i, j) != i) continue;
        for (int k = 0; k < n; ++k) {
          if (k == i || g.has_edge(i, k)) continue;
          if (fn(MoveProposal{MoveKind::Switch, i, j, k, i})) return true;
        }
      }
    }
  }
  return false;
}

// Every valid buy/sell ordered pair plus (when enabled) every valid switch
// triple, in a uniformly random permutation.
std::vector<MoveProposal> enumerate_all_moves(const OwnedGraph& g, MoveSet move_set, Rng& rng);

}  // namespace ncg
