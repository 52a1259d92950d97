#include "ncg/oracle.hpp"

#include <bit>
#include <stdexcept>
#include <utility>
#include <vector>

namespace ncg {

namespace {

OwnedGraph graph_from_mask(int n, const std::vector<std::pair<int, int>>& slots,
                           std::uint32_t mask) {
  OwnedGraph g = OwnedGraph::new_empty(n);
  for (std::size_t s = 0; s < slots.size(); ++s) {
    if (mask & (1u << s)) g.add_edge(slots[s].first, slots[s].second);
  }
  return g;
}

}  // namespace

OptimumReport brute_force_social_optimum(int n, double alpha) {
  if (n < 2 || n > 7) throw std::invalid_argument("exhaustive scan supports 2 <= n <= 7");
  if (!(alpha > 0.0)) throw std::invalid_argument("alpha must be positive");
  std::vector<std::pair<int, int>> slots;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) slots.emplace_back(i, j);
  }
  const std::uint32_t graphs = 1u << slots.size();
  double best = 0.0;
  long long count = 0;
  std::uint32_t best_mask = 0;
  for (std::uint32_t mask = 0; mask < graphs; ++mask) {
    const OwnedGraph g = graph_from_mask(n, slots, mask);
    const double cost =
        alpha * static_cast<double>(std::popcount(mask)) + ordered_effective_sum(g, alpha);
    if (count == 0 || strictly_improving(cost - best)) {
      best = cost;
      count = 1;
      best_mask = mask;
    } else if (zero_delta(cost - best)) {
      ++count;
    }
  }
  return OptimumReport{best, count, graph_from_mask(n, slots, best_mask)};
}

bool verify_nash(const OwnedGraph& g, double alpha, Behaviour behaviour, MoveSet move_set) {
  const CostView view{behaviour, alpha, g.node_count()};
  OwnedGraph scratch = g;
  const double ordered_sum = ordered_effective_sum(scratch, alpha);
  return !scan_moves(scratch, move_set, [&](const MoveProposal& p) {
    return strictly_improving(evaluate_in_place(scratch, p, view, &ordered_sum));
  });
}

long long degeneracy_scan(const OwnedGraph& g, double alpha, Behaviour behaviour,
                          MoveSet move_set) {
  const CostView view{behaviour, alpha, g.node_count()};
  OwnedGraph scratch = g;
  const double ordered_sum = ordered_effective_sum(scratch, alpha);
  long long zero_moves = 0;
  scan_moves(scratch, move_set, [&](const MoveProposal& p) {
    if (zero_delta(evaluate_in_place(scratch, p, view, &ordered_sum))) ++zero_moves;
    return false;
  });
  return zero_moves;
}

}  // namespace ncg
