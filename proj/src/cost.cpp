#include "ncg/cost.hpp"

#include <stdexcept>

namespace ncg {

namespace {

void check_alpha(double alpha) {
  if (!(alpha > 0.0)) throw std::invalid_argument("alpha must be positive");
}

void check_view(const OwnedGraph& g, const DistanceTable& dist, int agent,
                const CostView& view) {
  check_alpha(view.alpha);
  if (view.n != g.node_count()) throw std::invalid_argument("view.n does not match the graph");
  if (dist.n() != g.node_count()) throw std::invalid_argument("distance table does not match the graph");
  if (agent < 0 || agent >= g.node_count()) throw std::invalid_argument("agent id out of range");
}

}  // namespace

double sentinel(double alpha, int n) { return alpha + n; }

double effective_distance(int raw_hops, double alpha, int n) {
  return raw_hops == kUnreachable ? sentinel(alpha, n) : static_cast<double>(raw_hops);
}

double effective_row_sum(std::span<const int> row, int self, double alpha, int n) {
  long long hops = 0;
  long long unreachable = 0;
  const int size = static_cast<int>(row.size());
  for (int j = 0; j < size; ++j) {
    if (j == self) continue;
    if (row[j] == kUnreachable) {
      ++unreachable;
    } else {
      hops += row[j];
    }
  }
  return static_cast<double>(hops) + static_cast<double>(unreachable) * sentinel(alpha, n);
}

double ordered_effective_sum(const OwnedGraph& g, double alpha) {
  thread_local BfsScratch scratch;
  thread_local std::vector<int> row;
  const int n = g.node_count();
  row.resize(n);
  double sum = 0.0;
  for (int i = 0; i < n; ++i) {
    g.bfs_distances_into(i, scratch, row);
    sum += effective_row_sum(row, i, alpha, n);
  }
  return sum;
}

double ordered_effective_sum(const DistanceTable& dist, double alpha) {
  double sum = 0.0;
  for (int i = 0; i < dist.n(); ++i) {
    sum += effective_row_sum(dist.row(i), i, alpha, dist.n());
  }
  return sum;
}

double selfish_cost(const OwnedGraph& g, const DistanceTable& dist, int agent,
                    const CostView& view) {
  check_view(g, dist, agent, view);
  if (view.behaviour != Behaviour::Selfish) {
    throw std::invalid_argument("selfish_cost asked for a non-selfish view");
  }
  return view.alpha * g.owned_count(agent) +
         effective_row_sum(dist.row(agent), agent, view.alpha, view.n);
}

double unselfish_cost(const OwnedGraph& g, const DistanceTable& dist, int agent,
                      const CostView& view) {
  check_view(g, dist, agent, view);
  if (view.behaviour != Behaviour::Unselfish) {
    throw std::invalid_argument("unselfish_cost asked for a non-unselfish view");
  }
  return view.alpha * g.owned_count(agent) + ordered_effective_sum(dist, view.alpha);
}

double agent_cost(const OwnedGraph& g, const DistanceTable& dist, int agent,
                  const CostView& view) {
  return view.behaviour == Behaviour::Selfish ? selfish_cost(g, dist, agent, view)
                                              : unselfish_cost(g, dist, agent, view);
}

double total_cost(const OwnedGraph& g, const DistanceTable& dist, double alpha) {
  check_alpha(alpha);
  if (dist.n() != g.node_count()) throw std::invalid_argument("distance table does not match the graph");
  return alpha * static_cast<double>(g.edge_count()) + ordered_effective_sum(dist, alpha);
}

double total_cost(const OwnedGraph& g, double alpha) {
  check_alpha(alpha);
  return alpha * static_cast<double>(g.edge_count()) + ordered_effective_sum(g, alpha);
}

}  // namespace ncg
