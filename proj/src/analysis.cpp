#include "ncg/analysis.hpp"

#include <algorithm>
#include <stdexcept>

#include "ncg/cost.hpp"

namespace ncg {

Classification classify(const OwnedGraph& g) {
  const int n = g.node_count();
  Classification c;
  c.is_complete = g.edge_count() == static_cast<long long>(n) * (n - 1) / 2;
  c.is_tree = g.edge_count() == n - 1 && g.is_connected();
  if (c.is_tree) {
    for (int v = 0; v < n; ++v) {
      if (g.degree(v) == n - 1) {
        c.is_star = true;
        break;
      }
    }
  }
  return c;
}

double average_distance(const OwnedGraph& g) {
  const int n = g.node_count();
  BfsScratch scratch;
  std::vector<int> row(n);
  long long sum = 0;
  for (int i = 0; i < n; ++i) {
    g.bfs_distances_into(i, scratch, row);
    for (int j = 0; j < n; ++j) {
      if (row[j] == kUnreachable) throw std::invalid_argument("graph is not connected");
      sum += row[j];
    }
  }
  return static_cast<double>(sum) / (static_cast<double>(n) * (n - 1));
}

int diameter(const OwnedGraph& g) {
  const int n = g.node_count();
  BfsScratch scratch;
  std::vector<int> row(n);
  int widest = 0;
  for (int i = 0; i < n; ++i) {
    g.bfs_distances_into(i, scratch, row);
    for (int j = 0; j < n; ++j) {
      if (row[j] == kUnreachable) throw std::invalid_argument("graph is not connected");
      widest = std::max(widest, row[j]);
    }
  }
  return widest;
}

namespace {

bool centres_match(const OwnedGraph& g, int a, int b, int c) {
  const int n = g.node_count();
  int inner = 0;
  if (g.has_edge(a, b)) ++inner;
  if (g.has_edge(a, c)) ++inner;
  if (g.has_edge(b, c)) ++inner;
  if (inner != 2) return false;
  for (int v = 0; v < n; ++v) {
    if (v == a || v == b || v == c) continue;
    if (g.degree(v) != 2) return false;
    int into_centres = 0;
    if (g.has_edge(v, a)) ++into_centres;
    if (g.has_edge(v, b)) ++into_centres;
    if (g.has_edge(v, c)) ++into_centres;
    if (into_centres != 2) return false;
  }
  return true;
}

}  // namespace

bool three_centre_structure_check(const OwnedGraph& g) {
  const int n = g.node_count();
  if (n < 4) return false;
  if (g.edge_count() != 2LL * (n - 3) + 2) return false;
  // Nodes of degree != 2 can only be centres.
  std::vector<int> forced;
  std::vector<int> degree_two;
  for (int v = 0; v < n; ++v) {
    if (g.degree(v) != 2) {
      forced.push_back(v);
    } else {
      degree_two.push_back(v);
    }
  }
  if (forced.size() > 3) return false;
  const int missing = 3 - static_cast<int>(forced.size());
  if (missing == 0) return centres_match(g, forced[0], forced[1], forced[2]);
  if (missing == 1) {
    for (int v : degree_two) {
      if (centres_match(g, forced[0], forced[1], v)) return true;
    }
    return false;
  }
  if (missing == 2) {
    for (std::size_t x = 0; x < degree_two.size(); ++x) {
      for (std::size_t y = x + 1; y < degree_two.size(); ++y) {
        if (centres_match(g, forced[0], degree_two[x], degree_two[y])) return true;
      }
    }
    return false;
  }
  for (std::size_t x = 0; x < degree_two.size(); ++x) {
    for (std::size_t y = x + 1; y < degree_two.size(); ++y) {
      for (std::size_t z = y + 1; z < degree_two.size(); ++z) {
        if (centres_match(g, degree_two[x], degree_two[y], degree_two[z])) return true;
      }
    }
  }
  return false;
}

RunMetrics run_metrics(const OwnedGraph& g, int steps, double alpha) {
  RunMetrics m;
  m.edges = g.edge_count();
  m.connected = g.is_connected();
  if (m.connected) {
    m.avg_distance = average_distance(g);
    m.diameter = diameter(g);
  }
  const Classification c = classify(g);
  m.is_tree = c.is_tree;
  m.is_star = c.is_star;
  m.is_complete = c.is_complete;
  m.steps = steps;
  m.total_cost = total_cost(g, alpha);
  return m;
}

AggregateStats aggregate(const std::vector<RunMetrics>& batch) {
  if (batch.empty()) throw std::invalid_argument("cannot aggregate an empty batch");
  AggregateStats stats;
  stats.run_count = static_cast<int>(batch.size());
  const auto fold = [&](auto pick) {
    MetricSummary s;
    s.min = s.max = pick(batch.front());
    double sum = 0.0;
    for (const RunMetrics& m : batch) {
      const double v = pick(m);
      s.min = std::min(s.min, v);
      s.max = std::max(s.max, v);
      sum += v;
    }
    s.mean = sum / static_cast<double>(batch.size());
    return s;
  };
  int trees = 0;
  int stars = 0;
  for (const RunMetrics& m : batch) {
    if (!m.connected) throw std::invalid_argument("disconnected run in aggregation batch");
    if (m.is_tree) ++trees;
    if (m.is_star) ++stars;
  }
  stats.steps = fold([](const RunMetrics& m) { return static_cast<double>(m.steps); });
  stats.edges = fold([](const RunMetrics& m) { return static_cast<double>(m.edges); });
  stats.avg_distance = fold([](const RunMetrics& m) { return m.avg_distance; });
  stats.tree_probability = static_cast<double>(trees) / static_cast<double>(batch.size());
  stats.star_probability = static_cast<double>(stars) / static_cast<double>(batch.size());
  return stats;
}

}  // namespace ncg
