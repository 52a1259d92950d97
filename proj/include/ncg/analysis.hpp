#pragma once

#include <vector>

#include "ncg/graph.hpp"

namespace ncg {

struct Classification {
  bool is_tree = false;
  bool is_star = false;
  bool is_complete = false;
};

// is_tree: connected with n-1 edges; is_star: a tree with a node of degree
// n-1; is_complete: all n(n-1)/2 edges present.
Classification classify(const OwnedGraph& g);

// Mean hop count over ordered pairs (i != j). Rejects disconnected graphs.
double average_distance(const OwnedGraph& g);

// Longest shortest path. Rejects disconnected graphs.
int diameter(const OwnedGraph& g);

// The 2(n-3)+2-edge shape with three centre nodes: every other node has
// degree 2 with both neighbors among the centres, and exactly two edges run
// between the centres themselves.
bool three_centre_structure_check(const OwnedGraph& g);

struct RunMetrics {
  long long edges = 0;
  bool connected = false;
  double avg_distance = -1.0;  // -1 when disconnected
  int diameter = -1;           // -1 when disconnected
  bool is_tree = false;
  bool is_star = false;
  bool is_complete = false;
  int steps = 0;
  double total_cost = 0.0;
};

RunMetrics run_metrics(const OwnedGraph& g, int steps, double alpha);

struct MetricSummary {
  double min = 0.0;
  double mean = 0.0;
  double max = 0.0;
};

struct AggregateStats {
  MetricSummary steps;
  MetricSummary edges;
  MetricSummary avg_distance;
  double tree_probability = 0.0;
  double star_probability = 0.0;
  int run_count = 0;
};

// Componentwise min/mean/max and tree/star run fractions. The batch must be
// non-empty and all runs connected; disconnected runs are a validity failure
// the caller reports separately rather than folding into averages.
AggregateStats aggregate(const std::vector<RunMetrics>& batch);

}  // namespace ncg
