#pragma once

#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "ncg/rng.hpp"

namespace ncg {

// Hop-count marker for pairs with no connecting path. Cost evaluation maps
// it to a numeric sentinel; the graph layer never does.
constexpr int kUnreachable = -1;

// Symmetric matrix of hop counts, d[i][i] = 0.
class DistanceTable {
 public:
  DistanceTable() = default;
  explicit DistanceTable(int n);

  int n() const { return n_; }
  int at(int i, int j) const { return d_[static_cast<std::size_t>(i) * n_ + j]; }
  std::span<const int> row(int i) const {
    return {d_.data() + static_cast<std::size_t>(i) * n_, static_cast<std::size_t>(n_)};
  }
  std::span<int> mutable_row(int i) {
    return {d_.data() + static_cast<std::size_t>(i) * n_, static_cast<std::size_t>(n_)};
  }

 private:
  int n_ = 0;
  std::vector<int> d_;
};

// Reusable buffers for breadth-first searches.
struct BfsScratch {
  std::vector<std::uint64_t> visited;
  std::vector<std::uint64_t> frontier;
  std::vector<std::uint64_t> next;
};

// Undirected simple graph on n nodes where every edge records which endpoint
// bought it. Ownership gates deletion only; any node may route over any edge.
//
// Adjacency is kept twice: an owner matrix (owner id, or -1 where no edge)
// for O(1) membership and ownership lookups, and bit-packed neighbor rows
// that make repeated BFS passes cheap.
class OwnedGraph {
 public:
  static OwnedGraph new_empty(int n);
  // All n(n-1)/2 edges, each owner drawn by one coin per pair in
  // (i<j) lexicographic order: heads = higher endpoint.
  static OwnedGraph new_complete(int n, Rng& rng);

  int node_count() const { return n_; }
  long long edge_count() const { return edges_; }
  int degree(int v) const;
  // Number of edges bought by v.
  int owned_count(int v) const;

  bool has_edge(int i, int j) const;
  int edge_owner(int i, int j) const;

  void add_edge(int buyer, int other);
  void remove_edge(int requester, int other);

  std::vector<int> bfs_distances(int source) const;
  void bfs_distances_into(int source, BfsScratch& scratch, std::span<int> out) const;
  DistanceTable all_pairs_distances() const;
  bool is_connected() const;

  bool operator==(const OwnedGraph& other) const;

 private:
  explicit OwnedGraph(int n);
  void check_node(int v) const;
  std::size_t cell(int i, int j) const { return static_cast<std::size_t>(i) * n_ + j; }

  int n_ = 0;
  int words_ = 0;
  long long edges_ = 0;
  std::vector<std::int32_t> owner_;
  std::vector<std::uint64_t> adj_;
  std::vector<int> degree_;
  std::vector<int> owned_count_;
};

// Edge-list text format: first line "N <n>", then one line "<i> <j> <owner>"
// per edge with i < j, sorted by (i, j).
std::string to_edge_list(const OwnedGraph& g);
OwnedGraph parse_edge_list(std::istream& in);
void save_edge_list(const OwnedGraph& g, const std::string& path);
OwnedGraph load_edge_list(const std::string& path);

}  // namespace ncg
