#include "ncg/graph.hpp"

#include <algorithm>
#include <bit>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace ncg {

DistanceTable::DistanceTable(int n)
    : n_(n), d_(static_cast<std::size_t>(n) * n, kUnreachable) {}

OwnedGraph::OwnedGraph(int n)
    : n_(n),
      words_((n + 63) / 64),
      owner_(static_cast<std::size_t>(n) * n, -1),
      adj_(static_cast<std::size_t>(n) * words_, 0),
      degree_(n, 0),
      owned_count_(n, 0) {}

OwnedGraph OwnedGraph::new_empty(int n) {
  if (n < 2) throw std::invalid_argument("a graph needs at least 2 nodes");
  return OwnedGraph(n);
}

OwnedGraph OwnedGraph::new_complete(int n, Rng& rng) {
  OwnedGraph g = new_empty(n);
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      const int owner = rng.coin() ? j : i;
      g.add_edge(owner, owner == i ? j : i);
    }
  }
  return g;
}

void OwnedGraph::check_node(int v) const {
  if (v < 0 || v >= n_) throw std::invalid_argument("node id out of range");
}

int OwnedGraph::degree(int v) const {
  check_node(v);
  return degree_[v];
}

int OwnedGraph::owned_count(int v) const {
  check_node(v);
  return owned_count_[v];
}

bool OwnedGraph::has_edge(int i, int j) const {
  check_node(i);
  check_node(j);
  return owner_[cell(i, j)] >= 0;
}

int OwnedGraph::edge_owner(int i, int j) const {
  check_node(i);
  check_node(j);
  const int owner = owner_[cell(i, j)];
  if (owner < 0) throw std::invalid_argument("no such edge");
  return owner;
}

void OwnedGraph::add_edge(int buyer, int other) {
  check_node(buyer);
  check_node(other);
  if (buyer == other) throw std::invalid_argument("self-loops are not allowed");
  if (owner_[cell(buyer, other)] >= 0) throw std::invalid_argument("edge already present");
  owner_[cell(buyer, other)] = buyer;
  owner_[cell(other, buyer)] = buyer;
  adj_[static_cast<std::size_t>(buyer) * words_ + (other >> 6)] |= 1ULL << (other & 63);
  adj_[static_cast<std::size_t>(other) * words_ + (buyer >> 6)] |= 1ULL << (buyer & 63);
  ++degree_[buyer];
  ++degree_[other];
  ++owned_count_[buyer];
  ++edges_;
}

void OwnedGraph::remove_edge(int requester, int other) {
  check_node(requester);
  check_node(other);
  const int owner = requester == other ? -1 : owner_[cell(requester, other)];
  if (owner < 0) throw std::invalid_argument("no such edge");
  if (owner != requester) throw std::invalid_argument("edge is not owned by the requesting agent");
  owner_[cell(requester, other)] = -1;
  owner_[cell(other, requester)] = -1;
  adj_[static_cast<std::size_t>(requester) * words_ + (other >> 6)] &= ~(1ULL << (other & 63));
  adj_[static_cast<std::size_t>(other) * words_ + (requester >> 6)] &= ~(1ULL << (requester & 63));
  --degree_[requester];
  --degree_[other];
  --owned_count_[requester];
  --edges_;
}

void OwnedGraph::bfs_distances_into(int source, BfsScratch& s, std::span<int> out) const {
  check_node(source);
  if (static_cast<int>(out.size()) != n_) throw std::invalid_argument("distance row size mismatch");
  std::fill(out.begin(), out.end(), kUnreachable);
  out[source] = 0;
  s.visited.assign(words_, 0);
  s.frontier.assign(words_, 0);
  s.next.assign(words_, 0);
  s.visited[source >> 6] |= 1ULL << (source & 63);
  s.frontier[source >> 6] |= 1ULL << (source & 63);
  int level = 0;
  for (;;) {
    std::fill(s.next.begin(), s.next.end(), 0);
    for (int w = 0; w < words_; ++w) {
      std::uint64_t bits = s.frontier[w];
      while (bits) {
        const int u = (w << 6) + std::countr_zero(bits);
        bits &= bits - 1;
        const std::uint64_t* row = adj_.data() + static_cast<std::size_t>(u) * words_;
        for (int x = 0; x < words_; ++x) s.next[x] |= row[x];
      }
    }
    ++level;
    bool reached_any = false;
    for (int w = 0; w < words_; ++w) {
      std::uint64_t fresh = s.next[w] & ~s.visited[w];
      s.visited[w] |= fresh;
      s.frontier[w] = fresh;
      while (fresh) {
        out[(w << 6) + std::countr_zero(fresh)] = level;
        fresh &= fresh - 1;
        reached_any = true;
      }
    }
    if (!reached_any) break;
  }
}

std::vector<int> OwnedGraph::bfs_distances(int source) const {
  std::vector<int> row(n_);
  BfsScratch scratch;
  bfs_distances_into(source, scratch, row);
  return row;
}

DistanceTable OwnedGraph::all_pairs_distances() const {
  DistanceTable table(n_);
  BfsScratch scratch;
  for (int i = 0; i < n_; ++i) bfs_distances_into(i, scratch, table.mutable_row(i));
  return table;
}

bool OwnedGraph::is_connected() const {
  const std::vector<int> row = bfs_distances(0);
  return std::none_of(row.begin(), row.end(), [](int d) { return d == kUnreachable; });
}

bool OwnedGraph::operator==(const OwnedGraph& other) const {
  return n_ == other.n_ && owner_ == other.owner_;
}

std::string to_edge_list(const OwnedGraph& g) {
  std::ostringstream out;
  out << "N " << g.node_count() << '\n';
  const int n = g.node_count();
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      if (g.has_edge(i, j)) out << i << ' ' << j << ' ' << g.edge_owner(i, j) << '\n';
    }
  }
  return out.str();
}

OwnedGraph parse_edge_list(std::istream& in) {
  std::string tag;
  int n = 0;
  if (!(in >> tag) || tag != "N" || !(in >> n)) {
    throw std::runtime_error("edge list must start with \"N <node count>\"");
  }
  if (n < 2) throw std::runtime_error("edge list declares fewer than 2 nodes");
  OwnedGraph g = OwnedGraph::new_empty(n);
  int i = 0;
  while (in >> i) {
    int j = 0;
    int owner = 0;
    if (!(in >> j >> owner)) throw std::runtime_error("truncated edge line");
    if (i < 0 || i >= n || j < 0 || j >= n) throw std::runtime_error("edge endpoint out of range");
    if (i == j) throw std::runtime_error("edge list contains a self-loop");
    if (owner != i && owner != j) throw std::runtime_error("edge owner is not an endpoint");
    if (g.has_edge(i, j)) throw std::runtime_error("duplicate edge in edge list");
    g.add_edge(owner, owner == i ? j : i);
  }
  if (!in.eof()) throw std::runtime_error("malformed edge line");
  return g;
}

void save_edge_list(const OwnedGraph& g, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open " + path + " for writing");
  out << to_edge_list(g);
  if (!out) throw std::runtime_error("failed writing " + path);
}

OwnedGraph load_edge_list(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  return parse_edge_list(in);
}

}  // namespace ncg
