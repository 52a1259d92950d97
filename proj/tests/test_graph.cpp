#include <set>
#include <sstream>
#include <stdexcept>
#include <vector>

#include "doctest.h"
#include "ncg/graph.hpp"
#include "test_helpers.hpp"

using ncg::kUnreachable;
using ncg::OwnedGraph;
using ncg::Rng;
using ncg_test::path;
using ncg_test::random_graph;
using ncg_test::star;

TEST_CASE("new_empty") {
  CHECK(OwnedGraph::new_empty(100).edge_count() == 0);
  CHECK(OwnedGraph::new_empty(100).node_count() == 100);
  CHECK(OwnedGraph::new_empty(2).edge_count() == 0);
  CHECK_THROWS_AS(OwnedGraph::new_empty(1), std::invalid_argument);
  CHECK_THROWS_AS(OwnedGraph::new_empty(0), std::invalid_argument);
}

TEST_CASE("new_complete edge counts and ownership") {
  Rng rng(1);
  const OwnedGraph g100 = OwnedGraph::new_complete(100, rng);
  CHECK(g100.edge_count() == 4950);

  Rng rng2(9);
  const OwnedGraph g2 = OwnedGraph::new_complete(2, rng2);
  CHECK(g2.edge_count() == 1);
  const int owner = g2.edge_owner(0, 1);
  CHECK((owner == 0 || owner == 1));
}

TEST_CASE("new_complete is reproducible for a fixed seed") {
  Rng a(77);
  Rng b(77);
  const OwnedGraph ga = OwnedGraph::new_complete(5, a);
  const OwnedGraph gb = OwnedGraph::new_complete(5, b);
  CHECK(ga == gb);
}

TEST_CASE("add and remove honour ownership") {
  OwnedGraph g = OwnedGraph::new_empty(4);
  g.add_edge(0, 1);
  CHECK(g.has_edge(0, 1));
  CHECK(g.has_edge(1, 0));
  CHECK(g.edge_owner(1, 0) == 0);
  CHECK(g.owned_count(0) == 1);
  CHECK(g.owned_count(1) == 0);

  CHECK_THROWS_AS(g.add_edge(0, 0), std::invalid_argument);
  CHECK_THROWS_AS(g.add_edge(1, 0), std::invalid_argument);   // duplicate
  CHECK_THROWS_AS(g.remove_edge(1, 0), std::invalid_argument);  // not the owner
  CHECK_THROWS_AS(g.remove_edge(2, 3), std::invalid_argument);  // absent
  g.remove_edge(0, 1);
  CHECK(!g.has_edge(0, 1));
  CHECK(g.edge_count() == 0);
}

TEST_CASE("bfs rows") {
  Rng rng(5);
  const OwnedGraph k4 = OwnedGraph::new_complete(4, rng);
  CHECK(k4.bfs_distances(0) == std::vector<int>{0, 1, 1, 1});

  const OwnedGraph p3 = path(3);
  CHECK(p3.bfs_distances(0) == std::vector<int>{0, 1, 2});

  OwnedGraph split = OwnedGraph::new_empty(3);
  split.add_edge(0, 1);
  CHECK(split.bfs_distances(0) == std::vector<int>{0, 1, kUnreachable});
  CHECK(!split.is_connected());
  CHECK(p3.is_connected());
}

TEST_CASE("all_pairs_distances matches per-source bfs") {
  Rng rng(11);
  for (int n : {2, 5, 17, 30}) {
    const OwnedGraph g = random_graph(n, rng);
    const ncg::DistanceTable t = g.all_pairs_distances();
    for (int i = 0; i < n; ++i) {
      const std::vector<int> row = g.bfs_distances(i);
      for (int j = 0; j < n; ++j) {
        CHECK(t.at(i, j) == row[static_cast<std::size_t>(j)]);
        CHECK(t.at(i, j) == t.at(j, i));
      }
      CHECK(t.at(i, i) == 0);
    }
  }
}

TEST_CASE("distance table bounds and triangle inequality") {
  Rng rng(13);
  const int n = 12;
  const OwnedGraph g = random_graph(n, rng);
  const ncg::DistanceTable t = g.all_pairs_distances();
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (i == j || t.at(i, j) == kUnreachable) continue;
      CHECK(t.at(i, j) >= 1);
      CHECK(t.at(i, j) <= n - 1);
      for (int k = 0; k < n; ++k) {
        if (t.at(j, k) == kUnreachable || t.at(i, k) == kUnreachable) continue;
        CHECK(t.at(i, k) <= t.at(i, j) + t.at(j, k));
      }
    }
  }
}

TEST_CASE("removing an edge never shortens distances, adding never lengthens") {
  Rng rng(17);
  for (int trial = 0; trial < 20; ++trial) {
    const int n = 8;
    OwnedGraph g = random_graph(n, rng);
    const ncg::DistanceTable before = g.all_pairs_distances();

    // Pick any present edge and remove it.
    bool removed = false;
    for (int i = 0; i < n && !removed; ++i) {
      for (int j = i + 1; j < n && !removed; ++j) {
        if (!g.has_edge(i, j)) continue;
        const int owner = g.edge_owner(i, j);
        g.remove_edge(owner, owner == i ? j : i);
        removed = true;
      }
    }
    if (!removed) continue;
    const ncg::DistanceTable after = g.all_pairs_distances();
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) {
        const int b = before.at(i, j);
        const int a = after.at(i, j);
        if (a == kUnreachable) continue;  // got worse: fine
        CHECK(b != kUnreachable);
        CHECK(a >= b);
      }
    }
  }
}

TEST_CASE("complete graphs have unit distances") {
  for (int n : {2, 3, 7, 20}) {
    Rng rng(static_cast<std::uint64_t>(n));
    const OwnedGraph g = OwnedGraph::new_complete(n, rng);
    const ncg::DistanceTable t = g.all_pairs_distances();
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) {
        CHECK(t.at(i, j) == (i == j ? 0 : 1));
      }
    }
  }
}

TEST_CASE("edge list round trip and exact format") {
  OwnedGraph g = OwnedGraph::new_empty(4);
  g.add_edge(2, 0);
  g.add_edge(1, 3);
  g.add_edge(0, 1);
  CHECK(ncg::to_edge_list(g) == "N 4\n0 1 0\n0 2 2\n1 3 1\n");

  Rng rng(23);
  for (int trial = 0; trial < 10; ++trial) {
    const OwnedGraph original = random_graph(9, rng);
    std::istringstream in(ncg::to_edge_list(original));
    const OwnedGraph loaded = ncg::parse_edge_list(in);
    CHECK(loaded == original);
  }
}

TEST_CASE("edge list parser rejects malformed input") {
  const auto reject = [](const std::string& text) {
    std::istringstream in(text);
    CHECK_THROWS_AS(ncg::parse_edge_list(in), std::runtime_error);
  };
  reject("");
  reject("M 4\n");
  reject("N 1\n");
  reject("N 4\n0 0 0\n");       // self-loop
  reject("N 4\n0 1 2\n");       // owner not an endpoint
  reject("N 4\n0 1 0\n1 0 1\n");  // duplicate edge
  reject("N 4\n0 9 0\n");       // endpoint out of range
  reject("N 4\n0 1\n");         // truncated line
  reject("N 4\n0 1 0\njunk\n");
}

TEST_CASE("star and path helpers behave as expected") {
  const OwnedGraph s = star(6);
  CHECK(s.edge_count() == 5);
  CHECK(s.degree(0) == 5);
  CHECK(s.owned_count(0) == 5);
  CHECK(s.is_connected());
  const OwnedGraph p = path(6);
  CHECK(p.bfs_distances(0)[5] == 5);
}
