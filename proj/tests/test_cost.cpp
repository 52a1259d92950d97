#include <cmath>
#include <stdexcept>

#include "doctest.h"
#include "ncg/cost.hpp"
#include "test_helpers.hpp"

using ncg::Behaviour;
using ncg::CostView;
using ncg::OwnedGraph;
using ncg::Rng;
using ncg_test::path;
using ncg_test::random_graph;
using ncg_test::star;

TEST_CASE("sentinel exceeds alpha and the longest possible path") {
  CHECK(ncg::sentinel(20.0, 100) == 120.0);
  CHECK(ncg::sentinel(0.5, 2) == 2.5);
  CHECK(ncg::sentinel(500.0, 100) == 600.0);
  for (double alpha : {0.5, 1.0, 3.3, 500.0}) {
    for (int n : {2, 10, 100}) {
      CHECK(ncg::sentinel(alpha, n) > alpha);
      CHECK(ncg::sentinel(alpha, n) > n - 1);
    }
  }
}

TEST_CASE("effective_distance substitutes the sentinel") {
  CHECK(ncg::effective_distance(3, 2.0, 10) == 3.0);
  CHECK(ncg::effective_distance(ncg::kUnreachable, 2.0, 10) == 12.0);
  CHECK(ncg::effective_distance(0, 2.0, 10) == 0.0);
}

TEST_CASE("selfish cost hand examples") {
  // Star on 3 nodes, centre 0 owns both edges, alpha = 4.
  const OwnedGraph s = star(3);
  const ncg::DistanceTable dist = s.all_pairs_distances();
  const CostView view{Behaviour::Selfish, 4.0, 3};
  CHECK(ncg::selfish_cost(s, dist, 0, view) == 10.0);
  CHECK(ncg::selfish_cost(s, dist, 1, view) == 3.0);
  CHECK(ncg::selfish_cost(s, dist, 2, view) == 3.0);

  // Two isolated nodes, alpha = 3: the lone other node costs L = 5.
  const OwnedGraph empty2 = OwnedGraph::new_empty(2);
  const CostView view2{Behaviour::Selfish, 3.0, 2};
  CHECK(ncg::selfish_cost(empty2, empty2.all_pairs_distances(), 0, view2) == 5.0);

  // K4 where node 0 owns 2 of its 3 incident edges, alpha = 1.
  OwnedGraph k4 = OwnedGraph::new_empty(4);
  k4.add_edge(0, 1);
  k4.add_edge(0, 2);
  k4.add_edge(3, 0);
  k4.add_edge(1, 2);
  k4.add_edge(1, 3);
  k4.add_edge(2, 3);
  const CostView view4{Behaviour::Selfish, 1.0, 4};
  CHECK(ncg::selfish_cost(k4, k4.all_pairs_distances(), 0, view4) == 5.0);
}

TEST_CASE("unselfish cost hand examples") {
  const OwnedGraph s = star(3);
  const ncg::DistanceTable dist = s.all_pairs_distances();
  const CostView view{Behaviour::Unselfish, 4.0, 3};
  CHECK(ncg::unselfish_cost(s, dist, 1, view) == 8.0);   // ordered sum 1+1+1+1+2+2
  CHECK(ncg::unselfish_cost(s, dist, 0, view) == 16.0);  // 2*4 + 8

  const OwnedGraph empty2 = OwnedGraph::new_empty(2);
  const CostView view2{Behaviour::Unselfish, 3.0, 2};
  CHECK(ncg::unselfish_cost(empty2, empty2.all_pairs_distances(), 0, view2) == 10.0);  // 2L
}

TEST_CASE("cost functions check their view") {
  const OwnedGraph s = star(3);
  const ncg::DistanceTable dist = s.all_pairs_distances();
  CHECK_THROWS_AS(ncg::selfish_cost(s, dist, 0, CostView{Behaviour::Unselfish, 4.0, 3}),
                  std::invalid_argument);
  CHECK_THROWS_AS(ncg::unselfish_cost(s, dist, 0, CostView{Behaviour::Selfish, 4.0, 3}),
                  std::invalid_argument);
  CHECK_THROWS_AS(ncg::selfish_cost(s, dist, 0, CostView{Behaviour::Selfish, 4.0, 5}),
                  std::invalid_argument);
  CHECK_THROWS_AS(ncg::selfish_cost(s, dist, 7, CostView{Behaviour::Selfish, 4.0, 3}),
                  std::invalid_argument);
  CHECK_THROWS_AS(ncg::selfish_cost(s, dist, 0, CostView{Behaviour::Selfish, -1.0, 3}),
                  std::invalid_argument);
}

TEST_CASE("total cost hand examples") {
  Rng rng(4);
  const OwnedGraph k3 = OwnedGraph::new_complete(3, rng);
  CHECK(ncg::total_cost(k3, 2.0) == 12.0);
  CHECK(ncg::total_cost(path(3), 5.0) == 18.0);
}

TEST_CASE("star total cost matches its closed form") {
  // alpha (N-1) + 2 (N-1)^2, checked by explicit construction.
  for (int n = 2; n <= 8; ++n) {
    for (double alpha : {0.5, 2.0, 20.0}) {
      const double closed = alpha * (n - 1) + 2.0 * (n - 1) * (n - 1);
      CHECK(ncg::total_cost(star(n), alpha) == doctest::Approx(closed).epsilon(1e-12));
    }
  }
  CHECK(ncg::total_cost(star(100), 20.0) == 21582.0);
}

TEST_CASE("sum of selfish costs equals total cost") {
  Rng rng(31);
  for (int trial = 0; trial < 30; ++trial) {
    const int n = 2 + static_cast<int>(rng.below(29));
    const OwnedGraph g = ncg_test::random_graph(n, rng);
    const ncg::DistanceTable dist = g.all_pairs_distances();
    const double alpha = trial % 2 == 0 ? 2.0 : 1.3;
    const CostView view{Behaviour::Selfish, alpha, n};
    double sum = 0.0;
    for (int i = 0; i < n; ++i) sum += ncg::selfish_cost(g, dist, i, view);
    CHECK(std::abs(sum - ncg::total_cost(g, dist, alpha)) <= ncg::kCostTolerance);
  }
}

TEST_CASE("unselfish costs differ only in the ownership term") {
  Rng rng(37);
  const int n = 12;
  const OwnedGraph g = ncg_test::random_graph(n, rng);
  const ncg::DistanceTable dist = g.all_pairs_distances();
  const CostView view{Behaviour::Unselfish, 2.5, n};
  const double base = ncg::unselfish_cost(g, dist, 0, view) - 2.5 * g.owned_count(0);
  for (int i = 1; i < n; ++i) {
    const double other = ncg::unselfish_cost(g, dist, i, view) - 2.5 * g.owned_count(i);
    CHECK(other == doctest::Approx(base).epsilon(1e-12));
  }
}

TEST_CASE("costs are nonnegative and bounded on connected graphs") {
  Rng rng(41);
  for (int trial = 0; trial < 10; ++trial) {
    const int n = 10;
    const OwnedGraph g = ncg_test::random_graph(n, rng);
    if (!g.is_connected()) continue;
    const ncg::DistanceTable dist = g.all_pairs_distances();
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) {
        CHECK(ncg::effective_distance(dist.at(i, j), 2.0, n) <= n - 1);
      }
      CHECK(ncg::selfish_cost(g, dist, i, CostView{Behaviour::Selfish, 2.0, n}) >= 0.0);
    }
  }
}
