#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>

#include "ccg/corpus.hpp"
#include "ccg/generators.hpp"
#include "ccg/iso.hpp"
#include "oracles.hpp"

using namespace ccg;

namespace {

std::vector<int> shuffled(std::mt19937& rng, int n) {
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::shuffle(perm.begin(), perm.end(), rng);
  return perm;
}

Graph petersen() {
  return Graph(10, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}, {0, 5}, {1, 6}, {2, 7}, {3, 8}, {4, 9},
                    {5, 7}, {7, 9}, {9, 6}, {6, 8}, {8, 5}});
}

Graph random_graph(std::mt19937& rng, int n, double p) {
  std::vector<Edge> edges;
  std::bernoulli_distribution coin(p);
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      if (coin(rng)) edges.push_back({u, v});
    }
  }
  return Graph(n, edges);
}

}  // namespace

TEST_SUITE("iso") {

TEST_CASE("certificate is invariant under relabelling") {
  std::mt19937 rng(3);
  std::vector<Graph> graphs{petersen(), mobius_ladder(16), prism(16), complete_bipartite(3, 4), cycle_graph(9)};
  for (int trial = 0; trial < 40; ++trial) graphs.push_back(random_graph(rng, 5 + trial % 30, 0.2));
  for (const Graph& g : graphs) {
    const Certificate c = certificate(g);
    for (int k = 0; k < 5; ++k) {
      const Graph h = g.relabeled(shuffled(rng, g.order()));
      REQUIRE(certificate(h) == c);
      REQUIRE(canonical_form(h) == canonical_form(g));
    }
    CHECK(canonical_form(g) == g.relabeled(canonical_labeling(g)));
  }
}

TEST_CASE("certificate separates exactly the brute-force classes") {
  std::mt19937 rng(5);
  for (int n = 1; n <= 6; ++n) {
    const auto graphs = enumerate_connected_graphs(n, n);
    std::vector<std::string> brute;
    for (const Graph& g : graphs) brute.push_back(oracle::brute_canonical(oracle::matrix_of(g)));
    for (std::size_t i = 0; i < graphs.size(); ++i) {
      for (std::size_t j = i; j < graphs.size(); ++j) {
        REQUIRE((certificate(graphs[i]) == certificate(graphs[j])) == (brute[i] == brute[j]));
      }
    }
  }
  for (int trial = 0; trial < 300; ++trial) {
    const Graph a = random_graph(rng, 6, 0.5);
    const Graph b = random_graph(rng, 6, 0.5);
    CHECK(are_isomorphic(a, b) == oracle::brute_isomorphic(oracle::matrix_of(a), oracle::matrix_of(b)));
  }
}

TEST_CASE("hard regular pairs") {
  CHECK_FALSE(are_isomorphic(petersen(), prism(10)));
  CHECK_FALSE(are_isomorphic(petersen(), mobius_ladder(10)));
  CHECK_FALSE(are_isomorphic(mobius_ladder(12), prism(12)));
  CHECK(are_isomorphic(mobius_ladder(6), complete_bipartite(3, 3)));
  CHECK_FALSE(are_isomorphic(cycle_graph(6), prism(6)));
}

TEST_CASE("certificate hex round trip") {
  const Certificate c = certificate(mobius_ladder(20));
  CHECK(Certificate::from_hex(20, c.to_hex()) == c);
}

TEST_CASE("subgraph containment") {
  CHECK(contains_subgraph(complete_graph(4), cycle_graph(4)));
  CHECK(contains_subgraph(cycle_graph(5), path_graph(5)));
  CHECK_FALSE(contains_subgraph(cycle_graph(5), cycle_graph(3)));
  CHECK_FALSE(contains_subgraph(path_graph(3), path_graph(4)));
  CHECK(contains_subgraph(named_graph("C3+2e"), star_graph(4)));
  CHECK_FALSE(contains_subgraph(named_graph("K2,3"), named_graph("K2uK3")));
  // Ordinary, not induced: the path sits inside K4.
  CHECK(contains_subgraph(complete_graph(4), path_graph(4)));
}

TEST_CASE("matching number agrees with brute force") {
  std::mt19937 rng(9);
  for (int trial = 0; trial < 200; ++trial) {
    const Graph g = random_graph(rng, 1 + trial % 9, 0.35);
    REQUIRE(matching_number(g) == oracle::brute_matching(oracle::matrix_of(g)));
  }
  CHECK(matching_number(complete_bipartite(3, 3)) == 3);
  CHECK(matching_number(star_graph(7)) == 1);
}

}  // TEST_SUITE

TEST_SUITE("corpus") {

TEST_CASE("connected subcubic counts") {
  const std::vector<std::size_t> expected{1, 1, 2, 6, 10, 29, 64, 194, 531, 1733};
  for (int n = 1; n <= 10; ++n) CHECK(enumerate_connected_graphs(n, 3).size() == expected[n - 1]);
}

TEST_CASE("small corpora equal the brute-force scan") {
  for (int n = 1; n <= 6; ++n) {
    for (int d : {3, 4}) {
      std::set<std::string> classes;
      for (const Graph& g : enumerate_connected_graphs(n, d)) {
        CHECK(g.is_connected());
        CHECK(g.max_degree() <= d);
        classes.insert(oracle::brute_canonical(oracle::matrix_of(g)));
      }
      CHECK(classes == oracle::brute_connected_classes(n, d));
    }
  }
}

TEST_CASE("cubic counts") {
  const std::vector<std::size_t> expected{1, 2, 5, 19, 85};
  for (int n = 4; n <= 12; n += 2) {
    const auto graphs = enumerate_cubic_graphs(n);
    CHECK(graphs.size() == expected[(n - 4) / 2]);
    for (const Graph& g : graphs) CHECK(g.is_regular(3));
  }
  CHECK_THROWS(enumerate_cubic_graphs(5));
  CHECK_THROWS(enumerate_connected_graphs(11, 3));
}

}  // TEST_SUITE
