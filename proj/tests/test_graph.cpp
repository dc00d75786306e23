#include <doctest.h>

#include <random>
#include <sstream>

#include "ccg/error.hpp"
#include "ccg/generators.hpp"
#include "ccg/graph.hpp"
#include "ccg/graph6.hpp"
#include "oracles.hpp"

using namespace ccg;

namespace {

Errc code_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected ccg::Error");
  return Errc::precondition_violated;
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

TEST_SUITE("graph") {

TEST_CASE("vertex set algebra") {
  VertexSet a = VertexSet::single(1) | VertexSet::single(4);
  VertexSet b = VertexSet::first(3);
  CHECK(a.size() == 2);
  CHECK((a & b) == VertexSet::single(1));
  CHECK((b - a).size() == 2);
  CHECK(a.lowest() == 1);
  std::vector<int> members(a.begin(), a.end());
  CHECK(members == std::vector<int>{1, 4});
  CHECK(VertexSet::first(64).size() == 64);
}

TEST_CASE("construction validates edges") {
  CHECK(code_of([] { Graph(3, {{0, 0}}); }) == Errc::self_loop);
  CHECK(code_of([] { Graph(3, {{0, 3}}); }) == Errc::out_of_range);
  CHECK(code_of([] { Graph(0, {}); }) == Errc::out_of_range);
  CHECK(code_of([] { Graph::from_neighborhoods({VertexSet::single(1), VertexSet{}}); }) == Errc::malformed_input);
  Graph g(3, {{0, 1}, {1, 0}, {1, 2}});
  CHECK(g.edge_count() == 2);
}

TEST_CASE("basic queries") {
  const Graph p = path_graph(4);
  CHECK(p.degree_sequence() == std::vector<int>{2, 2, 1, 1});
  CHECK(p.is_connected());
  CHECK_FALSE(empty_graph(2).is_connected());
  CHECK(empty_graph(1).is_connected());
  CHECK(complete_graph(5).is_complete());
  CHECK(p.edges() == std::vector<Edge>{{0, 1}, {1, 2}, {2, 3}});
}

TEST_CASE("ladders and prisms") {
  for (int n = 6; n <= 20; n += 2) {
    for (const Graph& g : {mobius_ladder(n), prism(n)}) {
      CHECK(g.is_regular(3));
      CHECK(g.is_connected());
      CHECK(g.edge_count() == 3 * n / 2);
    }
    CHECK(oracle::girth(oracle::matrix_of(prism(n))) == (n == 6 ? 3 : 4));
    CHECK(oracle::girth(oracle::matrix_of(mobius_ladder(n))) == 4);
  }
  CHECK(mobius_ladder(8).has_edge(0, 4));
  CHECK(prism(8).has_edge(3, 0));
  CHECK(prism(8).has_edge(3, 7));
  CHECK(code_of([] { mobius_ladder(7); }) == Errc::bad_order);
  CHECK(code_of([] { prism(4); }) == Errc::bad_order);
  CHECK(code_of([] { mobius_ladder(66); }) == Errc::bad_order);
}

TEST_CASE("smallest ladder is K3,3 and smallest prism has two triangles") {
  const auto k33 = oracle::matrix_from_edges(6, {{0, 3}, {0, 4}, {0, 5}, {1, 3}, {1, 4}, {1, 5}, {2, 3}, {2, 4}, {2, 5}});
  CHECK(oracle::brute_isomorphic(oracle::matrix_of(mobius_ladder(6)), k33));
  const auto two_triangles = oracle::matrix_from_edges(6, {{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}, {0, 3}, {1, 4}, {2, 5}});
  CHECK(oracle::brute_isomorphic(oracle::matrix_of(prism(6)), two_triangles));
}

TEST_CASE("named graphs") {
  const Graph k4e = named_graph("K4-e");
  CHECK(k4e.order() == 4);
  CHECK(k4e.edge_count() == 5);
  CHECK(named_graph("S_{2,2}").degree_sequence() == std::vector<int>{3, 3, 1, 1, 1, 1});
  CHECK(named_graph("K_{2,3}").edge_count() == 6);
  CHECK(named_graph("P_2 ∪ P_3").edge_count() == 3);
  CHECK(named_graph("C3+2e").degree_sequence() == std::vector<int>{4, 2, 2, 1, 1});
  CHECK(named_graph("C3+e+e").degree_sequence() == std::vector<int>{3, 3, 2, 1, 1});
  CHECK(named_graph("2C3+e").degree_sequence() == std::vector<int>{4, 3, 2, 2, 1});
  CHECK(named_graph("Kbar4").edge_count() == 0);
  CHECK(named_graph("S5").degree_sequence() == std::vector<int>{4, 1, 1, 1, 1});
  CHECK(named_graph("M8") == mobius_ladder(8));
  CHECK(normalize_name("S_{1,2}") == "S1,2");
  CHECK(code_of([] { named_graph("Q9"); }) == Errc::unknown_name);
  CHECK(code_of([] { named_graph("M7"); }) == Errc::unknown_name);
}

TEST_CASE("relabel, induce, subdivide") {
  const Graph c5 = cycle_graph(5);
  const std::vector<int> perm{2, 0, 4, 1, 3};
  const Graph r = c5.relabeled(perm);
  for (const auto& e : c5.edges()) CHECK(r.has_edge(perm[e.u], perm[e.v]));
  CHECK(c5.induced(VertexSet::first(3)) == path_graph(3));
  const Graph s = c5.subdivided({0, 1});
  CHECK(s.order() == 6);
  CHECK(s.is_regular(2));
  CHECK(c5.without_vertex(2) == path_graph(4).relabeled(std::vector<int>{2, 3, 0, 1}));
  CHECK(code_of([&] { c5.subdivided({0, 2}); }) == Errc::out_of_range);
}

TEST_CASE("edge list round trip") {
  std::istringstream in("# comment\n7\n0 1\n1 2\n");
  const Graph g = read_edge_list(in);
  CHECK(g.order() == 7);
  CHECK(g.edge_count() == 2);
  std::ostringstream out;
  write_edge_list(out, g);
  std::istringstream back(out.str());
  CHECK(read_edge_list(back) == g);
  std::istringstream bad("0 x\n");
  CHECK(code_of([&] { read_edge_list(bad); }) == Errc::malformed_input);
}

}  // TEST_SUITE

TEST_SUITE("graph6") {

TEST_CASE("hand-encoded strings") {
  CHECK(graph6_encode(complete_graph(4)) == "C~");
  CHECK(graph6_encode(path_graph(4)) == "Ch");
  CHECK(graph6_encode(empty_graph(1)) == "@");
  CHECK(graph6_encode(complete_graph(2)) == "A_");
  CHECK(graph6_decode("Ch") == path_graph(4));
  CHECK(graph6_decode(">>graph6<<C~") == complete_graph(4));
  CHECK(graph6_encode(empty_graph(63)).rfind("~??~", 0) == 0);
}

TEST_CASE("rejects malformed input") {
  CHECK(code_of([] { graph6_decode(""); }) == Errc::malformed_input);
  CHECK(code_of([] { graph6_decode("C!"); }) == Errc::malformed_input);
  CHECK(code_of([] { graph6_decode("C~~"); }) == Errc::malformed_input);
  CHECK(code_of([] { graph6_decode("A`"); }) == Errc::malformed_input);
}

TEST_CASE("round trip on random graphs") {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = 1 + trial % 64;
    const Graph g = random_graph(rng, n, 0.3);
    CHECK(graph6_decode(graph6_encode(g)) == g);
  }
}

TEST_CASE("reads one graph per line") {
  std::istringstream in("C~\n\nCh\n");
  const auto graphs = read_graph6_lines(in);
  REQUIRE(graphs.size() == 2);
  CHECK(graphs[1] == path_graph(4));
}

}  // TEST_SUITE
