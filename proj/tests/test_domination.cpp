#include <doctest.h>

#include <random>

#include "ccg/domination.hpp"
#include "ccg/error.hpp"
#include "ccg/generators.hpp"
#include "oracles.hpp"

using namespace ccg;

namespace {

oracle::Block block_of(VertexSet s) { return oracle::Block(s.begin(), s.end()); }

std::vector<Graph> sample_graphs() {
  return {path_graph(5), cycle_graph(7), star_graph(4), mobius_ladder(8), prism(10),
          complete_graph(4), named_graph("S2,2"), named_graph("K2,3"), empty_graph(3)};
}

}  // namespace

TEST_SUITE("domination") {

TEST_CASE("predicates agree with the reference on every subset") {
  for (const Graph& g : sample_graphs()) {
    const auto m = oracle::matrix_of(g);
    const CdsTable table(g);
    for (std::uint64_t bits = 1; bits < (std::uint64_t{1} << g.order()); ++bits) {
      const VertexSet s(bits);
      const bool dom = oracle::dominates(m, block_of(s));
      const bool cds = oracle::is_cds(m, block_of(s));
      REQUIRE(is_dominating(g, s) == dom);
      REQUIRE(is_cds(g, s) == cds);
      REQUIRE(table.dominating(s) == dom);
      REQUIRE(table.cds(s) == cds);
      REQUIRE(is_connected_induced(g, s) == oracle::connected_within(m, block_of(s)));
    }
  }
}

TEST_CASE("empty set") {
  const Graph g = cycle_graph(4);
  CHECK_FALSE(is_dominating(g, VertexSet{}));
  CHECK_THROWS_AS(is_cds(g, VertexSet{}), Error);
  CHECK_FALSE(CdsTable(g).cds(VertexSet{}));
}

TEST_CASE("domination is monotone under supersets") {
  std::mt19937_64 rng(11);
  const Graph g = mobius_ladder(12);
  for (int trial = 0; trial < 2000; ++trial) {
    const VertexSet s(rng() & 0xFFF);
    const VertexSet t = s | VertexSet(rng() & 0xFFF);
    if (is_dominating(g, s)) CHECK(is_dominating(g, t));
  }
}

TEST_CASE("closed neighbourhood") {
  const Graph g = path_graph(5);
  CHECK(closed_neighborhood(g, VertexSet::single(0)) == VertexSet::first(2));
  CHECK(closed_neighborhood(g, VertexSet::single(2)) == (VertexSet::first(4) - VertexSet::single(0)));
}

TEST_CASE("minimum connected dominating sets") {
  CHECK(min_cds_size(complete_graph(4)) == 1);
  CHECK(min_cds_size(star_graph(6)) == 1);
  for (int n = 4; n <= 9; ++n) {
    CHECK(min_cds_size(cycle_graph(n)) == n - 2);
    CHECK(min_cds_size(path_graph(n)) == n - 2);
  }
  CHECK(min_cds_size(mobius_ladder(6)) == 2);
  CHECK(min_cds_size(prism(6)) == 2);
  CHECK_THROWS_AS(min_cds_size(empty_graph(2)), Error);
}

TEST_CASE("all_cds lists exactly the connected dominating sets") {
  for (const Graph& g : sample_graphs()) {
    const auto m = oracle::matrix_of(g);
    std::vector<VertexSet> expected;
    for (std::uint64_t bits = 1; bits < (std::uint64_t{1} << g.order()); ++bits) {
      if (oracle::is_cds(m, block_of(VertexSet(bits)))) expected.push_back(VertexSet(bits));
    }
    CHECK(all_cds(g) == expected);
  }
}

TEST_CASE("complement degree and the tight structure") {
  const Graph g = prism(8);
  for (VertexSet d : all_cds(g)) {
    CHECK(complement_max_degree(g, d) <= 2);
    if (2 * d.size() == g.order() - 2) CHECK(lemma1_equality_holds(g, d));
  }
  CHECK(complement_max_degree(g, g.vertices()) == 0);
  try {
    lemma1_equality_holds(g, VertexSet::single(0));
    FAIL("expected NotCds");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::not_cds);
  }
}

}  // TEST_SUITE
