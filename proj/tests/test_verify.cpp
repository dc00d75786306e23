#include <doctest.h>

#include <sstream>

#include "ccg/catalog.hpp"
#include "ccg/domination.hpp"
#include "ccg/error.hpp"
#include "ccg/generators.hpp"
#include "ccg/graph6.hpp"
#include "ccg/verify.hpp"

using namespace ccg;

namespace {

std::vector<std::string> corpus_claims() {
  std::vector<std::string> ids;
  for (const auto& c : claim_registry()) {
    if (c.corpus_driven) ids.push_back(c.id);
  }
  return ids;
}

}  // namespace

TEST_SUITE("verify") {

TEST_CASE("claims hold on small subcubic graphs") {
  const auto records = run_claims(corpus_claims(), subcubic_corpus(6));
  CHECK(records.size() == corpus_claims().size());
  for (const auto& r : records) {
    CAPTURE(r.claim_id);
    CHECK(r.passed());
    CHECK(r.checked > 0);
  }
}

TEST_CASE("single ladder corpus") {
  const Corpus corpus{"M8", {mobius_ladder(8)}};
  for (auto fn : {verify_lemma1, verify_corollary1, verify_matching_bound, verify_forbidden_subgraphs,
                  verify_theorem1, verify_theorem3}) {
    const auto r = fn(corpus);
    CHECK(r.passed());
    CHECK(r.checked > 0);
  }
}

TEST_CASE("corpus must be subcubic and claims must exist") {
  const Corpus bad{"K5", {complete_graph(5)}};
  try {
    run_claims({"lemma7"}, bad);
    FAIL("expected PreconditionViolated");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::precondition_violated);
  }
  CHECK_THROWS_AS(run_claims({"lemma99"}, subcubic_corpus(3)), Error);
}

TEST_CASE("replay detects violations outside the subcubic class") {
  const std::string k5 = graph6_encode(complete_graph(5));
  CHECK(replay("lemma3", {k5, "0|1|2|3|4", ""}));
  CHECK(replay("thm1", {k5, "0|1|2|3|4", ""}));
  const std::string star = graph6_encode(star_graph(5));
  CHECK(replay("lemma1", {star, "0", ""}));
  // Inside the class the same checks are silent.
  const std::string m6 = graph6_encode(mobius_ladder(6));
  CHECK_FALSE(replay("lemma2", {m6, "0|1|2|3|4|5", ""}));
  CHECK_FALSE(replay("cor2", {graph6_encode(prism(6)), "0,3|1,4|2,5", ""}));
  CHECK_THROWS_AS(replay("lemma1", {m6, "0", ""}), Error);
  CHECK_THROWS_AS(replay("prop1", {m6, "0", ""}), Error);
}

TEST_CASE("families") {
  CHECK(parse_family("near-cubic") == Family::near_cubic);
  CHECK_THROWS_AS(parse_family("trees"), Error);
  CHECK(family_members(Family::ladders, 7).empty());
  for (int n : {11, 12, 13}) {
    const auto members = family_members(Family::near_cubic, n);
    CHECK_FALSE(members.empty());
    for (const Graph& g : members) {
      CHECK(g.order() == n);
      CHECK(g.is_connected());
      CHECK(g.max_degree() <= 3);
    }
  }
}

TEST_CASE("witness search") {
  const auto s5 = witness_search("S_5", Family::ladders, 10, 10);
  REQUIRE(s5);
  CHECK(s5->ccg_class == "S5");
  CHECK(classify(build_ccg(s5->graph, s5->partition).graph) == "S5");
  CHECK_FALSE(witness_search("K4", Family::ladders, 10, 12));
  const auto c3 = witness_search("C3", Family::ladders, 8, 8);
  REQUIRE(c3);
  CHECK(validate_partition(c3->graph, c3->partition));
  CHECK_THROWS_AS(witness_search("C6", Family::ladders, 8, 8), Error);
}

TEST_CASE("verdict writers") {
  std::vector<VerdictRecord> records{{"lemma7", "demo, scope", 3, {}},
                                     {"thm1", "demo", 1, {{"C~", "0|1|2|3", "H = Kbar4"}}}};
  std::ostringstream text, csv;
  write_verdicts_text(text, records);
  write_verdicts_csv(csv, records);
  CHECK(text.str() ==
        "PASS lemma7 [demo, scope] checked=3\nFAIL thm1 [demo] checked=1\n"
        "  violation graph6=C~ sets=0|1|2|3: H = Kbar4\n");
  CHECK(csv.str() == "claim_id,scope,checked,violations\nlemma7,\"demo, scope\",3,0\nthm1,demo,1,1\n");
}

}  // TEST_SUITE
