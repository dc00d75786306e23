#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "ccg/coalition.hpp"
#include "ccg/graph.hpp"

namespace ccg {

struct Corpus {
  std::string description;
  std::vector<Graph> graphs;
};

// Connected graphs with maximum degree <= 3 of every order 1..max_n.
Corpus subcubic_corpus(int max_n);
// Even orders in [min_n, max_n], starting at 6.
Corpus ladder_corpus(int min_n, int max_n);
Corpus prism_corpus(int min_n, int max_n);
// Cubic graphs of every even order 4..max_n.
Corpus cubic_corpus(int max_n);
Corpus merge_corpora(const std::vector<Corpus>& parts);

/// Graph families for witness search, walked in increasing order.
///  ladders, prisms: M_n / Pr_n
///  cubic: cubic corpus (n <= 12)
///  subcubic: connected subcubic corpus (n <= 10)
///  near-cubic: M_n and Pr_n, one-edge subdivisions of M_{n-1} and
///              Pr_{n-1}, one-vertex deletions of M_{n+1} and Pr_{n+1}
enum class Family { ladders, prisms, cubic, subcubic, near_cubic };

Family parse_family(std::string_view name);  // Error(unknown_name)
std::string to_string(Family family);
// Members of one order, deduplicated up to isomorphism in walk order.
std::vector<Graph> family_members(Family family, int n);

struct Witness {
  Graph graph;
  Partition partition;
  std::string ccg_class;
};

/// First graph (by order, then family order) with a valid partition whose
/// coalition graph classifies as `target`, and the first such partition in
/// enumeration order. `target` must name a catalog graph or star.
std::optional<Witness> witness_search(std::string_view target, Family family, int min_n, int max_n,
                                      const EnumerationOptions& options = {});

// First member of order n with a valid partition into at least `parts` parts.
std::optional<Witness> partition_count_witness(Family family, int n, int parts,
                                               const EnumerationOptions& options = {});

struct Counterexample {
  std::string graph6;
  std::string sets;  // partition text, or the offending vertex sets
  std::string detail;
};

struct VerdictRecord {
  std::string claim_id;
  std::string scope;
  std::uint64_t checked = 0;
  std::vector<Counterexample> violations;

  bool passed() const { return violations.empty(); }
};

struct ClaimInfo {
  std::string id;
  std::string statement;
  bool corpus_driven;  // false: fixed witnesses and families
};

// Every claim the suite knows, in run order.
const std::vector<ClaimInfo>& claim_registry();

struct VerifyConfig {
  int workers = 1;
  // Fixed-scope claims.
  int cubic_max_n = 10;
  int prop2_min_n = 10;
  int prop2_max_n = 14;
  int witness_subcubic_max_n = 10;
  std::vector<int> sharpness_orders{11, 12, 13};
};

/// Runs the selected claims; corpus-driven claims use `corpus`, which must
/// consist of connected graphs with maximum degree <= 3
/// (Error(precondition_violated) otherwise). Records come back in registry
/// order.
std::vector<VerdictRecord> run_claims(const std::vector<std::string>& claim_ids, const Corpus& corpus,
                                      const VerifyConfig& config = {});

// Default corpus: subcubic n <= subcubic_max_n, ladders and prisms 6..12.
Corpus default_corpus(int subcubic_max_n = 7, int ladder_max_n = 12);

VerdictRecord verify_lemma1(const Corpus& corpus);
VerdictRecord verify_corollary1(const Corpus& corpus);
VerdictRecord verify_corollary2(const Corpus& corpus);
VerdictRecord verify_matching_bound(const Corpus& corpus);
VerdictRecord verify_isolated_vertex(const Corpus& corpus);
VerdictRecord verify_degree4(const Corpus& corpus);
VerdictRecord verify_alpha1(const Corpus& corpus);
VerdictRecord verify_order_at_most_4(const Corpus& corpus);
VerdictRecord verify_forbidden_subgraphs(const Corpus& corpus);
VerdictRecord verify_order5(const Corpus& corpus);
VerdictRecord verify_order6_plus(const Corpus& corpus);
VerdictRecord verify_theorem1(const Corpus& corpus);
VerdictRecord verify_theorem3(const Corpus& corpus);
VerdictRecord verify_theorem3_sharpness(const VerifyConfig& config = {});
VerdictRecord verify_proposition1(const VerifyConfig& config = {});
VerdictRecord verify_proposition2(const VerifyConfig& config = {});

/// Re-runs one claim on a single counterexample; returns the violation
/// detail if it still fails. Only corpus-driven claims can be replayed.
std::optional<std::string> replay(std::string_view claim_id, const Counterexample& counterexample);

// "PASS lemma1 [scope] checked=N" per record plus one line per violation.
void write_verdicts_text(std::ostream& out, const std::vector<VerdictRecord>& records);
// claim_id,scope,checked,violations
void write_verdicts_csv(std::ostream& out, const std::vector<VerdictRecord>& records);

}  // namespace ccg
