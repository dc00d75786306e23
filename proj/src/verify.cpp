#include "ccg/verify.hpp"

#include <algorithm>
#include <array>
#include <functional>
#include <map>
#include <ostream>
#include <set>
#include <unordered_map>
#include <unordered_set>

#include "ccg/catalog.hpp"
#include "ccg/corpus.hpp"
#include "ccg/domination.hpp"
#include "ccg/error.hpp"
#include "ccg/generators.hpp"
#include "ccg/graph6.hpp"
#include "ccg/iso.hpp"

namespace ccg {

// ---------------------------------------------------------------- corpora

Corpus subcubic_corpus(int max_n) {
  Corpus c{"connected subcubic n<=" + std::to_string(max_n), {}};
  for (int n = 1; n <= max_n; ++n) {
    auto graphs = enumerate_connected_graphs(n, 3);
    c.graphs.insert(c.graphs.end(), graphs.begin(), graphs.end());
  }
  return c;
}

Corpus ladder_corpus(int min_n, int max_n) {
  Corpus c{"ladders M" + std::to_string(std::max(6, min_n)) + "..M" + std::to_string(max_n), {}};
  for (int n = std::max(6, min_n + (min_n % 2)); n <= max_n; n += 2) c.graphs.push_back(mobius_ladder(n));
  return c;
}

Corpus prism_corpus(int min_n, int max_n) {
  Corpus c{"prisms Pr" + std::to_string(std::max(6, min_n)) + "..Pr" + std::to_string(max_n), {}};
  for (int n = std::max(6, min_n + (min_n % 2)); n <= max_n; n += 2) c.graphs.push_back(prism(n));
  return c;
}

Corpus cubic_corpus(int max_n) {
  Corpus c{"cubic n<=" + std::to_string(max_n), {}};
  for (int n = 4; n <= max_n; n += 2) {
    auto graphs = enumerate_cubic_graphs(n);
    c.graphs.insert(c.graphs.end(), graphs.begin(), graphs.end());
  }
  return c;
}

Corpus merge_corpora(const std::vector<Corpus>& parts) {
  Corpus out;
  for (const Corpus& p : parts) {
    if (!out.description.empty()) out.description += " + ";
    out.description += p.description;
    out.graphs.insert(out.graphs.end(), p.graphs.begin(), p.graphs.end());
  }
  return out;
}

Corpus default_corpus(int subcubic_max_n, int ladder_max_n) {
  return merge_corpora({subcubic_corpus(subcubic_max_n), ladder_corpus(6, ladder_max_n), prism_corpus(6, ladder_max_n)});
}

// ---------------------------------------------------------------- families

Family parse_family(std::string_view name) {
  if (name == "ladders" || name == "mobius") return Family::ladders;
  if (name == "prisms") return Family::prisms;
  if (name == "cubic") return Family::cubic;
  if (name == "subcubic") return Family::subcubic;
  if (name == "near-cubic") return Family::near_cubic;
  throw Error(Errc::unknown_name, "unknown family '" + std::string(name) +
                                      "' (ladders, prisms, cubic, subcubic, near-cubic)");
}

std::string to_string(Family family) {
  switch (family) {
    case Family::ladders: return "ladders";
    case Family::prisms: return "prisms";
    case Family::cubic: return "cubic";
    case Family::subcubic: return "subcubic";
    case Family::near_cubic: return "near-cubic";
  }
  return "?";
}

std::vector<Graph> family_members(Family family, int n) {
  const bool ladder_order = n >= 6 && n % 2 == 0 && n <= kMaxVertices;
  switch (family) {
    case Family::ladders:
      return ladder_order ? std::vector<Graph>{mobius_ladder(n)} : std::vector<Graph>{};
    case Family::prisms:
      return ladder_order ? std::vector<Graph>{prism(n)} : std::vector<Graph>{};
    case Family::cubic:
      return (n >= 4 && n % 2 == 0) ? enumerate_cubic_graphs(n) : std::vector<Graph>{};
    case Family::subcubic:
      return n >= 1 ? enumerate_connected_graphs(n, 3) : std::vector<Graph>{};
    case Family::near_cubic: {
      std::vector<Graph> candidates;
      auto bases = [](int m) {
        if (m < 6 || m % 2 != 0 || m > kMaxVertices) return std::vector<Graph>{};
        return std::vector<Graph>{mobius_ladder(m), prism(m)};
      };
      for (Graph& g : bases(n)) candidates.push_back(std::move(g));
      for (const Graph& g : bases(n - 1)) {
        for (const Edge& e : g.edges()) candidates.push_back(g.subdivided(e));
      }
      for (const Graph& g : bases(n + 1)) {
        for (int v = 0; v < g.order(); ++v) {
          Graph h = g.without_vertex(v);
          if (h.is_connected()) candidates.push_back(std::move(h));
        }
      }
      std::unordered_set<Certificate, CertificateHash> seen;
      std::vector<Graph> out;
      for (Graph& g : candidates) {
        if (seen.insert(certificate(g)).second) out.push_back(std::move(g));
      }
      return out;
    }
  }
  return {};
}

std::optional<Witness> witness_search(std::string_view target, Family family, int min_n, int max_n,
                                      const EnumerationOptions& options) {
  const std::string cls = canonical_class_name(target);
  const int k = named_graph(target).order();
  for (int n = std::max(1, min_n); n <= max_n; ++n) {
    for (const Graph& g : family_members(family, n)) {
      EnumerationOptions opts = options;
      opts.min_parts = k;
      opts.max_parts = k;
      std::optional<Witness> found;
      for_each_partition(g, opts, [&](const PartitionView& view) {
        if (classify(view.ccg()) != cls) return true;
        found = Witness{g, view.partition(), cls};
        return false;
      });
      if (found) return found;
    }
  }
  return std::nullopt;
}

std::optional<Witness> partition_count_witness(Family family, int n, int parts, const EnumerationOptions& options) {
  for (const Graph& g : family_members(family, n)) {
    EnumerationOptions opts = options;
    opts.min_parts = parts;
    std::optional<Witness> found;
    for_each_partition(g, opts, [&](const PartitionView& view) {
      found = Witness{g, view.partition(), classify(view.ccg())};
      return false;
    });
    if (found) return found;
  }
  return std::nullopt;
}

// ---------------------------------------------------------------- claims

namespace {

constexpr std::size_t kMaxStoredViolations = 1000;

enum class Claim {
  lemma1,
  cor1,
  cor2,
  lemma2,
  lemma3,
  lemma4,
  lemma5,
  lemma6,
  lemma7,
  lemma8,
  lemma9,
  thm1,
  thm3,
  thm3_sharpness,
  prop1,
  prop2,
};

struct ClaimDef {
  Claim claim;
  ClaimInfo info;
};

const std::vector<ClaimDef>& claim_defs() {
  static const std::vector<ClaimDef> defs = {
      {Claim::lemma1, {"lemma1", "every CDS D: |D| >= n/2-1, G[V\\D] has max degree <= 2, equality iff the tree/degree-3/unique-neighbour structure", true}},
      {Claim::cor1, {"cor1", "disjoint CDS D1,D2: |D1|+|D2| >= n-2, each induces a path or cycle; equality gives two paths of n/2-1 vertices joined by a perfect matching", true}},
      {Claim::cor2, {"cor2", "three disjoint CDS with n >= 5 force sizes 2 and G in {Pr6, K3,3}", true}},
      {Claim::lemma2, {"lemma2", "alpha(H) <= 3; alpha(H) = 3 only for (M6, K3,3) and (Pr6, 3K2)", true}},
      {Claim::lemma3, {"lemma3", "an isolated vertex in H forces G = K_n, n = k <= 4, H edgeless", true}},
      {Claim::lemma4, {"lemma4", "a part of H-degree >= 4 is dominating and induces a disconnected subgraph", true}},
      {Claim::lemma5, {"lemma5", "alpha(H) = 1 gives H = K3 or a star S_k with k <= floor((n+7)/3)", true}},
      {Claim::lemma6, {"lemma6", "k <= 4 gives H among K1, K2, Kbar2, P3, K3, Kbar3, 2K2, S4, P4, C4, C3+e, K4-e, K4, Kbar4", true}},
      {Claim::lemma7, {"lemma7", "H contains none of K2uK3, K2uS4, 2C3+e as a subgraph", true}},
      {Claim::lemma8, {"lemma8", "k = 5 gives H among P2uP3, S1,2, S5, P5, C3+e+e, C3+2e, C4+e, C5, K2,3", true}},
      {Claim::lemma9, {"lemma9", "k >= 6 gives H among K3,3, 3K2, S2,2, S_k", true}},
      {Claim::thm1, {"thm1", "every coalition graph is a star or one of the 22 catalog graphs", true}},
      {Claim::thm3, {"thm3", "k <= max{6, floor((n+7)/3)}; k > 6 forces H = S_k", true}},
      {Claim::thm3_sharpness, {"thm3.sharpness", "CC = max{6, floor((n+7)/3)} is attained at n = 6, 8, 10 and at the configured orders >= 11", false}},
      {Claim::prop1, {"prop1", "K1, Kbar2, Kbar3, K4, Kbar4, C5, 3K2, K2,3, K3,3 are realised, never above order 10; C5 by M10 and K2,3 by a cubic graph of order 10", false}},
      {Claim::prop2, {"prop2", "the remaining catalog graphs and small stars are realised by every ladder in the configured range; C4+e by a subcubic graph of order <= 10 and by no ladder of order 10..12", false}},
  };
  return defs;
}

const ClaimDef& find_claim(std::string_view id) {
  for (const auto& d : claim_defs()) {
    if (d.info.id == id) return d;
  }
  throw Error(Errc::unknown_name, "unknown claim '" + std::string(id) + "'");
}

bool is_partition_claim(Claim c) { return c >= Claim::lemma2 && c <= Claim::thm3; }
bool is_cds_claim(Claim c) { return c <= Claim::cor2; }

void add_violation(VerdictRecord& r, const Graph& g, std::string sets, std::string detail) {
  if (r.violations.size() >= kMaxStoredViolations) return;
  r.violations.push_back({graph6_encode(g), std::move(sets), std::move(detail)});
}

std::string set_text(VertexSet s) { return format_partition(Partition{{s}}); }

void require_subcubic(const Corpus& corpus) {
  for (const Graph& g : corpus.graphs) {
    if (!g.is_connected() || g.max_degree() > 3) {
      throw Error(Errc::precondition_violated,
                  "graph " + graph6_encode(g) + " is not subcubic (connected, max degree <= 3)");
    }
  }
}

struct GraphFacts {
  const Graph& g;
  int n;
  bool complete;
  bool is_m6;
  bool is_pr6;
};

GraphFacts facts_of(const Graph& g) {
  static const Certificate m6 = certificate(mobius_ladder(6));
  static const Certificate pr6 = certificate(prism(6));
  const bool six = g.order() == 6 && g.is_regular(3);
  const Certificate c = six ? certificate(g) : Certificate{};
  return {g, g.order(), g.is_complete(), six && c == m6, six && c == pr6};
}

// Properties of one labelled coalition graph.
struct CcgProfile {
  Graph h;
  std::string cls;
  int alpha = 0;
  bool has_isolated = false;
  std::optional<int> star;
  std::array<bool, 3> forbidden{};  // K2uK3, K2uS4, 2C3+e
};

CcgProfile make_profile(Graph h) {
  CcgProfile p{std::move(h), {}, 0, false, std::nullopt, {}};
  p.cls = classify(p.h);
  p.alpha = matching_number(p.h);
  p.has_isolated = p.h.min_degree() == 0;
  p.star = star_order(p.h);
  static const std::array<Graph, 3> patterns{named_graph("K2uK3"), named_graph("K2uS4"), named_graph("2C3+e")};
  for (std::size_t i = 0; i < patterns.size(); ++i) p.forbidden[i] = contains_subgraph(p.h, patterns[i]);
  return p;
}

bool one_of(const std::string& cls, std::initializer_list<const char*> names) {
  return std::any_of(names.begin(), names.end(), [&](const char* n) { return cls == n; });
}

// Returns (premise held, violation detail).
std::pair<bool, std::optional<std::string>> check_partition_claim(Claim claim, const GraphFacts& gf,
                                                                  std::span<const VertexSet> parts,
                                                                  const CcgProfile& p) {
  const int k = static_cast<int>(parts.size());
  const int n = gf.n;
  using R = std::pair<bool, std::optional<std::string>>;
  switch (claim) {
    case Claim::lemma2: {
      if (p.alpha > 3) return R{true, "alpha(H) = " + std::to_string(p.alpha) + " > 3"};
      if (p.alpha < 3) return R{false, std::nullopt};
      const bool ok = (gf.is_m6 && p.cls == "K3,3") || (gf.is_pr6 && p.cls == "3K2");
      return R{true, ok ? std::nullopt : std::optional<std::string>("alpha(H) = 3 with H = " + p.cls)};
    }
    case Claim::lemma3: {
      if (!p.has_isolated) return R{false, std::nullopt};
      const bool ok = gf.complete && n == k && n <= 4 && p.h.edge_count() == 0;
      return R{true, ok ? std::nullopt : std::optional<std::string>("isolated vertex in H = " + p.cls)};
    }
    case Claim::lemma4: {
      bool premise = false;
      for (int i = 0; i < k; ++i) {
        if (p.h.degree(i) < 4) continue;
        premise = true;
        if (!is_dominating(gf.g, parts[i]) || is_connected_induced(gf.g, parts[i])) {
          return R{true, "part " + std::to_string(i) + " has H-degree " + std::to_string(p.h.degree(i)) +
                             " but is not a disconnected dominating set"};
        }
      }
      return R{premise, std::nullopt};
    }
    case Claim::lemma5: {
      if (p.alpha != 1) return R{false, std::nullopt};
      const bool ok = p.cls == "C3" || (p.star && *p.star <= (n + 7) / 3);
      return R{true, ok ? std::nullopt : std::optional<std::string>("alpha(H) = 1 with H = " + p.cls)};
    }
    case Claim::lemma6: {
      if (k > 4) return R{false, std::nullopt};
      const bool ok = one_of(p.cls, {"K1", "K2", "Kbar2", "P3", "C3", "Kbar3", "2K2", "S4", "P4", "C4", "C3+e",
                                     "K4-e", "K4", "Kbar4"});
      return R{true, ok ? std::nullopt : std::optional<std::string>("k = " + std::to_string(k) + " with H = " + p.cls)};
    }
    case Claim::lemma7: {
      static const std::array<const char*, 3> names{"K2uK3", "K2uS4", "2C3+e"};
      for (std::size_t i = 0; i < names.size(); ++i) {
        if (p.forbidden[i]) return R{true, "H = " + p.cls + " contains " + names[i]};
      }
      return R{true, std::nullopt};
    }
    case Claim::lemma8: {
      if (k != 5) return R{false, std::nullopt};
      const bool ok = one_of(p.cls, {"P2uP3", "S1,2", "S5", "P5", "C3+e+e", "C3+2e", "C4+e", "C5", "K2,3"});
      return R{true, ok ? std::nullopt : std::optional<std::string>("k = 5 with H = " + p.cls)};
    }
    case Claim::lemma9: {
      if (k < 6) return R{false, std::nullopt};
      const bool ok = one_of(p.cls, {"K3,3", "3K2", "S2,2"}) || (p.star && *p.star == k);
      return R{true, ok ? std::nullopt : std::optional<std::string>("k = " + std::to_string(k) + " with H = " + p.cls)};
    }
    case Claim::thm1:
      return R{true, is_admissible_class(p.cls) ? std::nullopt
                                                : std::optional<std::string>("H = " + p.cls + " is outside the catalog")};
    case Claim::thm3: {
      if (k > part_count_bound(n)) {
        return R{true, "k = " + std::to_string(k) + " exceeds max{6, floor((n+7)/3)} = " +
                           std::to_string(part_count_bound(n))};
      }
      if (k > 6 && !(p.star && *p.star == k)) return R{true, "k = " + std::to_string(k) + " > 6 with H = " + p.cls};
      return R{k > 6, std::nullopt};
    }
    default:
      break;
  }
  return R{false, std::nullopt};
}

std::uint64_t profile_key(std::span<const VertexSet> rows) {
  const int k = static_cast<int>(rows.size());
  std::uint64_t key = static_cast<std::uint64_t>(k) << 56;
  int bit = 0;
  for (int i = 1; i < k; ++i) {
    for (int j = 0; j < i; ++j, ++bit) {
      if (rows[i].contains(j)) key |= std::uint64_t{1} << bit;
    }
  }
  return key;
}

struct Tally {
  VerdictRecord record;
  std::uint64_t premise = 0;
};

void run_partition_pass(const Corpus& corpus, const std::vector<Claim>& claims, std::map<Claim, Tally>& tallies) {
  std::unordered_map<std::uint64_t, CcgProfile> cache;
  for (const Graph& g : corpus.graphs) {
    const GraphFacts gf = facts_of(g);
    EnumerationOptions opts;
    for_each_partition(g, opts, [&](const PartitionView& view) {
      const CcgProfile* profile = nullptr;
      std::optional<CcgProfile> local;
      if (view.size() <= 11) {
        const std::uint64_t key = profile_key(view.coalitions);
        auto it = cache.find(key);
        if (it == cache.end()) it = cache.emplace(key, make_profile(view.ccg())).first;
        profile = &it->second;
      } else {
        local = make_profile(view.ccg());
        profile = &*local;
      }
      for (Claim c : claims) {
        Tally& t = tallies[c];
        ++t.record.checked;
        auto [premise, violation] = check_partition_claim(c, gf, view.parts, *profile);
        if (premise) ++t.premise;
        if (violation) add_violation(t.record, g, format_partition(view.partition()), *violation);
      }
      return true;
    });
  }
}

std::optional<std::string> check_lemma1(const Graph& g, VertexSet d, bool& premise) {
  const int n = g.order();
  premise = 2 * d.size() == n - 2;
  if (2 * d.size() < n - 2) return "|D| = " + std::to_string(d.size()) + " < n/2 - 1";
  if (complement_max_degree(g, d) > 2) return "G[V\\D] has max degree " + std::to_string(complement_max_degree(g, d));
  if (premise != lemma1_equality_holds(g, d)) {
    return premise ? "|D| = n/2 - 1 without the equality structure" : "equality structure with |D| > n/2 - 1";
  }
  return std::nullopt;
}

int inner_edges(const Graph& g, VertexSet s) {
  int twice = 0;
  for (int v : s) twice += (g.neighbors(v) & s).size();
  return twice / 2;
}

int inner_max_degree(const Graph& g, VertexSet s) {
  int d = 0;
  for (int v : s) d = std::max(d, (g.neighbors(v) & s).size());
  return d;
}

std::optional<std::string> check_cor1(const Graph& g, VertexSet a, VertexSet b, bool& premise) {
  const int n = g.order();
  const int sum = a.size() + b.size();
  premise = sum == n - 2;
  if (sum < n - 2) return "|D1| + |D2| = " + std::to_string(sum) + " < n - 2";
  for (VertexSet d : {a, b}) {
    if (inner_max_degree(g, d) > 2) return "G[" + set_text(d) + "] is neither a path nor a cycle";
  }
  if (!premise) return std::nullopt;
  if (n % 2 != 0 || a.size() != n / 2 - 1 || b.size() != n / 2 - 1) return "equality with unequal halves";
  for (VertexSet d : {a, b}) {
    if (inner_edges(g, d) != d.size() - 1) return "equality but G[" + set_text(d) + "] is a cycle";
  }
  int cross = 0;
  for (int v : a) {
    const int m = (g.neighbors(v) & b).size();
    if (m != 1) return "equality but vertex " + std::to_string(v) + " has " + std::to_string(m) + " neighbours in D2";
    ++cross;
  }
  for (int v : b) {
    if ((g.neighbors(v) & a).size() != 1) return "equality but D2 is not matched into D1";
  }
  if (cross != n / 2 - 1) return "matching between D1 and D2 has size " + std::to_string(cross);
  return std::nullopt;
}

std::optional<std::string> check_cor2(const Graph& g, VertexSet a, VertexSet b, VertexSet c) {
  const GraphFacts gf = facts_of(g);
  if (a.size() != 2 || b.size() != 2 || c.size() != 2) return "three disjoint CDS not all of size 2";
  if (!gf.is_m6 && !gf.is_pr6) return "three disjoint CDS in a graph other than Pr6 and K3,3";
  return std::nullopt;
}

void run_cds_pass(const Corpus& corpus, const std::vector<Claim>& claims, std::map<Claim, Tally>& tallies) {
  const bool want1 = std::find(claims.begin(), claims.end(), Claim::lemma1) != claims.end();
  const bool want_c1 = std::find(claims.begin(), claims.end(), Claim::cor1) != claims.end();
  const bool want_c2 = std::find(claims.begin(), claims.end(), Claim::cor2) != claims.end();
  for (const Graph& g : corpus.graphs) {
    if (g.order() > CdsTable::kTableLimit) {
      throw Error(Errc::too_large, "CDS claims scan all subsets; order " + std::to_string(g.order()) + " is too large");
    }
    const int n = g.order();
    const std::vector<VertexSet> cds = all_cds(g);
    if (want1) {
      Tally& t = tallies[Claim::lemma1];
      for (VertexSet d : cds) {
        ++t.record.checked;
        bool premise = false;
        if (auto v = check_lemma1(g, d, premise)) add_violation(t.record, g, set_text(d), *v);
        if (premise) ++t.premise;
      }
    }
    if (!want_c1 && !want_c2) continue;
    // contains[m]: some CDS is a subset of m.
    std::vector<std::uint8_t> contains(std::size_t{1} << n, 0);
    for (VertexSet d : cds) contains[d.bits()] = 1;
    for (std::size_t m = 1; m < contains.size(); ++m) {
      if (contains[m]) continue;
      for (int v : VertexSet(m)) {
        if (contains[m & ~(std::size_t{1} << v)]) {
          contains[m] = 1;
          break;
        }
      }
    }
    for (std::size_t i = 0; i < cds.size(); ++i) {
      for (std::size_t j = i + 1; j < cds.size(); ++j) {
        if (cds[i].intersects(cds[j])) continue;
        if (want_c1) {
          Tally& t = tallies[Claim::cor1];
          ++t.record.checked;
          bool premise = false;
          if (auto v = check_cor1(g, cds[i], cds[j], premise)) {
            add_violation(t.record, g, format_partition(Partition{{cds[i], cds[j]}}), *v);
          }
          if (premise) ++t.premise;
        }
        if (!want_c2 || n < 5) continue;
        const VertexSet rest = g.vertices() - cds[i] - cds[j];
        Tally& t = tallies[Claim::cor2];
        ++t.record.checked;
        if (!contains[rest.bits()]) continue;
        for (std::size_t l = j + 1; l < cds.size(); ++l) {
          if (!cds[l].is_subset_of(rest)) continue;
          ++t.premise;
          if (auto v = check_cor2(g, cds[i], cds[j], cds[l])) {
            add_violation(t.record, g, format_partition(Partition{{cds[i], cds[j], cds[l]}}), *v);
          }
        }
      }
    }
  }
}

std::string scope_with_premise(const std::string& scope, std::uint64_t premise) {
  return scope + "; premise met " + std::to_string(premise) + " times";
}

}  // namespace

const std::vector<ClaimInfo>& claim_registry() {
  static const std::vector<ClaimInfo> infos = [] {
    std::vector<ClaimInfo> out;
    for (const auto& d : claim_defs()) out.push_back(d.info);
    return out;
  }();
  return infos;
}

VerdictRecord verify_theorem3_sharpness(const VerifyConfig& config) {
  VerdictRecord r{"thm3.sharpness", "Pr6, M8, M10; near-cubic search at n in {", 0, {}};
  for (std::size_t i = 0; i < config.sharpness_orders.size(); ++i) {
    r.scope += (i ? "," : "") + std::to_string(config.sharpness_orders[i]);
  }
  r.scope += "}";
  EnumerationOptions opts;
  opts.workers = config.workers;
  for (const Graph& g : {prism(6), mobius_ladder(8), mobius_ladder(10)}) {
    ++r.checked;
    const int cc = cc_number(g, opts);
    if (cc != part_count_bound(g.order())) {
      add_violation(r, g, "", "CC = " + std::to_string(cc) + ", bound " + std::to_string(part_count_bound(g.order())));
    }
  }
  for (int n : config.sharpness_orders) {
    ++r.checked;
    const int bound = part_count_bound(n);
    auto w = partition_count_witness(Family::near_cubic, n, bound, opts);
    if (!w) {
      r.violations.push_back({"", "", "no near-cubic graph of order " + std::to_string(n) + " reaches CC = " +
                                          std::to_string(bound)});
      continue;
    }
    const int cc = cc_number(w->graph, opts);
    if (cc != bound) {
      add_violation(r, w->graph, format_partition(w->partition), "witness has CC = " + std::to_string(cc));
    }
  }
  return r;
}

VerdictRecord verify_proposition1(const VerifyConfig& config) {
  const Corpus corpus = merge_corpora({subcubic_corpus(7), ladder_corpus(6, 12), prism_corpus(6, 12),
                                       cubic_corpus(config.cubic_max_n)});
  VerdictRecord r{"prop1", corpus.description, 0, {}};
  const std::vector<std::string> finite{"K1", "Kbar2", "Kbar3", "K4", "Kbar4", "C5", "3K2", "K2,3", "K3,3"};
  std::map<std::string, std::set<int>> orders;
  EnumerationOptions opts;
  opts.workers = config.workers;
  bool k23_cubic10 = false;
  for (const Graph& g : corpus.graphs) {
    ++r.checked;
    const EnumerationReport report = classify_and_count(g, opts);
    for (const auto& name : finite) {
      if (!report.histogram.contains(name)) continue;
      orders[name].insert(g.order());
      if (g.order() > 10) add_violation(r, g, "", name + " realised at order " + std::to_string(g.order()));
      if ((name == "3K2" || name == "K3,3") && g.order() != 6) {
        add_violation(r, g, "", name + " realised at order " + std::to_string(g.order()) + " != 6");
      }
    }
    if (g.order() == 10 && g.is_regular(3) && report.histogram.contains("K2,3")) k23_cubic10 = true;
  }
  for (const auto& name : finite) {
    if (orders[name].empty()) r.violations.push_back({"", "", name + " is never realised in the corpus"});
  }
  const EnumerationReport m10 = classify_and_count(mobius_ladder(10), opts);
  if (!m10.histogram.contains("C5")) add_violation(r, mobius_ladder(10), "", "M10 does not realise C5");
  if (!k23_cubic10) r.violations.push_back({"", "", "no cubic graph of order 10 realises K2,3"});
  return r;
}

VerdictRecord verify_proposition2(const VerifyConfig& config) {
  VerdictRecord r{"prop2",
                  "every ladder M" + std::to_string(config.prop2_min_n) + "..M" + std::to_string(config.prop2_max_n) +
                      " (finite proxy for infinitely many); C4+e via subcubic n<=" +
                      std::to_string(config.witness_subcubic_max_n),
                  0,
                  {}};
  const std::vector<std::string> targets{"C3",   "2K2", "P4",  "C4",     "C3+e",  "K4-e", "P2uP3", "S1,2",
                                         "P5",   "C3+e+e", "C3+2e", "S2,2", "K2",    "P3",   "S4",    "S5"};
  EnumerationOptions opts;
  opts.workers = config.workers;
  opts.exact_cap = std::max(opts.exact_cap, config.prop2_max_n);
  for (int n = config.prop2_min_n + config.prop2_min_n % 2; n <= config.prop2_max_n; n += 2) {
    const Graph g = mobius_ladder(n);
    const EnumerationReport report = classify_and_count(g, opts);
    for (const auto& name : targets) {
      ++r.checked;
      if (!report.histogram.contains(name)) add_violation(r, g, "", "M" + std::to_string(n) + " does not realise " + name);
    }
  }
  ++r.checked;
  if (!witness_search("C4+e", Family::subcubic, 1, config.witness_subcubic_max_n, opts)) {
    r.violations.push_back({"", "", "C4+e not realised by any subcubic graph of order <= " +
                                        std::to_string(config.witness_subcubic_max_n)});
  }
  ++r.checked;
  if (auto w = witness_search("C4+e", Family::ladders, 10, 12, opts)) {
    add_violation(r, w->graph, format_partition(w->partition), "a ladder of order >= 10 realises C4+e");
  }
  return r;
}

std::vector<VerdictRecord> run_claims(const std::vector<std::string>& claim_ids, const Corpus& corpus,
                                      const VerifyConfig& config) {
  std::set<Claim> selected;
  for (const auto& id : claim_ids) selected.insert(find_claim(id).claim);
  std::vector<Claim> cds_claims, partition_claims;
  for (Claim c : selected) {
    if (is_cds_claim(c)) cds_claims.push_back(c);
    if (is_partition_claim(c)) partition_claims.push_back(c);
  }
  if (!cds_claims.empty() || !partition_claims.empty()) require_subcubic(corpus);

  std::map<Claim, Tally> tallies;
  if (!cds_claims.empty()) run_cds_pass(corpus, cds_claims, tallies);
  if (!partition_claims.empty()) run_partition_pass(corpus, partition_claims, tallies);

  std::vector<VerdictRecord> out;
  for (const auto& def : claim_defs()) {
    if (!selected.contains(def.claim)) continue;
    switch (def.claim) {
      case Claim::thm3_sharpness: out.push_back(verify_theorem3_sharpness(config)); break;
      case Claim::prop1: out.push_back(verify_proposition1(config)); break;
      case Claim::prop2: out.push_back(verify_proposition2(config)); break;
      default: {
        Tally& t = tallies[def.claim];
        t.record.claim_id = def.info.id;
        t.record.scope = scope_with_premise(corpus.description, t.premise);
        out.push_back(std::move(t.record));
      }
    }
  }
  return out;
}

namespace {

VerdictRecord single(std::string_view id, const Corpus& corpus) {
  return run_claims({std::string(id)}, corpus).front();
}

}  // namespace

VerdictRecord verify_lemma1(const Corpus& corpus) { return single("lemma1", corpus); }
VerdictRecord verify_corollary1(const Corpus& corpus) { return single("cor1", corpus); }
VerdictRecord verify_corollary2(const Corpus& corpus) { return single("cor2", corpus); }
VerdictRecord verify_matching_bound(const Corpus& corpus) { return single("lemma2", corpus); }
VerdictRecord verify_isolated_vertex(const Corpus& corpus) { return single("lemma3", corpus); }
VerdictRecord verify_degree4(const Corpus& corpus) { return single("lemma4", corpus); }
VerdictRecord verify_alpha1(const Corpus& corpus) { return single("lemma5", corpus); }
VerdictRecord verify_order_at_most_4(const Corpus& corpus) { return single("lemma6", corpus); }
VerdictRecord verify_forbidden_subgraphs(const Corpus& corpus) { return single("lemma7", corpus); }
VerdictRecord verify_order5(const Corpus& corpus) { return single("lemma8", corpus); }
VerdictRecord verify_order6_plus(const Corpus& corpus) { return single("lemma9", corpus); }
VerdictRecord verify_theorem1(const Corpus& corpus) { return single("thm1", corpus); }
VerdictRecord verify_theorem3(const Corpus& corpus) { return single("thm3", corpus); }

std::optional<std::string> replay(std::string_view claim_id, const Counterexample& counterexample) {
  const ClaimDef& def = find_claim(claim_id);
  if (!def.info.corpus_driven) {
    throw Error(Errc::precondition_violated, "claim '" + def.info.id + "' is not replayable");
  }
  const Graph g = graph6_decode(counterexample.graph6);
  const Partition sets = parse_partition(counterexample.sets);
  for (VertexSet s : sets.parts) {
    if (!s.is_subset_of(g.vertices())) throw Error(Errc::out_of_range, "vertex set exceeds the graph");
  }
  if (is_cds_claim(def.claim)) {
    const std::size_t want = def.claim == Claim::lemma1 ? 1 : def.claim == Claim::cor1 ? 2 : 3;
    if (sets.parts.size() != want) {
      throw Error(Errc::malformed_input, "claim '" + def.info.id + "' takes " + std::to_string(want) + " sets");
    }
    for (VertexSet s : sets.parts) {
      if (!is_cds(g, s)) throw Error(Errc::not_cds, set_text(s) + " is not a connected dominating set");
    }
    bool premise = false;
    if (def.claim == Claim::lemma1) return check_lemma1(g, sets.parts[0], premise);
    if (def.claim == Claim::cor1) return check_cor1(g, sets.parts[0], sets.parts[1], premise);
    return check_cor2(g, sets.parts[0], sets.parts[1], sets.parts[2]);
  }
  const CoalitionGraph ccg = build_ccg(g, sets);
  const CcgProfile profile = make_profile(ccg.graph);
  return check_partition_claim(def.claim, facts_of(g), sets.parts, profile).second;
}

namespace {

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

}  // namespace

void write_verdicts_text(std::ostream& out, const std::vector<VerdictRecord>& records) {
  for (const auto& r : records) {
    out << (r.passed() ? "PASS " : "FAIL ") << r.claim_id << " [" << r.scope << "] checked=" << r.checked << '\n';
    for (const auto& v : r.violations) {
      out << "  violation";
      if (!v.graph6.empty()) out << " graph6=" << v.graph6;
      if (!v.sets.empty()) out << " sets=" << v.sets;
      out << ": " << v.detail << '\n';
    }
  }
}

void write_verdicts_csv(std::ostream& out, const std::vector<VerdictRecord>& records) {
  out << "claim_id,scope,checked,violations\n";
  for (const auto& r : records) {
    out << r.claim_id << ',' << csv_field(r.scope) << ',' << r.checked << ',' << r.violations.size() << '\n';
  }
}

}  // namespace ccg
