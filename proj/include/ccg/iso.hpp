#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

#include "ccg/graph.hpp"

namespace ccg {

/// Canonical form of an isomorphism class: the upper-triangle adjacency
/// bits (graph6 column order, MSB first) of the lexicographically smallest
/// labelling reached by the canonical refinement search. Two graphs get the
/// same certificate exactly when they are isomorphic.
struct Certificate {
  int order = 0;
  std::vector<std::uint64_t> words;

  std::string to_hex() const;
  static Certificate from_hex(int order, std::string_view hex);

  auto operator<=>(const Certificate&) const = default;
};

struct CertificateHash {
  std::size_t operator()(const Certificate& c) const noexcept;
};

Certificate certificate(const Graph& g);

// canonical_labeling(g)[v] is the position of v in the canonical order, so
// g.relabeled(canonical_labeling(g)) is the canonical form.
std::vector<int> canonical_labeling(const Graph& g);
Graph canonical_form(const Graph& g);
bool are_isomorphic(const Graph& a, const Graph& b);

// Ordinary (not necessarily induced) subgraph containment: an injection of
// pattern vertices into host vertices that maps edges onto edges.
bool contains_subgraph(const Graph& host, const Graph& pattern);

// Maximum number of pairwise disjoint edges.
int matching_number(const Graph& h);

}  // namespace ccg
