#pragma once

#include <cstdint>
#include <vector>

#include "ccg/graph.hpp"

namespace ccg {

// Union of closed neighbourhoods.
VertexSet closed_neighborhood(const Graph& g, VertexSet s);

// False for the empty set.
bool is_dominating(const Graph& g, VertexSet s);
// Throws Error(empty_set) on s = {}.
bool is_connected_induced(const Graph& g, VertexSet s);
bool is_cds(const Graph& g, VertexSet s);

// Largest degree of G[V \ d]; 0 when d = V.
int complement_max_degree(const Graph& g, VertexSet d);

// For a CDS d: every vertex of d has degree 3, G[d] is a tree, and every
// vertex outside d has exactly one neighbour in d. Throws Error(not_cds).
bool lemma1_equality_holds(const Graph& g, VertexSet d);

// Smallest CDS by subsets in increasing size. Throws
// Error(precondition_violated) on a disconnected graph.
int min_cds_size(const Graph& g);

// Every CDS of g in increasing mask order (n <= 24).
std::vector<VertexSet> all_cds(const Graph& g);

/// Dominating / CDS flags for every subset, precomputed for n <= kTableLimit
/// and evaluated directly above that.
class CdsTable {
 public:
  static constexpr int kTableLimit = 20;

  explicit CdsTable(const Graph& g);

  bool dominating(VertexSet s) const {
    return tabulated_ ? (flags_[s.bits()] & kDominating) != 0 : is_dominating(*graph_, s);
  }
  bool cds(VertexSet s) const {
    if (s.empty()) return false;
    return tabulated_ ? (flags_[s.bits()] & kCds) != 0 : is_cds(*graph_, s);
  }
  const Graph& graph() const { return *graph_; }

 private:
  static constexpr std::uint8_t kDominating = 1;
  static constexpr std::uint8_t kCds = 2;

  const Graph* graph_;
  bool tabulated_;
  std::vector<std::uint8_t> flags_;
};

}  // namespace ccg
