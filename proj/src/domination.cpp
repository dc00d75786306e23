#include "ccg/domination.hpp"

#include "ccg/error.hpp"

namespace ccg {

namespace {

bool connected_nonempty(const Graph& g, VertexSet s) {
  VertexSet reached = VertexSet::single(s.lowest());
  VertexSet frontier = reached;
  while (!frontier.empty()) {
    VertexSet next;
    for (int v : frontier) next |= g.neighbors(v);
    next &= s;
    frontier = next - reached;
    reached |= next;
  }
  return reached == s;
}

}  // namespace

VertexSet closed_neighborhood(const Graph& g, VertexSet s) {
  VertexSet out = s;
  for (int v : s) out |= g.neighbors(v);
  return out;
}

bool is_dominating(const Graph& g, VertexSet s) {
  return !s.empty() && closed_neighborhood(g, s) == g.vertices();
}

bool is_connected_induced(const Graph& g, VertexSet s) {
  if (s.empty()) throw Error(Errc::empty_set, "connectivity of the empty set");
  return connected_nonempty(g, s);
}

bool is_cds(const Graph& g, VertexSet s) {
  if (s.empty()) throw Error(Errc::empty_set, "is_cds of the empty set");
  return is_dominating(g, s) && connected_nonempty(g, s);
}

int complement_max_degree(const Graph& g, VertexSet d) {
  const VertexSet rest = g.vertices() - d;
  int best = 0;
  for (int v : rest) best = std::max(best, (g.neighbors(v) & rest).size());
  return best;
}

bool lemma1_equality_holds(const Graph& g, VertexSet d) {
  if (d.empty() || !is_cds(g, d)) throw Error(Errc::not_cds, "lemma1_equality_holds needs a connected dominating set");
  int inner_degree_sum = 0;
  for (int v : d) {
    if (g.degree(v) != 3) return false;
    inner_degree_sum += (g.neighbors(v) & d).size();
  }
  // A connected graph is a tree iff it has |d| - 1 edges.
  if (inner_degree_sum / 2 != d.size() - 1) return false;
  for (int v : g.vertices() - d) {
    if ((g.neighbors(v) & d).size() != 1) return false;
  }
  return true;
}

int min_cds_size(const Graph& g) {
  if (!g.is_connected()) throw Error(Errc::precondition_violated, "min_cds_size needs a connected graph");
  const int n = g.order();
  // Gosper's hack over subsets of each size.
  for (int size = 1; size <= n; ++size) {
    std::uint64_t s = (size == 64) ? ~std::uint64_t{0} : (std::uint64_t{1} << size) - 1;
    const std::uint64_t limit = g.vertices().bits();
    while (true) {
      if (is_cds(g, VertexSet(s))) return size;
      if (size == n) break;
      const std::uint64_t c = s & (~s + 1);
      const std::uint64_t r = s + c;
      if (r == 0) break;
      s = (((r ^ s) >> 2) / c) | r;
      if ((s & ~limit) != 0) break;
    }
  }
  return n;
}

std::vector<VertexSet> all_cds(const Graph& g) {
  if (g.order() > 24) throw Error(Errc::too_large, "all_cds is limited to 24 vertices");
  std::vector<VertexSet> out;
  const std::uint64_t end = std::uint64_t{1} << g.order();
  for (std::uint64_t m = 1; m < end; ++m) {
    if (is_cds(g, VertexSet(m))) out.emplace_back(m);
  }
  return out;
}

CdsTable::CdsTable(const Graph& g) : graph_(&g), tabulated_(g.order() <= kTableLimit) {
  if (!tabulated_) return;
  const std::size_t size = std::size_t{1} << g.order();
  flags_.assign(size, 0);
  std::vector<std::uint32_t> closure(size, 0);
  const std::uint32_t all = static_cast<std::uint32_t>(g.vertices().bits());
  for (std::size_t m = 1; m < size; ++m) {
    const int low = std::countr_zero(m);
    closure[m] = closure[m & (m - 1)] | static_cast<std::uint32_t>(g.closed_neighbors(low).bits());
    if (closure[m] != all) continue;
    flags_[m] = kDominating;
    if (connected_nonempty(g, VertexSet(m))) flags_[m] |= kCds;
  }
}

}  // namespace ccg
