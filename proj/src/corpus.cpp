#include "ccg/corpus.hpp"

#include <algorithm>
#include <functional>
#include <unordered_set>

#include "ccg/error.hpp"
#include "ccg/iso.hpp"

namespace ccg {

namespace {

// Every connected graph arises from a connected graph with one vertex fewer
// (drop a leaf of a spanning tree), so growing vertex by vertex from K1 and
// deduplicating by certificate reaches every class. `keep` may reject
// intermediate graphs that cannot lead to a wanted final graph.
std::vector<Graph> grow(int n, int max_degree, const std::function<bool(const Graph&, int)>& keep) {
  std::vector<Graph> level{Graph(1, {})};
  for (int m = 1; m < n; ++m) {
    std::unordered_set<Certificate, CertificateHash> seen;
    std::vector<std::pair<Certificate, Graph>> next;
    for (const Graph& g : level) {
      VertexSet open;
      for (int v = 0; v < m; ++v) {
        if (g.degree(v) < max_degree) open = open.with(v);
      }
      // Nonempty subsets of `open` with at most max_degree elements.
      const std::uint64_t mask = open.bits();
      std::uint64_t s = 0;
      while ((s = (s - mask) & mask) != 0) {
        if (std::popcount(s) > max_degree) continue;
        Graph h = g.with_vertex(VertexSet(s));
        if (!keep(h, n)) continue;
        Certificate c = certificate(h);
        if (seen.insert(c).second) next.emplace_back(std::move(c), canonical_form(h));
      }
    }
    std::sort(next.begin(), next.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    level.clear();
    for (auto& [c, g] : next) level.push_back(std::move(g));
  }
  return level;
}

}  // namespace

std::vector<Graph> enumerate_connected_graphs(int n, int max_degree) {
  if (n < 1 || n > 10) throw Error(Errc::out_of_range, "corpus order must be in 1..10");
  if (max_degree < 1 && n > 1) return {};
  if (max_degree > 3 && n > 8) {
    throw Error(Errc::out_of_range, "corpus with max degree > 3 is limited to order 8");
  }
  return grow(n, std::max(max_degree, 1), [](const Graph&, int) { return true; });
}

std::vector<Graph> enumerate_cubic_graphs(int n) {
  if (n < 4 || n > 12 || n % 2 != 0) throw Error(Errc::out_of_range, "cubic corpus needs even order in 4..12");
  // A connected prefix H (m vertices) of a cubic graph of order N sends
  // exactly D = sum(3 - deg) edges to the other N - m vertices, whose degree
  // sum 3(N - m) = D + 2 e(rest).
  auto keep = [](const Graph& h, int target) {
    const int m = h.order();
    int deficiency = 0;
    for (int v = 0; v < m; ++v) deficiency += 3 - h.degree(v);
    const int rest = target - m;
    if (rest == 0) return deficiency == 0;
    return deficiency >= 1 && deficiency <= 3 * rest && (deficiency - 3 * rest) % 2 == 0;
  };
  auto graphs = grow(n, 3, keep);
  std::erase_if(graphs, [](const Graph& g) { return !g.is_regular(3); });
  return graphs;
}

}  // namespace ccg
