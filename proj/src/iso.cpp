#include "ccg/iso.hpp"

#include <algorithm>
#include <array>
#include <numeric>
#include <unordered_map>

#include "ccg/error.hpp"

namespace ccg {

namespace {

using Cells = std::vector<VertexSet>;

// Splits cells by neighbour counts into other cells until the ordered
// partition is equitable. Split pieces keep their place, ordered by count.
void refine(const Graph& g, Cells& cells) {
  std::array<int, kMaxVertices> count{};
  for (;;) {
    bool split = false;
    for (std::size_t s = 0; s < cells.size() && !split; ++s) {
      const VertexSet splitter = cells[s];
      for (std::size_t c = 0; c < cells.size(); ++c) {
        const VertexSet cell = cells[c];
        if (cell.size() == 1) continue;
        int lo = kMaxVertices + 1;
        int hi = -1;
        for (int v : cell) {
          count[v] = (g.neighbors(v) & splitter).size();
          lo = std::min(lo, count[v]);
          hi = std::max(hi, count[v]);
        }
        if (lo == hi) continue;
        Cells pieces;
        for (int k = lo; k <= hi; ++k) {
          VertexSet piece;
          for (int v : cell) {
            if (count[v] == k) piece = piece.with(v);
          }
          if (!piece.empty()) pieces.push_back(piece);
        }
        cells.erase(cells.begin() + static_cast<std::ptrdiff_t>(c));
        cells.insert(cells.begin() + static_cast<std::ptrdiff_t>(c), pieces.begin(), pieces.end());
        split = true;
        break;
      }
    }
    if (!split) return;
  }
}

std::size_t word_count(int n) {
  const std::size_t bits = static_cast<std::size_t>(n) * (n - 1) / 2;
  return (bits + 63) / 64;
}

std::vector<std::uint64_t> triangle_bits(const Graph& g, std::span<const int> order) {
  const int n = g.order();
  std::vector<std::uint64_t> words(word_count(n), 0);
  std::size_t k = 0;
  for (int q = 1; q < n; ++q) {
    const VertexSet row = g.neighbors(order[q]);
    for (int p = 0; p < q; ++p, ++k) {
      if (row.contains(order[p])) words[k / 64] |= std::uint64_t{1} << (63 - k % 64);
    }
  }
  return words;
}

class DisjointSets {
 public:
  explicit DisjointSets(int n) : parent_(static_cast<std::size_t>(n)) {
    std::iota(parent_.begin(), parent_.end(), 0);
  }
  int find(int x) {
    while (parent_[x] != x) x = parent_[x] = parent_[parent_[x]];
    return x;
  }
  void unite(int a, int b) { parent_[find(a)] = find(b); }

 private:
  std::vector<int> parent_;
};

// Individualisation-refinement search over ordered partitions. Every leaf is
// a labelling; the canonical one has the smallest adjacency string. Leaves
// that reproduce the current best yield automorphisms, which prune children
// lying in one orbit of the pointwise stabiliser of the current path.
class CanonicalSearch {
 public:
  explicit CanonicalSearch(const Graph& g) : g_(g) {}

  std::vector<int> run() {
    Cells cells{g_.vertices()};
    refine(g_, cells);
    std::vector<int> path;
    visit(std::move(cells), path);
    return best_order_;
  }

 private:
  void visit(Cells cells, std::vector<int>& path) {
    auto target = std::find_if(cells.begin(), cells.end(), [](VertexSet c) { return c.size() > 1; });
    if (target == cells.end()) {
      leaf(cells);
      return;
    }
    const std::size_t at = static_cast<std::size_t>(target - cells.begin());
    const VertexSet cell = *target;
    std::vector<int> explored;
    for (int v : cell) {
      if (!explored.empty() && equivalent_to_explored(v, explored, path)) continue;
      Cells child = cells;
      child[at] = cell.without(v);
      child.insert(child.begin() + static_cast<std::ptrdiff_t>(at), VertexSet::single(v));
      refine(g_, child);
      path.push_back(v);
      visit(std::move(child), path);
      path.pop_back();
      explored.push_back(v);
    }
  }

  void leaf(const Cells& cells) {
    std::vector<int> order;
    order.reserve(cells.size());
    for (VertexSet c : cells) order.push_back(c.lowest());
    auto bits = triangle_bits(g_, order);
    if (best_order_.empty() || bits < best_bits_) {
      best_bits_ = std::move(bits);
      best_order_ = std::move(order);
    } else if (bits == best_bits_) {
      std::vector<int> gamma(order.size());
      bool identity = true;
      for (std::size_t p = 0; p < order.size(); ++p) {
        gamma[best_order_[p]] = order[p];
        identity = identity && best_order_[p] == order[p];
      }
      if (!identity) automorphisms_.push_back(std::move(gamma));
    }
  }

  bool equivalent_to_explored(int v, const std::vector<int>& explored, const std::vector<int>& path) const {
    DisjointSets orbits(g_.order());
    for (const auto& gamma : automorphisms_) {
      const bool fixes_path = std::all_of(path.begin(), path.end(), [&](int w) { return gamma[w] == w; });
      if (!fixes_path) continue;
      for (int x = 0; x < g_.order(); ++x) orbits.unite(x, gamma[x]);
    }
    const int root = orbits.find(v);
    return std::any_of(explored.begin(), explored.end(), [&](int u) { return orbits.find(u) == root; });
  }

  const Graph& g_;
  std::vector<std::uint64_t> best_bits_;
  std::vector<int> best_order_;
  std::vector<std::vector<int>> automorphisms_;
};

}  // namespace

std::string Certificate::to_hex() const {
  static constexpr char digits[] = "0123456789abcdef";
  const std::size_t bits = static_cast<std::size_t>(order) * (order - 1) / 2;
  const std::size_t nibbles = (bits + 3) / 4;
  std::string out;
  out.reserve(nibbles);
  for (std::size_t i = 0; i < nibbles; ++i) {
    const std::uint64_t w = words[i / 16];
    out += digits[(w >> (60 - 4 * (i % 16))) & 0xF];
  }
  return out;
}

Certificate Certificate::from_hex(int order, std::string_view hex) {
  Certificate c{order, std::vector<std::uint64_t>(word_count(order), 0)};
  const std::size_t bits = static_cast<std::size_t>(order) * (order - 1) / 2;
  if (hex.size() != (bits + 3) / 4) throw Error(Errc::malformed_input, "certificate hex has wrong length");
  for (std::size_t i = 0; i < hex.size(); ++i) {
    const char ch = hex[i];
    int d = 0;
    if (ch >= '0' && ch <= '9') d = ch - '0';
    else if (ch >= 'a' && ch <= 'f') d = ch - 'a' + 10;
    else throw Error(Errc::malformed_input, "bad certificate hex digit");
    c.words[i / 16] |= static_cast<std::uint64_t>(d) << (60 - 4 * (i % 16));
  }
  return c;
}

std::size_t CertificateHash::operator()(const Certificate& c) const noexcept {
  std::size_t h = static_cast<std::size_t>(c.order) * 0x9E3779B97F4A7C15ULL;
  for (std::uint64_t w : c.words) h = (h ^ w) * 0x100000001B3ULL + (h >> 29);
  return h;
}

std::vector<int> canonical_labeling(const Graph& g) {
  const std::vector<int> order = CanonicalSearch(g).run();
  std::vector<int> position(order.size());
  for (std::size_t p = 0; p < order.size(); ++p) position[order[p]] = static_cast<int>(p);
  return position;
}

Graph canonical_form(const Graph& g) { return g.relabeled(canonical_labeling(g)); }

Certificate certificate(const Graph& g) {
  const std::vector<int> order = CanonicalSearch(g).run();
  return Certificate{g.order(), triangle_bits(g, order)};
}

bool are_isomorphic(const Graph& a, const Graph& b) {
  if (a.order() != b.order() || a.edge_count() != b.edge_count()) return false;
  if (a.degree_sequence() != b.degree_sequence()) return false;
  return certificate(a) == certificate(b);
}

namespace {

class SubgraphMatcher {
 public:
  SubgraphMatcher(const Graph& host, const Graph& pattern) : host_(host), pattern_(pattern) {
    // Place vertices with many already-placed neighbours first.
    VertexSet placed;
    const int m = pattern.order();
    for (int step = 0; step < m; ++step) {
      int pick = -1;
      std::pair<int, int> key{-1, -1};
      for (int v : pattern.vertices() - placed) {
        std::pair<int, int> k{(pattern.neighbors(v) & placed).size(), pattern.degree(v)};
        if (k > key) {
          key = k;
          pick = v;
        }
      }
      order_.push_back(pick);
      placed = placed.with(pick);
    }
    image_.assign(static_cast<std::size_t>(m), -1);
  }

  bool run() { return extend(0, VertexSet{}); }

 private:
  bool extend(std::size_t depth, VertexSet used) {
    if (depth == order_.size()) return true;
    const int p = order_[depth];
    VertexSet candidates = host_.vertices() - used;
    for (int q : pattern_.neighbors(p)) {
      if (image_[q] >= 0) candidates &= host_.neighbors(image_[q]);
    }
    for (int h : candidates) {
      if (host_.degree(h) < pattern_.degree(p)) continue;
      image_[p] = h;
      if (extend(depth + 1, used.with(h))) return true;
    }
    image_[p] = -1;
    return false;
  }

  const Graph& host_;
  const Graph& pattern_;
  std::vector<int> order_;
  std::vector<int> image_;
};

int max_matching(const Graph& h, VertexSet live, std::unordered_map<std::uint64_t, int>& memo) {
  // Drop vertices with no live neighbour.
  VertexSet active;
  for (int v : live) {
    if ((h.neighbors(v) & live).size() > 0) active = active.with(v);
  }
  if (active.size() < 2) return 0;
  if (auto it = memo.find(active.bits()); it != memo.end()) return it->second;
  const int v = active.lowest();
  int best = max_matching(h, active.without(v), memo);
  for (int u : h.neighbors(v) & active) {
    best = std::max(best, 1 + max_matching(h, active.without(v).without(u), memo));
  }
  memo.emplace(active.bits(), best);
  return best;
}

}  // namespace

bool contains_subgraph(const Graph& host, const Graph& pattern) {
  if (pattern.order() > host.order() || pattern.edge_count() > host.edge_count()) return false;
  return SubgraphMatcher(host, pattern).run();
}

int matching_number(const Graph& h) {
  std::unordered_map<std::uint64_t, int> memo;
  return max_matching(h, h.vertices(), memo);
}

}  // namespace ccg
