#pragma once

// Slow, independent reference implementations. They share nothing with the
// library except the Graph edge list they are fed.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <numeric>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "ccg/graph.hpp"

namespace oracle {

using Matrix = std::vector<std::vector<bool>>;
using Block = std::vector<int>;
using SetPartition = std::vector<Block>;  // blocks sorted, ordered by first vertex

inline Matrix matrix_of(const ccg::Graph& g) {
  Matrix m(g.order(), std::vector<bool>(g.order(), false));
  for (const auto& e : g.edges()) m[e.u][e.v] = m[e.v][e.u] = true;
  return m;
}

inline Matrix matrix_from_edges(int n, const std::vector<std::pair<int, int>>& edges) {
  Matrix m(n, std::vector<bool>(n, false));
  for (auto [u, v] : edges) m[u][v] = m[v][u] = true;
  return m;
}

inline bool dominates(const Matrix& m, const Block& s) {
  if (s.empty()) return false;
  const int n = static_cast<int>(m.size());
  for (int v = 0; v < n; ++v) {
    bool hit = false;
    for (int u : s) hit = hit || u == v || m[u][v];
    if (!hit) return false;
  }
  return true;
}

inline bool connected_within(const Matrix& m, const Block& s) {
  if (s.empty()) return false;
  std::vector<int> stack{s.front()};
  std::set<int> seen{s.front()};
  while (!stack.empty()) {
    const int v = stack.back();
    stack.pop_back();
    for (int u : s) {
      if (m[v][u] && seen.insert(u).second) stack.push_back(u);
    }
  }
  return seen.size() == s.size();
}

inline bool is_cds(const Matrix& m, const Block& s) { return dominates(m, s) && connected_within(m, s); }

inline Block merged(const Block& a, const Block& b) {
  Block out = a;
  out.insert(out.end(), b.begin(), b.end());
  std::sort(out.begin(), out.end());
  return out;
}

inline bool coalition(const Matrix& m, const Block& a, const Block& b) {
  return !is_cds(m, a) && !is_cds(m, b) && is_cds(m, merged(a, b));
}

// Every set partition of {0..n-1} via restricted growth strings.
inline void for_each_set_partition(int n, const std::function<void(const SetPartition&)>& visit) {
  std::vector<int> label(n, 0);
  std::function<void(int, int)> rec = [&](int v, int blocks) {
    if (v == n) {
      SetPartition p(blocks);
      for (int u = 0; u < n; ++u) p[label[u]].push_back(u);
      visit(p);
      return;
    }
    for (int b = 0; b <= blocks; ++b) {
      label[v] = b;
      rec(v + 1, std::max(blocks, b + 1));
    }
  };
  if (n > 0) rec(0, 0);
}

inline bool valid_partition(const Matrix& m, const SetPartition& p) {
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (is_cds(m, p[i]) && p[i].size() == 1) continue;
    bool partnered = false;
    for (std::size_t j = 0; j < p.size() && !partnered; ++j) partnered = j != i && coalition(m, p[i], p[j]);
    if (!partnered) return false;
  }
  return true;
}

inline std::vector<SetPartition> valid_partitions(const Matrix& m) {
  std::vector<SetPartition> out;
  for_each_set_partition(static_cast<int>(m.size()), [&](const SetPartition& p) {
    if (valid_partition(m, p)) out.push_back(p);
  });
  return out;
}

// Coalition graph of a valid partition, as an edge list on block indices.
inline Matrix coalition_graph(const Matrix& m, const SetPartition& p) {
  Matrix h(p.size(), std::vector<bool>(p.size(), false));
  for (std::size_t i = 0; i < p.size(); ++i) {
    for (std::size_t j = i + 1; j < p.size(); ++j) h[i][j] = h[j][i] = coalition(m, p[i], p[j]);
  }
  return h;
}

// Smallest adjacency string over all n! labellings.
inline std::string brute_canonical(const Matrix& m) {
  const int n = static_cast<int>(m.size());
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::string best;
  do {
    std::string s;
    for (int i = 0; i < n; ++i) {
      for (int j = i + 1; j < n; ++j) s += m[perm[i]][perm[j]] ? '1' : '0';
    }
    if (best.empty() || s < best) best = s;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return std::to_string(n) + ":" + best;
}

inline bool brute_isomorphic(const Matrix& a, const Matrix& b) {
  return a.size() == b.size() && brute_canonical(a) == brute_canonical(b);
}

inline int brute_matching(const Matrix& m) {
  const int n = static_cast<int>(m.size());
  std::function<int(int, std::vector<bool>&)> rec = [&](int v, std::vector<bool>& used) -> int {
    while (v < n && used[v]) ++v;
    if (v >= n) return 0;
    used[v] = true;
    int best = rec(v + 1, used);
    for (int u = v + 1; u < n; ++u) {
      if (!used[u] && m[v][u]) {
        used[u] = true;
        best = std::max(best, 1 + rec(v + 1, used));
        used[u] = false;
      }
    }
    used[v] = false;
    return best;
  };
  std::vector<bool> used(n, false);
  return rec(0, used);
}

inline bool connected(const Matrix& m) {
  Block all(m.size());
  std::iota(all.begin(), all.end(), 0);
  return connected_within(m, all);
}

inline int max_degree(const Matrix& m) {
  int d = 0;
  for (const auto& row : m) d = std::max(d, static_cast<int>(std::count(row.begin(), row.end(), true)));
  return d;
}

// Isomorphism classes of connected graphs with max degree <= d on n <= 6
// vertices, by scanning every labelled graph.
inline std::set<std::string> brute_connected_classes(int n, int d) {
  std::vector<std::pair<int, int>> slots;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) slots.emplace_back(i, j);
  }
  std::set<std::string> classes;
  for (std::uint32_t mask = 0; mask < (1u << slots.size()); ++mask) {
    std::vector<std::pair<int, int>> edges;
    for (std::size_t b = 0; b < slots.size(); ++b) {
      if (mask >> b & 1u) edges.push_back(slots[b]);
    }
    const Matrix m = matrix_from_edges(n, edges);
    if (max_degree(m) <= d && connected(m)) classes.insert(brute_canonical(m));
  }
  return classes;
}

// Girth by BFS from every vertex; 0 for forests.
inline int girth(const Matrix& m) {
  const int n = static_cast<int>(m.size());
  int best = 0;
  for (int s = 0; s < n; ++s) {
    std::vector<int> dist(n, -1), parent(n, -1);
    std::vector<int> queue{s};
    dist[s] = 0;
    for (std::size_t q = 0; q < queue.size(); ++q) {
      const int v = queue[q];
      for (int u = 0; u < n; ++u) {
        if (!m[v][u]) continue;
        if (dist[u] < 0) {
          dist[u] = dist[v] + 1;
          parent[u] = v;
          queue.push_back(u);
        } else if (parent[v] != u) {
          const int len = dist[u] + dist[v] + 1;
          if (best == 0 || len < best) best = len;
        }
      }
    }
  }
  return best;
}

}  // namespace oracle
