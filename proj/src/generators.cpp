#include "ccg/generators.hpp"

#include <charconv>
#include <map>
#include <optional>
#include <vector>

#include "ccg/error.hpp"

namespace ccg {

namespace {

void check_ladder_order(int n, const char* what) {
  if (n < 6 || n > kMaxVertices || n % 2 != 0) {
    throw Error(Errc::bad_order, std::string(what) + " needs an even order in 6..64, got " +
                                     std::to_string(n));
  }
}

void check_positive(int n, int lo) {
  if (n < lo || n > kMaxVertices) {
    throw Error(Errc::bad_order, "order " + std::to_string(n) + " outside " + std::to_string(lo) + "..64");
  }
}

std::optional<int> parse_int(std::string_view s) {
  if (s.empty()) return std::nullopt;
  int value = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (ec != std::errc{} || ptr != s.data() + s.size()) return std::nullopt;
  return value;
}

// "p,q" -> (p, q)
std::optional<std::pair<int, int>> parse_pair(std::string_view s) {
  const auto comma = s.find(',');
  if (comma == std::string_view::npos) return std::nullopt;
  auto p = parse_int(s.substr(0, comma));
  auto q = parse_int(s.substr(comma + 1));
  if (!p || !q) return std::nullopt;
  return std::make_pair(*p, *q);
}

const std::map<std::string, std::vector<Edge>, std::less<>>& special_graphs() {
  static const std::map<std::string, std::vector<Edge>, std::less<>> table = {
      {"C3+e", {{0, 1}, {0, 2}, {1, 2}, {0, 3}}},
      {"C3+2e", {{0, 1}, {0, 2}, {1, 2}, {0, 3}, {0, 4}}},
      {"C3+e+e", {{0, 1}, {0, 2}, {1, 2}, {0, 3}, {1, 4}}},
      {"C4+e", {{0, 1}, {1, 2}, {2, 3}, {3, 0}, {0, 4}}},
      {"K4-e", {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}}},
      {"2K2", {{0, 1}, {2, 3}}},
      {"3K2", {{0, 1}, {2, 3}, {4, 5}}},
      {"P2uP3", {{0, 1}, {2, 3}, {3, 4}}},
      // K4-e with its degree-3 vertex 0 glued to an end of K2.
      {"2C3+e", {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {0, 4}}},
      {"K2uK3", {{0, 1}, {2, 3}, {3, 4}, {2, 4}}},
      {"K2uS4", {{0, 1}, {2, 3}, {2, 4}, {2, 5}}},
  };
  return table;
}

int order_of(const std::vector<Edge>& edges) {
  int n = 0;
  for (const Edge& e : edges) n = std::max({n, e.u + 1, e.v + 1});
  return n;
}

}  // namespace

Graph mobius_ladder(int n) {
  check_ladder_order(n, "mobius_ladder");
  std::vector<Edge> edges;
  for (int i = 0; i < n; ++i) edges.push_back({i, (i + 1) % n});
  for (int i = 0; i < n / 2; ++i) edges.push_back({i, i + n / 2});
  return Graph(n, edges);
}

Graph prism(int n) {
  check_ladder_order(n, "prism");
  const int h = n / 2;
  std::vector<Edge> edges;
  for (int i = 0; i < h; ++i) {
    edges.push_back({i, (i + 1) % h});
    edges.push_back({h + i, h + (i + 1) % h});
    edges.push_back({i, i + h});
  }
  return Graph(n, edges);
}

Graph complete_graph(int n) {
  check_positive(n, 1);
  std::vector<Edge> edges;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) edges.push_back({u, v});
  return Graph(n, edges);
}

Graph empty_graph(int n) {
  check_positive(n, 1);
  return Graph(n, std::span<const Edge>{});
}

Graph path_graph(int n) {
  check_positive(n, 1);
  std::vector<Edge> edges;
  for (int i = 0; i + 1 < n; ++i) edges.push_back({i, i + 1});
  return Graph(n, edges);
}

Graph cycle_graph(int n) {
  check_positive(n, 3);
  std::vector<Edge> edges;
  for (int i = 0; i < n; ++i) edges.push_back({i, (i + 1) % n});
  return Graph(n, edges);
}

Graph star_graph(int n) {
  check_positive(n, 1);
  std::vector<Edge> edges;
  for (int i = 1; i < n; ++i) edges.push_back({0, i});
  return Graph(n, edges);
}

Graph complete_bipartite(int p, int q) {
  if (p < 1 || q < 1 || p + q > kMaxVertices) throw Error(Errc::bad_order, "K_{p,q} needs p,q >= 1, p+q <= 64");
  std::vector<Edge> edges;
  for (int u = 0; u < p; ++u)
    for (int v = p; v < p + q; ++v) edges.push_back({u, v});
  return Graph(p + q, edges);
}

Graph double_star(int p, int q) {
  if (p < 1 || q < 1 || p + q + 2 > kMaxVertices) throw Error(Errc::bad_order, "S_{p,q} needs p,q >= 1");
  std::vector<Edge> edges{{0, 1}};
  int next = 2;
  for (int i = 0; i < p; ++i) edges.push_back({0, next++});
  for (int i = 0; i < q; ++i) edges.push_back({1, next++});
  return Graph(next, edges);
}

std::string normalize_name(std::string_view name) {
  std::string out;
  for (std::size_t i = 0; i < name.size(); ++i) {
    const char c = name[i];
    if (c == '_' || c == '{' || c == '}' || c == ' ' || c == '\t') continue;
    // U+222A (∪) is E2 88 AA in UTF-8.
    if (name.substr(i, 3) == "\xE2\x88\xAA") {
      out += 'u';
      i += 2;
      continue;
    }
    // U+0304 combining macron (CC 84) after K.
    if (name.substr(i, 2) == "\xCC\x84") {
      if (!out.empty() && out.back() == 'K') out += "bar";
      i += 1;
      continue;
    }
    out += c;
  }
  if (out.rfind("co-K", 0) == 0) out = "Kbar" + out.substr(4);
  if (out.rfind("\\overlineK", 0) == 0) out = "Kbar" + out.substr(10);
  return out;
}

Graph named_graph(std::string_view raw) {
  const std::string name = normalize_name(raw);
  if (auto it = special_graphs().find(name); it != special_graphs().end()) {
    return Graph(order_of(it->second), it->second);
  }
  auto unknown = [&]() { return Error(Errc::unknown_name, "no catalog graph named '" + std::string(raw) + "'"); };
  auto family = [&](std::string_view prefix) -> std::optional<std::string_view> {
    if (name.size() > prefix.size() && std::string_view(name).substr(0, prefix.size()) == prefix) {
      return std::string_view(name).substr(prefix.size());
    }
    return std::nullopt;
  };
  try {
    if (auto rest = family("Kbar")) {
      if (auto k = parse_int(*rest)) return empty_graph(*k);
      throw unknown();
    }
    if (auto rest = family("Pr")) {
      if (auto k = parse_int(*rest)) return prism(*k);
      throw unknown();
    }
    for (char head : {'K', 'P', 'C', 'S', 'M'}) {
      auto rest = family(std::string(1, head));
      if (!rest) continue;
      if (auto pq = parse_pair(*rest)) {
        if (head == 'K') return complete_bipartite(pq->first, pq->second);
        if (head == 'S') return double_star(pq->first, pq->second);
        throw unknown();
      }
      auto k = parse_int(*rest);
      if (!k) throw unknown();
      switch (head) {
        case 'K': return complete_graph(*k);
        case 'P': return path_graph(*k);
        case 'C': return cycle_graph(*k);
        case 'S': return star_graph(*k);
        case 'M': return mobius_ladder(*k);
      }
    }
  } catch (const Error& e) {
    if (e.code() == Errc::unknown_name) throw;
    throw Error(Errc::unknown_name, std::string(raw) + " (" + e.what() + ")");
  }
  throw unknown();
}

}  // namespace ccg
