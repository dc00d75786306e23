#include "ccg/graph.hpp"

#include <algorithm>
#include <istream>
#include <ostream>
#include <sstream>

#include "ccg/error.hpp"

namespace ccg {

namespace {

void check_order(int n) {
  if (n < 1 || n > kMaxVertices) {
    throw Error(Errc::out_of_range, "order " + std::to_string(n) + " outside 1..64");
  }
}

}  // namespace

Graph::Graph(int n, std::span<const Edge> edges) {
  check_order(n);
  adj_.assign(static_cast<std::size_t>(n), VertexSet{});
  for (const Edge& e : edges) {
    if (e.u < 0 || e.v < 0 || e.u >= n || e.v >= n) {
      throw Error(Errc::out_of_range, "edge (" + std::to_string(e.u) + "," + std::to_string(e.v) +
                                          ") outside a graph of order " + std::to_string(n));
    }
    if (e.u == e.v) throw Error(Errc::self_loop, "loop at vertex " + std::to_string(e.u));
    adj_[e.u] = adj_[e.u].with(e.v);
    adj_[e.v] = adj_[e.v].with(e.u);
  }
}

Graph Graph::from_neighborhoods(std::vector<VertexSet> adjacency) {
  const int n = static_cast<int>(adjacency.size());
  check_order(n);
  const VertexSet all = VertexSet::first(n);
  for (int v = 0; v < n; ++v) {
    if (!adjacency[v].is_subset_of(all)) throw Error(Errc::out_of_range, "neighbour index >= n");
    if (adjacency[v].contains(v)) throw Error(Errc::self_loop, "loop at vertex " + std::to_string(v));
    for (int u : adjacency[v]) {
      if (!adjacency[u].contains(v)) {
        throw Error(Errc::malformed_input, "asymmetric adjacency between " + std::to_string(u) +
                                               " and " + std::to_string(v));
      }
    }
  }
  return Graph(std::move(adjacency));
}

Graph make_graph(int n, std::span<const Edge> edges) { return Graph(n, edges); }

int Graph::max_degree() const {
  int d = 0;
  for (VertexSet s : adj_) d = std::max(d, s.size());
  return d;
}

int Graph::min_degree() const {
  int d = order();
  for (VertexSet s : adj_) d = std::min(d, s.size());
  return d;
}

int Graph::edge_count() const {
  int twice = 0;
  for (VertexSet s : adj_) twice += s.size();
  return twice / 2;
}

bool Graph::is_regular(int d) const {
  return std::all_of(adj_.begin(), adj_.end(), [d](VertexSet s) { return s.size() == d; });
}

bool Graph::is_connected() const {
  VertexSet reached = VertexSet::single(0);
  VertexSet frontier = reached;
  while (!frontier.empty()) {
    VertexSet next;
    for (int v : frontier) next |= adj_[v];
    frontier = next - reached;
    reached |= next;
  }
  return reached == vertices();
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  for (int u = 0; u < order(); ++u) {
    for (int v : adj_[u]) {
      if (u < v) out.push_back({u, v});
    }
  }
  return out;
}

std::vector<int> Graph::degree_sequence() const {
  std::vector<int> d;
  d.reserve(adj_.size());
  for (VertexSet s : adj_) d.push_back(s.size());
  std::sort(d.begin(), d.end(), std::greater<>());
  return d;
}

Graph Graph::relabeled(std::span<const int> perm) const {
  std::vector<VertexSet> adj(adj_.size());
  for (int v = 0; v < order(); ++v) {
    VertexSet row;
    for (int u : adj_[v]) row = row.with(perm[u]);
    adj[perm[v]] = row;
  }
  return Graph(std::move(adj));
}

Graph Graph::induced(VertexSet s) const {
  std::vector<int> index(adj_.size(), -1);
  int next = 0;
  for (int v : s) index[v] = next++;
  std::vector<VertexSet> adj(static_cast<std::size_t>(next));
  for (int v : s) {
    VertexSet row;
    for (int u : adj_[v] & s) row = row.with(index[u]);
    adj[index[v]] = row;
  }
  check_order(next);
  return Graph(std::move(adj));
}

Graph Graph::with_vertex(VertexSet neighbors) const {
  const int n = order();
  check_order(n + 1);
  if (!neighbors.is_subset_of(vertices())) throw Error(Errc::out_of_range, "neighbour index >= n");
  std::vector<VertexSet> adj = adj_;
  for (int u : neighbors) adj[u] = adj[u].with(n);
  adj.push_back(neighbors);
  return Graph(std::move(adj));
}

Graph Graph::without_vertex(int v) const { return induced(vertices().without(v)); }

Graph Graph::subdivided(Edge e) const {
  if (e.u < 0 || e.v < 0 || e.u >= order() || e.v >= order() || !has_edge(e.u, e.v)) {
    throw Error(Errc::out_of_range, "subdivided edge is not an edge of the graph");
  }
  std::vector<VertexSet> adj = adj_;
  const int w = order();
  check_order(w + 1);
  adj[e.u] = adj[e.u].without(e.v).with(w);
  adj[e.v] = adj[e.v].without(e.u).with(w);
  adj.push_back(VertexSet::single(e.u).with(e.v));
  return Graph(std::move(adj));
}

Graph read_edge_list(std::istream& in) {
  std::vector<Edge> edges;
  int declared = -1;
  int max_index = -1;
  std::string line;
  bool first = true;
  while (std::getline(in, line)) {
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.resize(hash);
    std::istringstream fields(line);
    std::vector<long> values;
    long x = 0;
    while (fields >> x) values.push_back(x);
    if (!fields.eof()) throw Error(Errc::malformed_input, "non-numeric token in edge list: " + line);
    if (values.empty()) continue;
    if (first && values.size() == 1) {
      declared = static_cast<int>(values[0]);
      first = false;
      continue;
    }
    first = false;
    if (values.size() != 2) throw Error(Errc::malformed_input, "expected \"u v\": " + line);
    if (values[0] < 0 || values[1] < 0 || values[0] >= kMaxVertices || values[1] >= kMaxVertices) {
      throw Error(Errc::out_of_range, "vertex index outside 0..63: " + line);
    }
    Edge e{static_cast<int>(values[0]), static_cast<int>(values[1])};
    max_index = std::max({max_index, e.u, e.v});
    edges.push_back(e);
  }
  const int n = declared >= 0 ? declared : max_index + 1;
  if (n < 1) throw Error(Errc::malformed_input, "empty edge list");
  return Graph(n, edges);
}

void write_edge_list(std::ostream& out, const Graph& g) {
  out << g.order() << '\n';
  for (const Edge& e : g.edges()) out << e.u << ' ' << e.v << '\n';
}

}  // namespace ccg
