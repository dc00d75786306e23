#pragma once

#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "ccg/vertex_set.hpp"

namespace ccg {

struct Edge {
  int u = 0;
  int v = 0;
  bool operator==(const Edge&) const = default;
};

/// Immutable simple undirected graph on 1..64 vertices. Row v of the
/// adjacency holds the open neighbourhood N(v).
class Graph {
 public:
  Graph(int n, std::span<const Edge> edges);
  Graph(int n, std::initializer_list<Edge> edges)
      : Graph(n, std::span<const Edge>(edges.begin(), edges.size())) {}

  // Validates symmetry, loops and range.
  static Graph from_neighborhoods(std::vector<VertexSet> adjacency);

  int order() const { return static_cast<int>(adj_.size()); }
  VertexSet vertices() const { return VertexSet::first(order()); }
  VertexSet neighbors(int v) const { return adj_[v]; }
  VertexSet closed_neighbors(int v) const { return adj_[v].with(v); }
  bool has_edge(int u, int v) const { return adj_[u].contains(v); }
  int degree(int v) const { return adj_[v].size(); }
  int max_degree() const;
  int min_degree() const;
  int edge_count() const;
  bool is_regular(int d) const;
  bool is_complete() const { return edge_count() * 2 == order() * (order() - 1); }
  bool is_connected() const;
  // Edges (u < v) in lexicographic order.
  std::vector<Edge> edges() const;
  std::vector<int> degree_sequence() const;  // non-increasing

  // Vertex v of this graph becomes vertex perm[v] of the result.
  Graph relabeled(std::span<const int> perm) const;
  // Induced subgraph on s, vertices renumbered in increasing order.
  Graph induced(VertexSet s) const;
  // Adds vertex n adjacent to `neighbors`.
  Graph with_vertex(VertexSet neighbors) const;
  Graph without_vertex(int v) const;
  // Replaces edge (u,v) by a path u - w - v through a new vertex w.
  Graph subdivided(Edge e) const;

  std::span<const VertexSet> adjacency() const { return adj_; }

  bool operator==(const Graph&) const = default;

 private:
  explicit Graph(std::vector<VertexSet> adj) : adj_(std::move(adj)) {}

  std::vector<VertexSet> adj_;
};

Graph make_graph(int n, std::span<const Edge> edges);

/// Edge-list text: one "u v" pair per line, 0-based. An optional first line
/// holding a single integer fixes the order; otherwise n = max index + 1.
Graph read_edge_list(std::istream& in);
void write_edge_list(std::ostream& out, const Graph& g);

}  // namespace ccg
