#pragma once

#include <vector>

#include "ccg/graph.hpp"

namespace ccg {

/// One canonical representative per isomorphism class of connected graphs
/// of order n with maximum degree <= max_degree, sorted by certificate.
/// n <= 10 for max_degree <= 3, n <= 8 otherwise (Error(out_of_range)).
std::vector<Graph> enumerate_connected_graphs(int n, int max_degree);

/// Connected 3-regular graphs of even order n (4 <= n <= 12), sorted by
/// certificate.
std::vector<Graph> enumerate_cubic_graphs(int n);

}  // namespace ccg
