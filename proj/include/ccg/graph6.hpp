#pragma once

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "ccg/graph.hpp"

namespace ccg {

// Standard graph6: N(n) header, then the upper triangle by columns
// (x(0,1), x(0,2), x(1,2), x(0,3), ...) packed into 6-bit groups + 63.
std::string graph6_encode(const Graph& g);
// Throws Error(malformed_input). An optional ">>graph6<<" header is accepted.
Graph graph6_decode(std::string_view text);

// One graph per non-blank line.
std::vector<Graph> read_graph6_lines(std::istream& in);

}  // namespace ccg
