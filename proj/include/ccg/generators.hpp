#pragma once

#include <string>
#include <string_view>

#include "ccg/graph.hpp"

namespace ccg {

// Even cycle 0..n-1 plus the chords (i, i + n/2). Requires even n in 6..64.
Graph mobius_ladder(int n);
// Cycles 0..n/2-1 and n/2..n-1 joined by the rungs (i, i + n/2).
Graph prism(int n);

Graph complete_graph(int n);
Graph empty_graph(int n);
Graph path_graph(int n);
Graph cycle_graph(int n);
// Star of order n: centre 0, leaves 1..n-1.
Graph star_graph(int n);
Graph complete_bipartite(int p, int q);
// Adjacent centres 0 and 1 carrying p and q leaves respectively.
Graph double_star(int p, int q);

/// Normalised catalog key: drops '_', '{', '}', blanks; "∪" becomes "u" and
/// "K̄" / "co-K" become "Kbar". "S_{2,2}" -> "S2,2", "K_{3,3}" -> "K3,3".
std::string normalize_name(std::string_view name);

/// Fixed labelled representative of a named graph. Families: K<k>, Kbar<k>,
/// P<k>, C<k>, S<k>, K<p>,<q>, S<p>,<q>, M<n>, Pr<n>; specials: C3+e, C3+2e,
/// C3+e+e, C4+e, K4-e, 2K2, 3K2, P2uP3, 2C3+e, K2uK3, K2uS4.
/// Throws Error(unknown_name).
Graph named_graph(std::string_view name);

}  // namespace ccg
