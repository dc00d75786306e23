#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "ccg/graph.hpp"
#include "ccg/iso.hpp"

namespace ccg {

struct CatalogEntry {
  std::string name;  // normalised key, e.g. "K4-e", "S2,2", "K3,3"
  Graph graph;
  Certificate certificate;
};

// The 22 non-star coalition graphs of subcubic graphs, orders 1..6.
const std::vector<CatalogEntry>& coalition_catalog();
// Named graphs used as forbidden patterns: 2C3+e, K2uK3, K2uS4.
const std::vector<CatalogEntry>& auxiliary_catalog();

// Star of order k >= 2 by degree multiset. Named "K2", "P3", then "S<k>".
std::optional<int> star_order(const Graph& h);
std::string star_name(int k);

/// Catalog name of h: stars first (any order), then certificate lookup over
/// the coalition and auxiliary catalogs, else "unknown(<order>:<hex>)".
std::string classify(const Graph& h);

// True for stars S_k (k >= 2) and the 22 catalog graphs.
bool is_admissible_class(std::string_view name);

// Canonical spelling of a catalog or star name ("S_{2,2}" -> "S2,2",
// "S_2" -> "K2"). Throws Error(unknown_name) for graphs outside both.
std::string canonical_class_name(std::string_view name);

/// Versioned text format, one entry per line: name order edges cert-hex,
/// edges as "u-v" joined by ',' ("-" when empty).
void write_catalog(std::ostream& out, const std::vector<CatalogEntry>& entries);
std::vector<CatalogEntry> read_catalog(std::istream& in);

}  // namespace ccg
