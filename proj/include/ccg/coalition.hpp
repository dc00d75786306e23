#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "ccg/graph.hpp"

namespace ccg {

/// Vertex partition with parts in canonical order (sorted by smallest vertex).
struct Partition {
  std::vector<VertexSet> parts;

  int size() const { return static_cast<int>(parts.size()); }
  bool operator==(const Partition&) const = default;
  auto operator<=>(const Partition&) const = default;
};

// Sorts parts by their smallest vertex.
Partition canonical_partition(std::vector<VertexSet> parts);
// True iff the parts are nonempty, disjoint and cover V(g).
bool is_partition_of(const Graph& g, const Partition& p);

// "0,3|1,2|4"
std::string format_partition(const Partition& p);
// Throws Error(not_a_partition) on syntax errors, empty or overlapping parts.
Partition parse_partition(std::string_view text);

struct CoalitionGraph {
  Graph graph;                  // vertex i <-> part i
  std::vector<int> part_sizes;  // sums to n
};

/// Neither a nor b is a CDS, a | b is. Throws Error(empty_set) or
/// Error(overlap).
bool is_coalition(const Graph& g, VertexSet a, VertexSet b);

/// Every part is a singleton CDS or has a coalition partner among the other
/// parts. Throws Error(not_a_partition) if p does not partition V(g).
bool validate_partition(const Graph& g, const Partition& p);

// Throws Error(invalid_partition) unless validate_partition holds.
CoalitionGraph build_ccg(const Graph& g, const Partition& p);

enum class Mode { exact, bounded };

struct EnumerationOptions {
  Mode mode = Mode::exact;
  // Largest order accepted without long_running.
  int exact_cap = 14;
  // Bounded mode only: lifts the order limit to kLongRunningCap.
  bool long_running = false;
  int workers = 1;
  // Only partitions with min_parts <= k <= max_parts (0 = no limit).
  int min_parts = 0;
  int max_parts = 0;

  static constexpr int kLongRunningCap = 18;
};

// max{6, floor((n + 7) / 3)}
int part_count_bound(int n);

/// A valid partition handed to visitors. coalitions[i] is the set of part
/// indices forming a coalition with part i.
struct PartitionView {
  std::span<const VertexSet> parts;
  std::span<const VertexSet> coalitions;

  int size() const { return static_cast<int>(parts.size()); }
  Partition partition() const;
  Graph ccg() const;
};

// Return false to stop the walk.
using PartitionVisitor = std::function<bool(const PartitionView&)>;

/// Walks the valid connected coalition partitions of g in canonical order on
/// the calling thread. Parts are generated whole: the part holding the
/// smallest unassigned vertex is chosen next, so every chosen part is final.
/// A branch is cut when a chosen part is a CDS with two or more vertices, or
/// when an unpartnered part cannot be dominated together with the vertices
/// still unassigned. Bounded mode also cuts at part_count_bound(n) parts.
/// Returns false if the visitor stopped the walk.
bool for_each_partition(const Graph& g, const EnumerationOptions& options, const PartitionVisitor& visit);

// All valid partitions in canonical order; sharded over options.workers.
std::vector<Partition> enumerate_partitions(const Graph& g, const EnumerationOptions& options = {});

struct EnumerationReport {
  std::string graph_id;  // graph6
  std::uint64_t total_valid = 0;
  std::map<std::string, std::uint64_t> histogram;  // CCG class -> count
  std::map<int, std::uint64_t> by_parts;           // k -> count
  int cc_number = 0;                               // 0 when no valid partition

  bool operator==(const EnumerationReport&) const = default;
};

EnumerationReport classify_and_count(const Graph& g, const EnumerationOptions& options = {});

// Largest k over valid partitions, 0 if none.
int cc_number(const Graph& g, const EnumerationOptions& options = {});

}  // namespace ccg
