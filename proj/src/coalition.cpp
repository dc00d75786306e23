#include "ccg/coalition.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <charconv>
#include <sstream>
#include <thread>
#include <unordered_map>

#include "ccg/catalog.hpp"
#include "ccg/domination.hpp"
#include "ccg/error.hpp"
#include "ccg/graph6.hpp"

namespace ccg {

Partition canonical_partition(std::vector<VertexSet> parts) {
  std::sort(parts.begin(), parts.end(), [](VertexSet a, VertexSet b) {
    if (a.empty() || b.empty()) return a.empty() && !b.empty();
    return a.lowest() < b.lowest();
  });
  return Partition{std::move(parts)};
}

bool is_partition_of(const Graph& g, const Partition& p) {
  VertexSet seen;
  for (VertexSet part : p.parts) {
    if (part.empty() || part.intersects(seen)) return false;
    seen |= part;
  }
  return seen == g.vertices();
}

std::string format_partition(const Partition& p) {
  std::string out;
  for (std::size_t i = 0; i < p.parts.size(); ++i) {
    if (i) out += '|';
    bool first = true;
    for (int v : p.parts[i]) {
      if (!first) out += ',';
      out += std::to_string(v);
      first = false;
    }
  }
  return out;
}

Partition parse_partition(std::string_view text) {
  std::vector<VertexSet> parts;
  VertexSet seen;
  auto fail = [&](const std::string& why) {
    return Error(Errc::not_a_partition, why + " in \"" + std::string(text) + "\"");
  };
  std::size_t start = 0;
  while (start <= text.size()) {
    const std::size_t bar = std::min(text.find('|', start), text.size());
    std::string_view chunk = text.substr(start, bar - start);
    VertexSet part;
    std::size_t pos = 0;
    while (pos <= chunk.size()) {
      const std::size_t comma = std::min(chunk.find(',', pos), chunk.size());
      std::string_view item = chunk.substr(pos, comma - pos);
      while (!item.empty() && item.front() == ' ') item.remove_prefix(1);
      while (!item.empty() && item.back() == ' ') item.remove_suffix(1);
      int v = -1;
      auto [ptr, ec] = std::from_chars(item.data(), item.data() + item.size(), v);
      if (item.empty() || ec != std::errc{} || ptr != item.data() + item.size() || v < 0 || v >= kMaxVertices) {
        throw fail("bad vertex '" + std::string(item) + "'");
      }
      if (part.contains(v) || seen.contains(v)) throw fail("vertex " + std::to_string(v) + " repeated");
      part = part.with(v);
      pos = comma + 1;
    }
    seen |= part;
    parts.push_back(part);
    start = bar + 1;
  }
  return canonical_partition(std::move(parts));
}

bool is_coalition(const Graph& g, VertexSet a, VertexSet b) {
  if (a.empty() || b.empty()) throw Error(Errc::empty_set, "coalition with an empty set");
  if (a.intersects(b)) throw Error(Errc::overlap, "coalition sets must be disjoint");
  return !is_cds(g, a) && !is_cds(g, b) && is_cds(g, a | b);
}

namespace {

// Coalition rows for the parts of p; requires p to partition V(g).
std::vector<VertexSet> coalition_rows(const Graph& g, const Partition& p) {
  const int k = p.size();
  std::vector<VertexSet> rows(static_cast<std::size_t>(k));
  for (int i = 0; i < k; ++i) {
    for (int j = i + 1; j < k; ++j) {
      if (is_coalition(g, p.parts[i], p.parts[j])) {
        rows[i] = rows[i].with(j);
        rows[j] = rows[j].with(i);
      }
    }
  }
  return rows;
}

bool rows_valid(const Graph& g, const Partition& p, const std::vector<VertexSet>& rows) {
  for (int i = 0; i < p.size(); ++i) {
    const bool singleton_cds = p.parts[i].size() == 1 && is_cds(g, p.parts[i]);
    if (!singleton_cds && rows[i].empty()) return false;
  }
  return true;
}

}  // namespace

bool validate_partition(const Graph& g, const Partition& p) {
  if (!is_partition_of(g, p)) throw Error(Errc::not_a_partition, format_partition(p) + " does not partition V(G)");
  return rows_valid(g, p, coalition_rows(g, p));
}

CoalitionGraph build_ccg(const Graph& g, const Partition& p) {
  if (!is_partition_of(g, p)) throw Error(Errc::not_a_partition, format_partition(p) + " does not partition V(G)");
  auto rows = coalition_rows(g, p);
  if (!rows_valid(g, p, rows)) {
    throw Error(Errc::invalid_partition, format_partition(p) + " is not a connected coalition partition");
  }
  CoalitionGraph out{Graph::from_neighborhoods(std::move(rows)), {}};
  for (VertexSet part : p.parts) out.part_sizes.push_back(part.size());
  return out;
}

int part_count_bound(int n) { return std::max(6, (n + 7) / 3); }

Partition PartitionView::partition() const { return Partition{std::vector<VertexSet>(parts.begin(), parts.end())}; }

Graph PartitionView::ccg() const { return Graph::from_neighborhoods(std::vector<VertexSet>(coalitions.begin(), coalitions.end())); }

namespace {

class PartitionSearch {
 public:
  PartitionSearch(const Graph& g, const CdsTable& cds, int min_parts, int max_parts)
      : graph_(g), cds_(cds), min_parts_(min_parts), max_parts_(max_parts > 0 ? max_parts : g.order()) {}

  // Subsets joining vertex 0 in the first part, in walk order.
  std::vector<VertexSet> root_choices() const {
    std::vector<VertexSet> out;
    const std::uint64_t rest = graph_.vertices().without(0).bits();
    std::uint64_t s = 0;
    do {
      out.emplace_back(s);
      s = (s - rest) & rest;
    } while (s != 0);
    return out;
  }

  template <class Leaf>
  bool run_root_choice(VertexSet extra, Leaf& leaf) {
    const VertexSet rest = graph_.vertices().without(0);
    return close_part(extra.with(0), rest - extra, 0, 0, leaf);
  }

  template <class Leaf>
  bool run(Leaf& leaf) {
    return descend(graph_.vertices(), 0, 0, leaf);
  }

 private:
  template <class Leaf>
  bool descend(VertexSet remaining, int k, std::uint64_t partnered, Leaf& leaf) {
    if (remaining.empty()) return emit(k, partnered, leaf);
    if (k >= max_parts_) return true;
    const int m = remaining.lowest();
    const std::uint64_t rest = remaining.without(m).bits();
    std::uint64_t s = 0;
    do {
      if (!close_part(VertexSet(s).with(m), VertexSet(rest & ~s), k, partnered, leaf)) return false;
      s = (s - rest) & rest;
    } while (s != 0);
    return true;
  }

  template <class Leaf>
  bool close_part(VertexSet part, VertexSet after, int k, std::uint64_t partnered, Leaf& leaf) {
    const bool part_cds = cds_.cds(part);
    if (part_cds && part.size() > 1) return true;
    if (min_parts_ > 0 && k + 1 + after.size() < min_parts_) return true;
    VertexSet lower;
    const std::uint64_t bit = std::uint64_t{1} << k;
    if (!part_cds) {
      for (int i = 0; i < k; ++i) {
        if (!(cds_mask_ >> i & 1U) && cds_.cds(part | parts_[i])) {
          lower = lower.with(i);
          partnered |= (std::uint64_t{1} << i) | bit;
        }
      }
    }
    parts_[k] = part;
    lower_[k] = lower;
    cds_mask_ = part_cds ? (cds_mask_ | bit) : (cds_mask_ & ~bit);
    // Every unpartnered non-CDS part needs a partner made of vertices in `after`.
    const std::uint64_t open = ~cds_mask_ & ~partnered & ((bit << 1) - 1);
    for (int i : VertexSet(open)) {
      if (!cds_.dominating(parts_[i] | after)) return true;
    }
    return descend(after, k + 1, partnered, leaf);
  }

  template <class Leaf>
  bool emit(int k, std::uint64_t partnered, Leaf& leaf) {
    if (k < min_parts_) return true;
    const std::uint64_t all = k == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << k) - 1;
    if ((~cds_mask_ & ~partnered & all) != 0) return true;
    std::array<VertexSet, kMaxVertices> rows{};
    for (int i = 0; i < k; ++i) {
      rows[i] |= lower_[i];
      for (int j : lower_[i]) rows[j] = rows[j].with(i);
    }
    PartitionView view{std::span<const VertexSet>(parts_.data(), static_cast<std::size_t>(k)),
                       std::span<const VertexSet>(rows.data(), static_cast<std::size_t>(k))};
    return leaf(view);
  }

  const Graph& graph_;
  const CdsTable& cds_;
  int min_parts_;
  int max_parts_;
  std::array<VertexSet, kMaxVertices> parts_{};
  std::array<VertexSet, kMaxVertices> lower_{};
  std::uint64_t cds_mask_ = 0;
};

int effective_max_parts(const Graph& g, const EnumerationOptions& options) {
  int cap = options.max_parts > 0 ? options.max_parts : g.order();
  if (options.mode == Mode::bounded) cap = std::min(cap, part_count_bound(g.order()));
  return cap;
}

void check_enumerable(const Graph& g, const EnumerationOptions& options) {
  if (!g.is_connected()) throw Error(Errc::precondition_violated, "partition enumeration needs a connected graph");
  const int n = g.order();
  if (n <= options.exact_cap) return;
  if (options.mode == Mode::bounded && options.long_running && n <= EnumerationOptions::kLongRunningCap) return;
  throw Error(Errc::too_large, "order " + std::to_string(n) + " exceeds the enumeration cap " +
                                   std::to_string(options.exact_cap) +
                                   (options.mode == Mode::bounded ? " (bounded mode up to 18 needs long_running)" : ""));
}

// Runs fn(shard, worker) for every shard on `workers` threads.
template <class Fn>
void parallel_shards(std::size_t shards, int workers, Fn&& fn) {
  const int threads = std::max(1, std::min<int>(workers, static_cast<int>(shards)));
  if (threads == 1) {
    for (std::size_t s = 0; s < shards; ++s) fn(s, 0);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::jthread> pool;
  for (int w = 0; w < threads; ++w) {
    pool.emplace_back([&, w] {
      for (std::size_t s = next++; s < shards; s = next++) fn(s, w);
    });
  }
}

// Lower-triangle key of a coalition graph with at most 11 vertices.
constexpr int kSmallKeyOrder = 11;

std::uint64_t small_key(const PartitionView& view) {
  std::uint64_t key = static_cast<std::uint64_t>(view.size()) << 56;
  int bit = 0;
  for (int i = 1; i < view.size(); ++i) {
    for (int j = 0; j < i; ++j, ++bit) {
      if (view.coalitions[i].contains(j)) key |= std::uint64_t{1} << bit;
    }
  }
  return key;
}

Graph graph_from_small_key(std::uint64_t key) {
  const int k = static_cast<int>(key >> 56);
  std::vector<Edge> edges;
  int bit = 0;
  for (int i = 1; i < k; ++i) {
    for (int j = 0; j < i; ++j, ++bit) {
      if (key >> bit & 1U) edges.push_back({j, i});
    }
  }
  return Graph(k, edges);
}

struct LabeledCounts {
  std::unordered_map<std::uint64_t, std::uint64_t> small;
  std::map<std::vector<std::uint64_t>, std::uint64_t> large;
  std::map<int, std::uint64_t> by_parts;
  std::uint64_t total = 0;
  int max_parts = 0;

  void add(const PartitionView& view) {
    ++total;
    ++by_parts[view.size()];
    max_parts = std::max(max_parts, view.size());
    if (view.size() <= kSmallKeyOrder) {
      ++small[small_key(view)];
    } else {
      std::vector<std::uint64_t> rows;
      for (VertexSet r : view.coalitions) rows.push_back(r.bits());
      ++large[rows];
    }
  }

  void merge(const LabeledCounts& o) {
    for (const auto& [k, c] : o.small) small[k] += c;
    for (const auto& [k, c] : o.large) large[k] += c;
    for (const auto& [k, c] : o.by_parts) by_parts[k] += c;
    total += o.total;
    max_parts = std::max(max_parts, o.max_parts);
  }
};

}  // namespace

bool for_each_partition(const Graph& g, const EnumerationOptions& options, const PartitionVisitor& visit) {
  check_enumerable(g, options);
  CdsTable table(g);
  PartitionSearch search(g, table, options.min_parts, effective_max_parts(g, options));
  auto leaf = [&](const PartitionView& view) { return visit(view); };
  return search.run(leaf);
}

std::vector<Partition> enumerate_partitions(const Graph& g, const EnumerationOptions& options) {
  check_enumerable(g, options);
  CdsTable table(g);
  const int max_parts = effective_max_parts(g, options);
  const auto choices = PartitionSearch(g, table, options.min_parts, max_parts).root_choices();
  std::vector<std::vector<Partition>> per_shard(choices.size());
  parallel_shards(choices.size(), options.workers, [&](std::size_t shard, int) {
    PartitionSearch search(g, table, options.min_parts, max_parts);
    auto leaf = [&](const PartitionView& view) {
      per_shard[shard].push_back(view.partition());
      return true;
    };
    search.run_root_choice(choices[shard], leaf);
  });
  std::vector<Partition> out;
  for (auto& shard : per_shard) {
    out.insert(out.end(), std::make_move_iterator(shard.begin()), std::make_move_iterator(shard.end()));
  }
  return out;
}

EnumerationReport classify_and_count(const Graph& g, const EnumerationOptions& options) {
  check_enumerable(g, options);
  CdsTable table(g);
  const int max_parts = effective_max_parts(g, options);
  const auto choices = PartitionSearch(g, table, options.min_parts, max_parts).root_choices();
  const int workers = std::max(1, options.workers);
  std::vector<LabeledCounts> per_worker(static_cast<std::size_t>(workers));
  parallel_shards(choices.size(), workers, [&](std::size_t shard, int worker) {
    PartitionSearch search(g, table, options.min_parts, max_parts);
    auto leaf = [&](const PartitionView& view) {
      per_worker[worker].add(view);
      return true;
    };
    search.run_root_choice(choices[shard], leaf);
  });
  LabeledCounts all;
  for (const auto& w : per_worker) all.merge(w);

  EnumerationReport report;
  report.graph_id = graph6_encode(g);
  report.total_valid = all.total;
  report.by_parts = all.by_parts;
  report.cc_number = all.max_parts;
  for (const auto& [key, count] : all.small) report.histogram[classify(graph_from_small_key(key))] += count;
  for (const auto& [rows, count] : all.large) {
    std::vector<VertexSet> adj;
    for (std::uint64_t r : rows) adj.emplace_back(r);
    report.histogram[classify(Graph::from_neighborhoods(std::move(adj)))] += count;
  }
  return report;
}

int cc_number(const Graph& g, const EnumerationOptions& options) {
  int best = 0;
  for_each_partition(g, options, [&](const PartitionView& view) {
    best = std::max(best, view.size());
    return true;
  });
  return best;
}

}  // namespace ccg
