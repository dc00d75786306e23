#include "ccg/report.hpp"

#include <algorithm>
#include <map>
#include <ostream>
#include <sstream>

#include "ccg/corpus.hpp"
#include "ccg/error.hpp"
#include "ccg/generators.hpp"

namespace ccg {

std::optional<std::size_t> GoldenTable::column_index(std::string_view label) const {
  auto it = std::find(columns.begin(), columns.end(), label);
  if (it == columns.end()) return std::nullopt;
  return static_cast<std::size_t>(it - columns.begin());
}

std::optional<std::size_t> GoldenTable::row_index(std::string_view label) const {
  auto it = std::find(rows.begin(), rows.end(), label);
  if (it == rows.end()) return std::nullopt;
  return static_cast<std::size_t>(it - rows.begin());
}

GoldenTable parse_golden_table(std::string_view text) {
  GoldenTable table;
  std::istringstream in{std::string(text)};
  std::string line;
  bool have_header = false;
  while (std::getline(in, line)) {
    std::istringstream fields(line);
    std::string head;
    if (!(fields >> head) || head[0] == '#') continue;
    if (head == "@title") {
      std::getline(fields >> std::ws, table.title);
      continue;
    }
    if (head == "@default") {
      for (std::string c; fields >> c;) table.default_columns.insert(c);
      continue;
    }
    std::vector<std::string> tokens;
    for (std::string t; fields >> t;) tokens.push_back(t);
    if (!have_header) {
      table.columns = tokens;
      have_header = true;
      continue;
    }
    if (tokens.size() != table.columns.size()) {
      throw Error(Errc::malformed_input, "golden row '" + head + "' has " + std::to_string(tokens.size()) +
                                             " cells, expected " + std::to_string(table.columns.size()));
    }
    std::vector<std::uint64_t> cells;
    for (const std::string& t : tokens) {
      if (t == ".") {
        cells.push_back(0);
        continue;
      }
      if (t.find_first_not_of("0123456789") != std::string::npos) {
        throw Error(Errc::malformed_input, "bad golden cell '" + t + "'");
      }
      cells.push_back(std::stoull(t));
    }
    table.rows.push_back(head);
    table.cells.push_back(std::move(cells));
  }
  if (!have_header) throw Error(Errc::malformed_input, "golden table has no header");
  return table;
}

const GoldenTable& golden_table(int which) {
  static const GoldenTable t1 = parse_golden_table(golden::kTable1);
  static const GoldenTable t2 = parse_golden_table(golden::kTable2);
  static const GoldenTable t3 = parse_golden_table(golden::kTable3);
  switch (which) {
    case 1: return t1;
    case 2: return t2;
    case 3: return t3;
  }
  throw Error(Errc::out_of_range, "no golden table " + std::to_string(which));
}

namespace {

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

std::string cell(std::uint64_t v) { return v == 0 ? "." : std::to_string(v); }

void write_markdown_grid(std::ostream& out, const std::string& corner, const std::vector<std::string>& columns,
                         const std::vector<std::string>& rows,
                         const std::vector<std::vector<std::uint64_t>>& values) {
  out << "| " << corner << " |";
  for (const auto& c : columns) out << ' ' << c << " |";
  out << "\n|---|";
  for (std::size_t i = 0; i < columns.size(); ++i) out << "---:|";
  out << '\n';
  for (std::size_t r = 0; r < rows.size(); ++r) {
    out << "| " << rows[r] << " |";
    for (std::size_t c = 0; c < columns.size(); ++c) out << ' ' << cell(values[r][c]) << " |";
    out << '\n';
  }
}

int order_suffix(const std::string& label) {
  const auto pos = label.find_first_of("0123456789");
  if (pos == std::string::npos) throw Error(Errc::malformed_input, "column label without order: " + label);
  return std::stoi(label.substr(pos));
}

}  // namespace

void write_report_csv(std::ostream& out, const std::vector<EnumerationReport>& reports) {
  out << "graph_id,ccg_class,count\n";
  for (const auto& r : reports) {
    for (const auto& [cls, count] : r.histogram) {
      out << csv_field(r.graph_id) << ',' << csv_field(cls) << ',' << count << '\n';
    }
  }
}

void write_report_markdown(std::ostream& out, const std::vector<std::string>& column_labels,
                           const std::vector<EnumerationReport>& reports,
                           const std::vector<std::string>& row_order) {
  std::vector<std::string> rows = row_order;
  for (const auto& r : reports) {
    for (const auto& [cls, count] : r.histogram) {
      if (std::find(rows.begin(), rows.end(), cls) == rows.end()) rows.push_back(cls);
    }
  }
  std::vector<std::vector<std::uint64_t>> values(rows.size(), std::vector<std::uint64_t>(reports.size(), 0));
  for (std::size_t c = 0; c < reports.size(); ++c) {
    for (std::size_t r = 0; r < rows.size(); ++r) {
      auto it = reports[c].histogram.find(rows[r]);
      if (it != reports[c].histogram.end()) values[r][c] = it->second;
    }
  }
  write_markdown_grid(out, "CCG", column_labels, rows, values);
}

void write_report_text(std::ostream& out, const EnumerationReport& report) {
  out << "graph " << report.graph_id << '\n';
  if (report.total_valid == 0) {
    out << "no valid partitions\n";
    return;
  }
  out << "valid partitions " << report.total_valid << '\n';
  out << "connected coalition number " << report.cc_number << '\n';
  for (const auto& [cls, count] : report.histogram) out << "  " << cls << ' ' << count << '\n';
}

TableReproduction reproduce_table(int table, int max_n, const EnumerationOptions& options) {
  const GoldenTable& golden = golden_table(table);
  TableReproduction result;
  result.table = table;
  result.rows = golden.rows;

  std::vector<std::size_t> golden_columns;
  for (std::size_t c = 0; c < golden.columns.size(); ++c) {
    const std::string& label = golden.columns[c];
    if (order_suffix(label) > max_n) continue;
    if (!golden.default_columns.contains(label) && !options.long_running) {
      throw Error(Errc::too_large, "column " + label + " of table " + std::to_string(table) +
                                       " is long-running; pass the long-running flag");
    }
    golden_columns.push_back(c);
    result.columns.push_back(label);
  }

  // computed[row label][column] grows with unexpected rows.
  std::map<std::string, std::vector<std::uint64_t>> computed;
  auto slot = [&](const std::string& row) -> std::vector<std::uint64_t>& {
    auto& v = computed[row];
    v.resize(result.columns.size(), 0);
    if (std::find(result.rows.begin(), result.rows.end(), row) == result.rows.end()) result.rows.push_back(row);
    return v;
  };
  for (const auto& row : result.rows) slot(row);

  for (std::size_t c = 0; c < golden_columns.size(); ++c) {
    const int n = order_suffix(result.columns[c]);
    EnumerationOptions opts = options;
    if (n > opts.exact_cap) opts.mode = Mode::bounded;
    if (table == 1 || table == 2) {
      const Graph g = table == 1 ? mobius_ladder(n) : prism(n);
      const EnumerationReport report = classify_and_count(g, opts);
      for (const auto& [cls, count] : report.histogram) slot(cls)[c] = count;
    } else {
      const auto graphs = enumerate_cubic_graphs(n);
      slot("total")[c] = graphs.size();
      for (const Graph& g : graphs) ++slot(std::to_string(cc_number(g, opts)))[c];
    }
  }

  for (const auto& row : result.rows) {
    result.computed.push_back(computed[row]);
    const auto golden_row = golden.row_index(row);
    for (std::size_t c = 0; c < golden_columns.size(); ++c) {
      const std::uint64_t expected = golden_row ? golden.cells[*golden_row][golden_columns[c]] : 0;
      const std::uint64_t got = computed[row][c];
      if (expected != got) result.mismatches.push_back({row, result.columns[c], expected, got});
    }
  }
  return result;
}

void write_reproduction(std::ostream& out, const TableReproduction& result) {
  const GoldenTable& golden = golden_table(result.table);
  out << "## " << golden.title << " (computed)\n\n";
  write_markdown_grid(out, result.table == 3 ? "k \\ n" : "CCG", result.columns, result.rows, result.computed);
  out << '\n';
  const std::size_t cells = result.rows.size() * result.columns.size();
  if (result.matches()) {
    out << "MATCH table " << result.table << ": " << cells << " cells equal the golden values\n";
    return;
  }
  for (const auto& m : result.mismatches) {
    out << "MISMATCH table " << result.table << " row " << m.row << " column " << m.column << ": expected "
        << m.expected << ", computed " << m.computed << '\n';
  }
  out << "FAIL table " << result.table << ": " << result.mismatches.size() << " of " << cells
      << " cells differ\n";
}

}  // namespace ccg
