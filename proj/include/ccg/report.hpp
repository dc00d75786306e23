#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "ccg/coalition.hpp"

namespace ccg {

namespace golden {
extern const char* const kTable1;
extern const char* const kTable2;
extern const char* const kTable3;
}  // namespace golden

/// Golden count table. Columns are graph labels ("M6", "Pr8", "n10"), rows
/// are CCG classes or k values.
struct GoldenTable {
  std::string title;
  std::vector<std::string> columns;
  std::vector<std::string> rows;
  std::vector<std::vector<std::uint64_t>> cells;  // [row][column]
  std::set<std::string> default_columns;

  std::optional<std::size_t> column_index(std::string_view label) const;
  std::optional<std::size_t> row_index(std::string_view label) const;
};

// Whitespace-separated cells, "." for zero, "#" comments, "@title" and
// "@default" directives. Throws Error(malformed_input).
GoldenTable parse_golden_table(std::string_view text);
// which = 1, 2 or 3.
const GoldenTable& golden_table(int which);

// graph_id,ccg_class,count; fields containing ',' are quoted.
void write_report_csv(std::ostream& out, const std::vector<EnumerationReport>& reports);

/// Markdown count table: one column per report, rows in `row_order` first
/// and any further classes afterwards. Zero cells print as ".".
void write_report_markdown(std::ostream& out, const std::vector<std::string>& column_labels,
                           const std::vector<EnumerationReport>& reports,
                           const std::vector<std::string>& row_order = {});

void write_report_text(std::ostream& out, const EnumerationReport& report);

struct CellMismatch {
  std::string row;
  std::string column;
  std::uint64_t expected = 0;
  std::uint64_t computed = 0;
};

struct TableReproduction {
  int table = 0;
  std::vector<std::string> columns;  // reproduced columns
  std::vector<std::string> rows;
  std::vector<std::vector<std::uint64_t>> computed;  // [row][column]
  std::vector<CellMismatch> mismatches;

  bool matches() const { return mismatches.empty(); }
};

/// Recomputes golden table 1 (ladders), 2 (prisms) or 3 (cubic CC numbers) for
/// every golden column of order <= max_n and diffs it cell by cell. Classes
/// outside the golden rows become extra rows with expected value 0. Columns
/// outside @default need options.long_running.
TableReproduction reproduce_table(int table, int max_n, const EnumerationOptions& options);

void write_reproduction(std::ostream& out, const TableReproduction& result);

}  // namespace ccg
