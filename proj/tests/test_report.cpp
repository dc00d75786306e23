#include <doctest.h>

#include <sstream>

#include "ccg/error.hpp"
#include "ccg/generators.hpp"
#include "ccg/report.hpp"

using namespace ccg;

TEST_SUITE("report") {

TEST_CASE("golden table parsing") {
  const GoldenTable t = parse_golden_table(
      "# note\n@title demo\n@default A4\nclass A4 A6\nx 1 .\ny . 22\n");
  CHECK(t.title == "demo");
  CHECK(t.columns == std::vector<std::string>{"A4", "A6"});
  CHECK(t.cells[0][1] == 0);
  CHECK(t.cells[1][1] == 22);
  CHECK(t.default_columns.contains("A4"));
  CHECK(*t.row_index("y") == 1);
  CHECK_FALSE(t.column_index("A8"));
  CHECK_THROWS_AS(parse_golden_table("class A4\nx 1 2\n"), Error);
  CHECK_THROWS_AS(parse_golden_table("class A4\nx one\n"), Error);
  CHECK_THROWS_AS(parse_golden_table("# only a comment\n"), Error);
}

TEST_CASE("embedded golden values") {
  const GoldenTable& t1 = golden_table(1);
  auto cell = [](const GoldenTable& t, const char* row, const char* col) {
    return t.cells[*t.row_index(row)][*t.column_index(col)];
  };
  CHECK(cell(t1, "K2", "M8") == 21);
  CHECK(cell(t1, "P3", "M8") == 238);
  CHECK(cell(t1, "S5", "M10") == 70);
  CHECK(cell(t1, "K3,3", "M6") == 1);
  CHECK(cell(t1, "C4+e", "M10") == 0);
  const GoldenTable& t2 = golden_table(2);
  CHECK(cell(t2, "3K2", "Pr6") == 1);
  const GoldenTable& t3 = golden_table(3);
  CHECK(cell(t3, "total", "n10") == 19);
  CHECK(cell(t3, "5", "n8") == 4);
  CHECK_THROWS_AS(golden_table(4), Error);
}

TEST_CASE("csv and markdown rendering") {
  const auto report = classify_and_count(mobius_ladder(6));
  std::ostringstream csv;
  write_report_csv(csv, {report});
  std::istringstream lines(csv.str());
  std::string line;
  std::getline(lines, line);
  CHECK(line == "graph_id,ccg_class,count");
  std::uint64_t total = 0;
  int rows = 0;
  while (std::getline(lines, line)) {
    total += std::stoull(line.substr(line.rfind(',') + 1));
    ++rows;
  }
  CHECK(rows == 6);
  CHECK(total == 25);
  CHECK(csv.str().find("\"K2,3\"") != std::string::npos);

  std::ostringstream md;
  write_report_markdown(md, {"M6"}, {report}, {"K2", "C3"});
  CHECK(md.str().find("| C3 | . |") != std::string::npos);
  CHECK(md.str().find("| K3,3 | 1 |") != std::string::npos);

  std::ostringstream text;
  write_report_text(text, classify_and_count(path_graph(3)));
  CHECK(text.str().find("no valid partitions") != std::string::npos);
}

TEST_CASE("table reproduction") {
  const auto r1 = reproduce_table(1, 8, {});
  CHECK(r1.matches());
  CHECK(r1.columns == std::vector<std::string>{"M6", "M8"});
  const auto r3 = reproduce_table(3, 8, {});
  CHECK(r3.matches());
  CHECK_THROWS_AS(reproduce_table(1, 14, {}), Error);
  std::ostringstream out;
  write_reproduction(out, r1);
  CHECK(out.str().find("MATCH table 1") != std::string::npos);
}

}  // TEST_SUITE
