#include "ccg/cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <ostream>
#include <sstream>

#include "ccg/catalog.hpp"
#include "ccg/coalition.hpp"
#include "ccg/corpus.hpp"
#include "ccg/error.hpp"
#include "ccg/generators.hpp"
#include "ccg/graph6.hpp"
#include "ccg/report.hpp"
#include "ccg/verify.hpp"

namespace ccg::cli {
namespace {

constexpr int kExitOk = 0;
constexpr int kExitMismatch = 1;
constexpr int kExitUsage = 2;

struct LabeledGraph {
  std::string label;
  Graph graph;
};

// --mobius / --prism / --named / --graph6 / --file / --edges; exactly one.
struct SourceFlags {
  int mobius = 0;
  int prism = 0;
  std::string named;
  std::string graph6;
  std::string file;
  std::string edges;

  void attach(CLI::App& app) {
    auto* group = app.add_option_group("graph source");
    group->add_option("--mobius", mobius, "Moebius ladder M_n");
    group->add_option("--prism", prism, "prism Pr_n");
    group->add_option("--named", named, "named graph (K4, C7, S_5, K2,3, ...)");
    group->add_option("--graph6", graph6, "one graph in graph6");
    group->add_option("--file", file, "graph6 file, one graph per line");
    group->add_option("--edges", edges, "edge-list file");
    group->require_option(1);
  }

  std::vector<LabeledGraph> load() const {
    if (mobius) return {{"M" + std::to_string(mobius), mobius_ladder(mobius)}};
    if (prism) return {{"Pr" + std::to_string(prism), ccg::prism(prism)}};
    if (!named.empty()) return {{named, named_graph(named)}};
    if (!graph6.empty()) return {{graph6, graph6_decode(graph6)}};
    if (!edges.empty()) {
      std::ifstream in(edges);
      if (!in) throw Error(Errc::malformed_input, "cannot open " + edges);
      Graph g = read_edge_list(in);
      return {{graph6_encode(g), std::move(g)}};
    }
    std::vector<LabeledGraph> out;
    for (Graph& g : read_graph_file(file)) out.push_back({graph6_encode(g), std::move(g)});
    return out;
  }

  static std::vector<Graph> read_graph_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error(Errc::malformed_input, "cannot open " + path);
    return read_graph6_lines(in);
  }
};

struct EngineFlags {
  std::string mode = "exact";
  int workers = 1;
  bool long_running = false;

  void attach(CLI::App& app) {
    app.add_option("--mode", mode, "exact or bounded (bounded caps k at max{6, floor((n+7)/3)})")
        ->check(CLI::IsMember({"exact", "bounded"}));
    app.add_option("--workers", workers, "worker threads")->check(CLI::PositiveNumber);
    app.add_flag("--long-running", long_running, "allow bounded runs up to order 18 and long table columns");
  }

  EnumerationOptions options() const {
    EnumerationOptions o;
    o.mode = mode == "bounded" ? Mode::bounded : Mode::exact;
    o.workers = workers;
    o.long_running = long_running;
    return o;
  }
};

int cmd_gen(const std::string& kind, const std::vector<std::string>& args, int n, bool cubic, int max_degree,
            std::ostream& out) {
  auto order_arg = [&]() {
    if (args.empty()) throw Error(Errc::malformed_input, "gen " + kind + " needs an order");
    try {
      return std::stoi(args.front());
    } catch (const std::exception&) {
      throw Error(Errc::malformed_input, "bad order '" + args.front() + "'");
    }
  };
  std::vector<Graph> graphs;
  if (kind == "mobius") {
    graphs.push_back(mobius_ladder(order_arg()));
  } else if (kind == "prism") {
    graphs.push_back(prism(order_arg()));
  } else if (kind == "named") {
    if (args.empty()) throw Error(Errc::malformed_input, "gen named needs a name");
    for (const auto& name : args) graphs.push_back(named_graph(name));
  } else if (kind == "corpus") {
    if (n <= 0) throw Error(Errc::malformed_input, "gen corpus needs --n");
    graphs = cubic ? enumerate_cubic_graphs(n) : enumerate_connected_graphs(n, max_degree);
  } else {
    throw Error(Errc::unknown_name, "unknown generator '" + kind + "' (mobius, prism, named, corpus)");
  }
  for (const Graph& g : graphs) out << graph6_encode(g) << '\n';
  return kExitOk;
}

int cmd_enumerate(const SourceFlags& source, const EngineFlags& engine, const std::string& format,
                  std::ostream& out) {
  const auto graphs = source.load();
  std::vector<EnumerationReport> reports;
  std::vector<std::string> labels;
  for (const auto& lg : graphs) {
    reports.push_back(classify_and_count(lg.graph, engine.options()));
    labels.push_back(lg.label);
  }
  if (format == "csv") {
    write_report_csv(out, reports);
  } else if (format == "markdown") {
    write_report_markdown(out, labels, reports, golden_table(1).rows);
  } else {
    for (const auto& r : reports) write_report_text(out, r);
  }
  return kExitOk;
}

int cmd_reproduce(int table, int max_n, const EngineFlags& engine, std::ostream& out) {
  const TableReproduction result = reproduce_table(table, max_n, engine.options());
  write_reproduction(out, result);
  return result.matches() ? kExitOk : kExitMismatch;
}

Corpus verify_corpus(const std::string& family, int max_n, const std::string& file) {
  if (!file.empty()) return Corpus{"graph6 file " + file, SourceFlags::read_graph_file(file)};
  if (family.empty() || family == "default") return default_corpus(max_n > 0 ? max_n : 7);
  const Family f = parse_family(family);
  const int top = max_n > 0 ? max_n : 10;
  Corpus c{to_string(f) + " n<=" + std::to_string(top), {}};
  for (int n = 1; n <= top; ++n) {
    for (Graph& g : family_members(f, n)) c.graphs.push_back(std::move(g));
  }
  return c;
}

int cmd_verify(std::vector<std::string> claims, bool all, bool list, const std::string& family, int max_n,
               const std::string& file, const std::string& out_path, const std::string& format, int workers,
               std::ostream& out) {
  if (list) {
    for (const auto& c : claim_registry()) {
      out << c.id << (c.corpus_driven ? "  [corpus] " : "  [fixed]  ") << c.statement << '\n';
    }
    return kExitOk;
  }
  if (all) {
    claims.clear();
    for (const auto& c : claim_registry()) claims.push_back(c.id);
  }
  if (claims.empty()) throw Error(Errc::malformed_input, "name claims to verify or pass --all (see --list)");
  VerifyConfig config;
  config.workers = workers;
  const auto records = run_claims(claims, verify_corpus(family, max_n, file), config);
  if (format == "csv") {
    write_verdicts_csv(out, records);
  } else {
    write_verdicts_text(out, records);
  }
  if (!out_path.empty()) {
    std::ofstream file_out(out_path);
    if (!file_out) throw Error(Errc::malformed_input, "cannot write " + out_path);
    write_verdicts_csv(file_out, records);
  }
  for (const auto& r : records) {
    if (!r.passed()) return kExitMismatch;
  }
  return kExitOk;
}

int cmd_ccn(const SourceFlags& source, const EngineFlags& engine, std::ostream& out) {
  for (const auto& lg : source.load()) {
    const int cc = cc_number(lg.graph, engine.options());
    out << lg.label << ' ' << (cc == 0 ? std::string("undefined") : std::to_string(cc)) << '\n';
  }
  return kExitOk;
}

int cmd_witness(const std::string& target, const std::string& family, int n, int min_n, int max_n,
                const EngineFlags& engine, std::ostream& out) {
  const Family f = parse_family(family);
  int lo = n > 0 ? n : (min_n > 0 ? min_n : 1);
  int hi = n > 0 ? n : (max_n > 0 ? max_n : std::max(lo, f == Family::subcubic ? 10 : 12));
  const auto w = witness_search(target, f, lo, hi, engine.options());
  if (!w) {
    out << "NotFound " << canonical_class_name(target) << " in " << to_string(f) << " n=" << lo << ".." << hi << '\n';
    return kExitMismatch;
  }
  out << "found " << w->ccg_class << " graph6=" << graph6_encode(w->graph) << " n=" << w->graph.order()
      << " partition=" << format_partition(w->partition) << '\n';
  return kExitOk;
}

}  // namespace

int run(int argc, char** argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Connected coalition partitions of subcubic graphs"};
  app.require_subcommand(1);
  bool seedless = false;
  app.add_flag("--seedless", seedless, "accepted for scripts; every algorithm is deterministic");

  std::string format = "text";
  auto add_format = [&](CLI::App* sub) {
    sub->add_option("--format", format, "csv, markdown or text")->check(CLI::IsMember({"csv", "markdown", "text"}));
  };

  auto* gen = app.add_subcommand("gen", "emit graphs in graph6");
  std::string gen_kind;
  std::vector<std::string> gen_args;
  int gen_n = 0;
  bool gen_cubic = false;
  int gen_max_degree = 3;
  gen->add_option("kind", gen_kind, "mobius N | prism N | named NAME... | corpus")->required();
  gen->add_option("args", gen_args);
  gen->add_option("--n", gen_n, "corpus order");
  gen->add_flag("--cubic", gen_cubic, "cubic corpus");
  gen->add_option("--max-degree", gen_max_degree, "corpus degree cap");

  auto* enumerate = app.add_subcommand("enumerate", "count valid partitions by coalition graph class");
  SourceFlags enum_source;
  EngineFlags enum_engine;
  enum_source.attach(*enumerate);
  enum_engine.attach(*enumerate);
  add_format(enumerate);

  auto* reproduce = app.add_subcommand("reproduce", "recompute a golden count table and diff it");
  int table = 0;
  int reproduce_max_n = 12;
  EngineFlags reproduce_engine;
  reproduce->add_option("table", table, "1 (ladders), 2 (prisms) or 3 (cubic)")->required()->check(CLI::Range(1, 3));
  reproduce->add_option("--max-n", reproduce_max_n, "largest column order");
  reproduce_engine.attach(*reproduce);

  auto* verify = app.add_subcommand("verify", "check structural claims over a corpus");
  std::vector<std::string> claims;
  bool verify_all = false;
  bool verify_list = false;
  std::string verify_family;
  int verify_max_n = 0;
  std::string verify_file;
  std::string verify_out;
  int verify_workers = 1;
  verify->add_option("claims", claims, "claim ids");
  verify->add_flag("--all", verify_all, "every claim");
  verify->add_flag("--list", verify_list, "list claims and exit");
  verify->add_option("--family", verify_family, "default, subcubic, ladders, prisms, cubic or near-cubic");
  verify->add_option("--max-n", verify_max_n, "largest corpus order");
  verify->add_option("--file", verify_file, "graph6 corpus file");
  verify->add_option("--out", verify_out, "write verdict CSV here");
  verify->add_option("--workers", verify_workers)->check(CLI::PositiveNumber);
  verify->add_option("--format", format, "csv or text")->check(CLI::IsMember({"csv", "text"}));

  auto* ccn = app.add_subcommand("ccn", "connected coalition number");
  SourceFlags ccn_source;
  EngineFlags ccn_engine;
  ccn_source.attach(*ccn);
  ccn_engine.attach(*ccn);

  auto* witness = app.add_subcommand("witness", "find a graph realising a coalition graph");
  std::string target;
  std::string witness_family = "ladders";
  int witness_n = 0, witness_min_n = 0, witness_max_n = 0;
  EngineFlags witness_engine;
  witness->add_option("target", target, "catalog graph or star (S_5, C4+e, K2,3, ...)")->required();
  witness->add_option("--family", witness_family, "ladders, prisms, cubic, subcubic or near-cubic");
  witness->add_option("--n", witness_n, "single order");
  witness->add_option("--min-n", witness_min_n);
  witness->add_option("--max-n", witness_max_n);
  witness_engine.attach(*witness);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*gen) return cmd_gen(gen_kind, gen_args, gen_n, gen_cubic, gen_max_degree, out);
    if (*enumerate) return cmd_enumerate(enum_source, enum_engine, format, out);
    if (*reproduce) return cmd_reproduce(table, reproduce_max_n, reproduce_engine, out);
    if (*verify) {
      return cmd_verify(claims, verify_all, verify_list, verify_family, verify_max_n, verify_file, verify_out, format,
                        verify_workers, out);
    }
    if (*ccn) return cmd_ccn(ccn_source, ccn_engine, out);
    if (*witness) {
      return cmd_witness(target, witness_family, witness_n, witness_min_n, witness_max_n, witness_engine, out);
    }
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace ccg::cli
