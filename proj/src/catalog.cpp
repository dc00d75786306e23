#include "ccg/catalog.hpp"

#include <algorithm>
#include <istream>
#include <ostream>
#include <sstream>
#include <unordered_map>

#include "ccg/error.hpp"
#include "ccg/generators.hpp"

namespace ccg {

namespace {

std::vector<CatalogEntry> build(std::initializer_list<const char*> names) {
  std::vector<CatalogEntry> out;
  for (const char* name : names) {
    Graph g = named_graph(name);
    Certificate c = certificate(g);
    out.push_back({normalize_name(name), std::move(g), std::move(c)});
  }
  return out;
}

const std::unordered_map<Certificate, std::string, CertificateHash>& lookup() {
  static const auto table = [] {
    std::unordered_map<Certificate, std::string, CertificateHash> t;
    for (const auto* list : {&coalition_catalog(), &auxiliary_catalog()}) {
      for (const CatalogEntry& e : *list) t.emplace(e.certificate, e.name);
    }
    return t;
  }();
  return table;
}

}  // namespace

const std::vector<CatalogEntry>& coalition_catalog() {
  static const std::vector<CatalogEntry> entries =
      build({"K1", "Kbar2", "Kbar3", "Kbar4", "C3", "2K2", "P4", "C4", "C3+e", "K4-e", "K4", "P2uP3",
             "S1,2", "P5", "C3+e+e", "C3+2e", "C4+e", "C5", "S2,2", "3K2", "K2,3", "K3,3"});
  return entries;
}

const std::vector<CatalogEntry>& auxiliary_catalog() {
  static const std::vector<CatalogEntry> entries = build({"2C3+e", "K2uK3", "K2uS4"});
  return entries;
}

std::optional<int> star_order(const Graph& h) {
  const int k = h.order();
  if (k < 2 || h.edge_count() != k - 1) return std::nullopt;
  const auto degrees = h.degree_sequence();
  if (degrees.front() != k - 1) return std::nullopt;
  if (!std::all_of(degrees.begin() + 1, degrees.end(), [](int d) { return d == 1; })) return std::nullopt;
  return k;
}

std::string star_name(int k) {
  if (k == 2) return "K2";
  if (k == 3) return "P3";
  return "S" + std::to_string(k);
}

std::string classify(const Graph& h) {
  if (auto k = star_order(h)) return star_name(*k);
  Certificate c = certificate(h);
  if (auto it = lookup().find(c); it != lookup().end()) return it->second;
  return "unknown(" + std::to_string(h.order()) + ":" + c.to_hex() + ")";
}

bool is_admissible_class(std::string_view name) {
  const auto& cat = coalition_catalog();
  if (std::any_of(cat.begin(), cat.end(), [&](const CatalogEntry& e) { return e.name == name; })) return true;
  if (name == "K2" || name == "P3") return true;
  if (name.size() >= 2 && name[0] == 'S' && name.find(',') == std::string_view::npos) {
    try {
      const int k = std::stoi(std::string(name.substr(1)));
      return k >= 4 && name == "S" + std::to_string(k);
    } catch (const std::exception&) {
      return false;
    }
  }
  return false;
}

std::string canonical_class_name(std::string_view name) {
  const Graph g = named_graph(name);
  std::string cls = classify(g);
  if (cls.rfind("unknown", 0) == 0) {
    throw Error(Errc::unknown_name, std::string(name) + " is neither a star nor a catalog graph");
  }
  return cls;
}

void write_catalog(std::ostream& out, const std::vector<CatalogEntry>& entries) {
  out << "# ccg-catalog v1\n# name order edges certificate\n";
  for (const CatalogEntry& e : entries) {
    out << e.name << ' ' << e.graph.order() << ' ';
    const auto edges = e.graph.edges();
    if (edges.empty()) out << '-';
    for (std::size_t i = 0; i < edges.size(); ++i) {
      out << (i ? "," : "") << edges[i].u << '-' << edges[i].v;
    }
    const std::string hex = e.certificate.to_hex();
    out << ' ' << (hex.empty() ? "-" : hex) << '\n';
  }
}

std::vector<CatalogEntry> read_catalog(std::istream& in) {
  std::vector<CatalogEntry> out;
  std::string line;
  bool versioned = false;
  while (std::getline(in, line)) {
    if (line.rfind("# ccg-catalog v1", 0) == 0) {
      versioned = true;
      continue;
    }
    if (line.empty() || line[0] == '#') continue;
    if (!versioned) throw Error(Errc::malformed_input, "catalog is missing its version header");
    std::istringstream fields(line);
    std::string name, edge_text, hex;
    int order = 0;
    if (!(fields >> name >> order >> edge_text >> hex)) throw Error(Errc::malformed_input, "bad catalog line: " + line);
    std::vector<Edge> edges;
    if (edge_text != "-") {
      std::istringstream parts(edge_text);
      std::string item;
      while (std::getline(parts, item, ',')) {
        const auto dash = item.find('-');
        if (dash == std::string::npos) throw Error(Errc::malformed_input, "bad catalog edge: " + item);
        edges.push_back({std::stoi(item.substr(0, dash)), std::stoi(item.substr(dash + 1))});
      }
    }
    Graph g(order, edges);
    Certificate c = Certificate::from_hex(order, hex == "-" ? "" : hex);
    if (c != certificate(g)) throw Error(Errc::malformed_input, "certificate mismatch for catalog entry " + name);
    out.push_back({name, std::move(g), std::move(c)});
  }
  return out;
}

}  // namespace ccg
