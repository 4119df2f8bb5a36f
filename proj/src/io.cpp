#include "kempe/io.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

namespace kempe {

namespace {

int expect_int(const Json& j, const std::string& what) {
  if (!j.is_number_integer()) throw DomainError(what + " must be an integer");
  return j.get<int>();
}

VertexSet vertex_set_from_json(const Json& j, const std::string& what) {
  if (!j.is_array()) throw DomainError(what + " must be an array of vertex ids");
  VertexSet out;
  for (const auto& entry : j) out.push_back(expect_int(entry, what + " entry"));
  return sorted_set(std::move(out));
}

}  // namespace

Graph graph_from_json(const Json& j) {
  if (!j.is_object()) throw DomainError("graph must be a JSON object");
  if (!j.contains("vertices")) throw DomainError("graph is missing \"vertices\"");
  int d = expect_int(j.at("vertices"), "\"vertices\"");
  std::vector<std::pair<int, int>> edges;
  if (j.contains("edges")) {
    if (!j.at("edges").is_array()) throw DomainError("\"edges\" must be an array");
    for (const auto& e : j.at("edges")) {
      if (!e.is_array() || e.size() != 2) throw DomainError("each edge must be a pair [u,v]");
      edges.emplace_back(expect_int(e[0], "edge endpoint"), expect_int(e[1], "edge endpoint"));
    }
  }
  return Graph(d, edges);
}

Json graph_to_json(const Graph& g) {
  Json j;
  j["vertices"] = g.vertex_count();
  Json edges = Json::array();
  for (auto [u, v] : g.edges()) edges.push_back(Json::array({u, v}));
  j["edges"] = std::move(edges);
  return j;
}

Coloring coloring_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("classes"))
    throw DomainError("coloring must be an object with \"classes\"");
  if (!j.at("classes").is_array()) throw DomainError("\"classes\" must be an array of arrays");
  std::vector<VertexSet> classes;
  for (const auto& cls : j.at("classes")) classes.push_back(vertex_set_from_json(cls, "color class"));
  return Coloring(std::move(classes));
}

Json coloring_to_json(const Coloring& f) {
  Json classes = Json::array();
  for (const auto& cls : f.classes()) classes.push_back(cls);
  Json j;
  j["classes"] = std::move(classes);
  return j;
}

std::vector<Coloring> sequence_from_json(const Json& j) {
  if (!j.is_array()) throw DomainError("sequence must be a JSON array of colorings");
  std::vector<Coloring> out;
  for (const auto& entry : j) out.push_back(coloring_from_json(entry));
  return out;
}

Json sequence_to_json(const std::vector<Coloring>& sequence) {
  Json out = Json::array();
  for (const auto& f : sequence) out.push_back(coloring_to_json(f));
  return out;
}

Json parse_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw DomainError("cannot open file: " + path);
  try {
    return Json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw DomainError("malformed JSON in " + path + ": " + e.what());
  }
}

Graph load_graph(const std::string& path) { return graph_from_json(parse_json_file(path)); }

Coloring load_coloring(const std::string& path) { return coloring_from_json(parse_json_file(path)); }

std::string monomial_text(const Monomial& m, const VariableTable& table) {
  if (m.is_one()) return "1";
  // Factors read in lexicographic order of the vertex sets, x{} first.
  auto factors = m.exponents();
  std::sort(factors.begin(), factors.end(), [&](const auto& a, const auto& b) {
    return table.set_at(a.first) < table.set_at(b.first);
  });
  std::ostringstream out;
  bool first = true;
  for (auto& [v, e] : factors) {
    if (!first) out << '*';
    first = false;
    out << table.variable_name(v);
    if (e > 1) out << '^' << e;
  }
  return out.str();
}

std::string polynomial_text(const Polynomial& p, const MonomialOrder& order,
                            const VariableTable& table) {
  if (p.is_zero()) return "0";
  auto terms = p.terms();
  std::sort(terms.begin(), terms.end(),
            [&](const auto& a, const auto& b) { return order.less(b.first, a.first); });
  std::ostringstream out;
  bool first = true;
  for (auto& [m, c] : terms) {
    if (first) {
      if (c < 0) out << '-';
    } else {
      out << (c < 0 ? " - " : " + ");
    }
    first = false;
    Coeff mag = c < 0 ? -c : c;
    if (mag != 1 || m.is_one()) {
      out << mag;
      if (!m.is_one()) out << '*';
    }
    if (!m.is_one()) out << monomial_text(m, table);
  }
  return out.str();
}

Json polynomial_to_json(const Polynomial& p, const MonomialOrder& order) {
  auto terms = p.terms();
  std::sort(terms.begin(), terms.end(),
            [&](const auto& a, const auto& b) { return order.less(b.first, a.first); });
  Json out = Json::array();
  for (auto& [m, c] : terms) {
    Json term;
    term["coeff"] = c;
    Json exps = Json::array();
    for (auto& [v, e] : m.exponents()) exps.push_back(Json::array({v, e}));
    term["exponents"] = std::move(exps);
    out.push_back(std::move(term));
  }
  return out;
}

MonomialOrder order_from_spec(const std::string& spec, const VariableTable& table) {
  if (spec.empty() || spec == "bysize") return MonomialOrder::grevlex_default(table.size());
  Json j = parse_json_file(spec);
  if (!j.is_array()) throw DomainError("order file must be a JSON array of stable sets");
  if (static_cast<int>(j.size()) != table.size())
    throw DomainError("order file lists " + std::to_string(j.size()) + " variables, expected " +
                      std::to_string(table.size()));
  // Listed smallest-first; the order wants them descending.
  std::vector<VarIndex> descending;
  std::vector<char> seen(table.size(), 0);
  for (const auto& entry : j) {
    VertexSet s = vertex_set_from_json(entry, "order entry");
    int index = table.index_of(s);
    if (seen[index]) throw DomainError("order file repeats " + vertex_set_text(s));
    seen[index] = 1;
    descending.push_back(index);
  }
  std::reverse(descending.begin(), descending.end());
  return MonomialOrder::grevlex(std::move(descending));
}

}  // namespace kempe
