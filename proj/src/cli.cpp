#include "kempe/cli.hpp"

#include <algorithm>
#include <functional>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "kempe/equivalence.hpp"
#include "kempe/graph.hpp"
#include "kempe/ideals.hpp"
#include "kempe/io.hpp"
#include "kempe/oracle.hpp"
#include "kempe/polynomial.hpp"

namespace kempe::cli {

namespace {

struct Context {
  Graph graph;
  VariableTable table;
  MonomialOrder order;

  Context(const std::string& graph_path, const std::string& order_spec)
      : graph(load_graph(graph_path)),
        table(graph),
        order(order_from_spec(order_spec, table)) {}
};

Json polynomial_json(const Polynomial& p, const MonomialOrder& order, const VariableTable& table) {
  Json j;
  j["text"] = polynomial_text(p, order, table);
  j["terms"] = polynomial_to_json(p, order);
  return j;
}

Json variables_json(const VariableTable& table) {
  Json out = Json::array();
  for (const auto& s : table.stable_sets()) out.push_back(s);
  return out;
}

void emit(std::ostream& out, const Json& j, bool text, const std::function<void(std::ostream&)>& render_text) {
  if (text)
    render_text(out);
  else
    out << j.dump(2) << "\n";
}

// ---- fixtures for the regression suite ------------------------------------

Graph prism_graph() {
  return Graph(6, {{1, 2}, {2, 3}, {1, 3}, {1, 4}, {2, 5}, {3, 6}, {4, 5}, {4, 6}, {5, 6}});
}

// The prism with the {1,3} chord removed.
Graph near_prism_graph() {
  return Graph(6, {{1, 2}, {2, 3}, {1, 4}, {2, 5}, {3, 6}, {4, 5}, {4, 6}, {5, 6}});
}

Graph path_graph(int d) {
  std::vector<std::pair<int, int>> edges;
  for (int v = 1; v < d; ++v) edges.emplace_back(v, v + 1);
  return Graph(d, edges);
}

Graph cycle_graph(int d) {
  std::vector<std::pair<int, int>> edges;
  for (int v = 1; v < d; ++v) edges.emplace_back(v, v + 1);
  edges.emplace_back(d, 1);
  return Graph(d, edges);
}

Graph complete_graph(int d) {
  std::vector<std::pair<int, int>> edges;
  for (int u = 1; u <= d; ++u)
    for (int v = u + 1; v <= d; ++v) edges.emplace_back(u, v);
  return Graph(d, edges);
}

Graph complete_bipartite_graph(int a, int b) {
  std::vector<std::pair<int, int>> edges;
  for (int u = 1; u <= a; ++u)
    for (int v = a + 1; v <= a + b; ++v) edges.emplace_back(u, v);
  return Graph(a + b, edges);
}

}  // namespace

std::vector<SuiteItem> run_regression_suite(const std::string& only) {
  struct Item {
    std::string name;
    std::function<std::string()> check;  // empty string on pass, detail on failure
  };

  std::vector<Item> items;

  items.push_back({"stable-set-table", [] {
    VariableTable table(prism_graph());
    std::vector<VertexSet> expected = {{}, {1}, {2}, {3}, {4}, {5}, {6},
                                       {1, 5}, {1, 6}, {2, 4}, {2, 6}, {3, 4}, {3, 5}};
    if (table.stable_sets() != expected)
      return std::string("stable set table differs from the 13 expected entries");
    return std::string();
  }});

  items.push_back({"equivalence-positive", [] {
    Graph g = near_prism_graph();
    VariableTable table(g);
    auto basis = kempe_groebner_basis(g, table, MonomialOrder::grevlex_default(table.size()));
    Coloring f({{1, 5}, {2, 6}, {3, 4}});
    Coloring h({{1, 3, 5}, {2, 6}, {4}});
    if (!are_equivalent(g, f, h, basis, table)) return std::string("expected an equivalent pair");
    return std::string();
  }});

  items.push_back({"equivalence-negative", [] {
    Graph g = prism_graph();
    VariableTable table(g);
    auto basis = kempe_groebner_basis(g, table, MonomialOrder::grevlex_default(table.size()));
    Coloring f({{1, 5}, {2, 6}, {3, 4}});
    Coloring h({{1, 6}, {2, 4}, {3, 5}});
    if (are_equivalent(g, f, h, basis, table)) return std::string("expected an inequivalent pair");
    return std::string();
  }});

  items.push_back({"standard-monomials", [] {
    Graph g = prism_graph();
    VariableTable table(g);
    auto basis = kempe_groebner_basis(g, table, MonomialOrder::grevlex_default(table.size()));
    auto reps = representative_system(g, 3, basis, table);
    if (reps.all.size() != 65)
      return "expected 65 degree-3 standard monomials, got " + std::to_string(reps.all.size());
    std::vector<Coloring> expected_full = {Coloring({{1, 5}, {2, 6}, {3, 4}}),
                                           Coloring({{1, 6}, {2, 4}, {3, 5}})};
    std::sort(expected_full.begin(), expected_full.end());
    std::vector<Coloring> full = reps.full;
    std::sort(full.begin(), full.end());
    if (full != expected_full) return std::string("full-support representatives differ");
    return std::string();
  }});

  items.push_back({"hilbert-series", [] {
    Graph g = prism_graph();
    VariableTable table(g);
    auto basis = kempe_groebner_basis(g, table, MonomialOrder::grevlex_default(table.size()));
    std::vector<long long> expected = {1, 13, 49, 65, 64, 64};
    auto values = hilbert_series(basis, 5);
    if (values != expected) {
      std::ostringstream out;
      out << "hilbert values differ:";
      for (auto v : values) out << ' ' << v;
      return out.str();
    }
    return std::string();
  }});

  items.push_back({"subgraph-hilbert", [] {
    Graph g = prism_graph();
    for (int drop = 1; drop <= 6; ++drop) {
      VertexSet w;
      for (int v = 1; v <= 6; ++v)
        if (v != drop) w.push_back(v);
      Graph sub = induced_subgraph(g, w).graph;
      VariableTable table(sub);
      auto basis = kempe_groebner_basis(sub, table, MonomialOrder::grevlex_default(table.size()));
      long long h = hilbert(basis, 3);
      if (h != 32)
        return "dropping vertex " + std::to_string(drop) + " gives H=" + std::to_string(h) +
               ", expected 32";
    }
    return std::string();
  }});

  items.push_back({"class-counts", [] {
    Graph g = prism_graph();
    VariableTable table(g);
    auto basis = kempe_groebner_basis(g, table, MonomialOrder::grevlex_default(table.size()));
    long long a3 = class_count(g, 3, basis, table, CountMethod::Representatives);
    long long b3 = class_count(g, 3, basis, table, CountMethod::InclusionExclusion);
    long long a4 = class_count(g, 4, basis, table, CountMethod::Representatives);
    long long a5 = class_count(g, 5, basis, table, CountMethod::Representatives);
    if (a3 != 2 || b3 != 2 || a4 != 1 || a5 != 1) {
      std::ostringstream out;
      out << "class counts a3=" << a3 << " b3=" << b3 << " a4=" << a4 << " a5=" << a5
          << ", expected 2/2/1/1";
      return out.str();
    }
    return std::string();
  }});

  items.push_back({"chain-cases", [] {
    std::vector<std::pair<Graph, ChainCase>> cases = {
        {complete_graph(4), ChainCase::I},
        {complete_bipartite_graph(3, 3), ChainCase::II},
        {path_graph(4), ChainCase::III},
        {cycle_graph(6).complement(), ChainCase::IV},
        {cycle_graph(6), ChainCase::V},
    };
    for (std::size_t i = 0; i < cases.size(); ++i) {
      ChainCase got = classify_chain(cases[i].first);
      if (got != cases[i].second)
        return "case " + std::to_string(i) + " classified as " + chain_case_name(got) +
               ", expected " + chain_case_name(cases[i].second);
    }
    return std::string();
  }});

  items.push_back({"membership-factorization", [] {
    Graph g = near_prism_graph();
    VariableTable table(g);
    MonomialOrder order = MonomialOrder::grevlex_default(table.size());
    Monomial m15_34 = Monomial::variable(table.index_of({1, 5})).times(Monomial::variable(table.index_of({3, 4})));
    Monomial m135_4 = Monomial::variable(table.index_of({1, 3, 5})).times(Monomial::variable(table.index_of({4})));
    Polynomial quad = binomial_difference(m15_34, m135_4);
    auto basis_j = buchberger(gens_J(g, table, order).generators, order);
    if (!basis_j.contains(quad)) return std::string("quadratic relation is not in the 2-coloring ideal");
    Monomial mf = coloring_to_monomial(Coloring({{1, 5}, {2, 6}, {3, 4}}), table);
    Monomial mg = coloring_to_monomial(Coloring({{1, 3, 5}, {2, 6}, {4}}), table);
    Monomial cofactor = Monomial::variable(table.index_of({2, 6}));
    if (binomial_difference(mf, mg) != quad.times(cofactor))
      return std::string("difference does not factor through the quadratic relation");
    return std::string();
  }});

  items.push_back({"hilbert-stabilization", [] {
    Graph g = prism_graph();
    VariableTable table(g);
    auto basis = kempe_groebner_basis(g, table, MonomialOrder::grevlex_default(table.size()));
    for (int k = max_degree(g) + 1; k <= max_degree(g) + 3; ++k) {
      long long h = hilbert(basis, k);
      if (h != 64) return "H(" + std::to_string(k) + ")=" + std::to_string(h) + ", expected 64";
    }
    return std::string();
  }});

  std::vector<SuiteItem> results;
  bool matched = false;
  for (auto& item : items) {
    if (!only.empty() && item.name.find(only) == std::string::npos) continue;
    matched = true;
    SuiteItem result;
    result.name = item.name;
    try {
      result.detail = item.check();
      result.pass = result.detail.empty();
    } catch (const std::exception& e) {
      result.pass = false;
      result.detail = e.what();
    }
    results.push_back(std::move(result));
  }
  if (!only.empty() && !matched) throw DomainError("no regression item matches: " + only);
  return results;
}

namespace {

int run_impl(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Kempe equivalence of graph colorings via binomial ideals and Groebner bases"};
  app.require_subcommand(1);

  std::string graph_path, order_spec = "bysize", format = "json";
  std::string f_path, g_path, coloring_path, sequence_path, which = "K", only, method = "a";
  int k = 0, max_k = 0;
  bool want_groebner = false;
  std::size_t fiber_cap = kDefaultFiberCap;
  oracle::Caps caps;

  auto add_common = [&](CLI::App* cmd, bool needs_graph = true) {
    if (needs_graph)
      cmd->add_option("--graph", graph_path, "graph JSON file")->required();
    cmd->add_option("--order", order_spec,
                    "variable order: \"bysize\" or a JSON file listing all stable sets, smallest first");
    cmd->add_option("--format", format, "output format")->check(CLI::IsMember({"json", "text"}));
  };

  auto* stable_sets = app.add_subcommand("stable-sets", "enumerate the stable sets of a graph");
  add_common(stable_sets);

  auto* ideal = app.add_subcommand("ideal", "emit generators (or the reduced Groebner basis) of an ideal");
  add_common(ideal);
  ideal->add_option("--which", which, "ideal: L, J, M, K, Q2 or I")->check(CLI::IsMember({"L", "J", "M", "K", "Q2", "I"}));
  ideal->add_flag("--groebner", want_groebner, "emit the reduced Groebner basis instead of the generators");

  auto* groebner = app.add_subcommand("groebner", "emit the reduced Groebner basis of an ideal");
  add_common(groebner);
  groebner->add_option("--which", which, "ideal: L, J, M, K, Q2 or I")->check(CLI::IsMember({"L", "J", "M", "K", "Q2", "I"}));

  auto* equiv = app.add_subcommand("equiv", "decide whether two colorings are Kempe equivalent");
  add_common(equiv);
  equiv->add_option("--f", f_path, "first coloring JSON file")->required();
  equiv->add_option("--g", g_path, "second coloring JSON file")->required();

  auto* reps = app.add_subcommand("reps", "complete representative system for the k-color classes");
  add_common(reps);
  reps->add_option("--k", k, "number of colors")->required();

  auto* hilbert_cmd = app.add_subcommand("hilbert", "Hilbert function values of the Kempe ideal");
  add_common(hilbert_cmd);
  hilbert_cmd->add_option("--max-k", max_k, "largest degree")->required();

  auto* classes = app.add_subcommand("classes", "number of k-color classes of the whole graph");
  add_common(classes);
  classes->add_option("--k", k, "number of colors")->required();
  classes->add_option("--method", method, "a = representatives, b = inclusion-exclusion")
      ->check(CLI::IsMember({"a", "b"}));

  auto* class_of = app.add_subcommand("class-of", "enumerate the class of a coloring");
  add_common(class_of);
  class_of->add_option("--coloring", coloring_path, "coloring JSON file")->required();
  class_of->add_option("--k", k, "pad the coloring with empty classes up to k");

  auto* kempe_basis_cmd = app.add_subcommand("kempe-basis", "switching sequences for the basis binomials");
  add_common(kempe_basis_cmd);
  kempe_basis_cmd->add_option("--fiber-cap", fiber_cap, "fiber search node cap");

  auto* sequence = app.add_subcommand("sequence", "explicit switching sequence between two colorings");
  add_common(sequence);
  sequence->add_option("--f", f_path, "first coloring JSON file")->required();
  sequence->add_option("--g", g_path, "second coloring JSON file")->required();
  sequence->add_option("--k", k, "pad both colorings with empty classes up to k");
  sequence->add_option("--fiber-cap", fiber_cap, "fiber search node cap");

  auto* oracle_cmd = app.add_subcommand("oracle", "brute-force ground truth");
  auto* oracle_classes = oracle_cmd->add_subcommand("classes", "classes by exhaustive switching search");
  add_common(oracle_classes);
  oracle_classes->add_option("--k", k, "number of colors")->required();
  oracle_classes->add_option("--max-vertices", caps.max_vertices, "oracle vertex cap");
  oracle_classes->add_option("--max-colors", caps.max_colors, "oracle color cap");
  auto* oracle_equiv = oracle_cmd->add_subcommand("equiv", "equivalence by breadth-first search");
  add_common(oracle_equiv);
  oracle_equiv->add_option("--f", f_path, "first coloring JSON file")->required();
  oracle_equiv->add_option("--g", g_path, "second coloring JSON file")->required();
  oracle_equiv->add_option("--max-vertices", caps.max_vertices, "oracle vertex cap");
  oracle_equiv->add_option("--max-colors", caps.max_colors, "oracle color cap");
  auto* oracle_verify = oracle_cmd->add_subcommand("verify", "check a switching sequence");
  add_common(oracle_verify);
  oracle_verify->add_option("--seq", sequence_path, "sequence JSON file (array of colorings)")->required();

  auto* suite = app.add_subcommand("paper-suite", "run the bundled known-answer regression items");
  suite->add_option("--only", only, "substring filter for item names");
  suite->add_option("--format", format, "output format")->check(CLI::IsMember({"json", "text"}));

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    app.exit(e, out, err);
    return 0;
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return 1;
  }

  const bool text = format == "text";

  if (stable_sets->parsed()) {
    Context ctx(graph_path, order_spec);
    Json j;
    j["vertices"] = ctx.graph.vertex_count();
    j["count"] = ctx.table.size();
    j["stable_sets"] = variables_json(ctx.table);
    emit(out, j, text, [&](std::ostream& o) {
      o << ctx.table.size() << " stable sets\n";
      for (int i = 0; i < ctx.table.size(); ++i) o << ctx.table.variable_name(i) << "\n";
    });
    return 0;
  }

  if (ideal->parsed() || groebner->parsed()) {
    Context ctx(graph_path, order_spec);
    IdealKind kind = ideal_kind_from_name(which);
    bool basis_output = want_groebner || groebner->parsed() || kind == IdealKind::I;
    std::vector<Polynomial> polynomials;
    if (basis_output) {
      if (kind == IdealKind::I)
        polynomials = groebner_I(ctx.graph, ctx.table).elements;
      else
        polynomials = buchberger(generators_for(kind, ctx.graph, ctx.table, ctx.order).generators,
                                 ctx.order)
                          .elements;
    } else {
      polynomials = generators_for(kind, ctx.graph, ctx.table, ctx.order).generators;
    }
    Json j;
    j["which"] = ideal_kind_name(kind);
    j["groebner"] = basis_output;
    j["variables"] = variables_json(ctx.table);
    j["count"] = polynomials.size();
    Json list = Json::array();
    for (const auto& p : polynomials) list.push_back(polynomial_json(p, ctx.order, ctx.table));
    j["polynomials"] = std::move(list);
    emit(out, j, text, [&](std::ostream& o) {
      o << ideal_kind_name(kind) << (basis_output ? " reduced Groebner basis, " : " generators, ")
        << polynomials.size() << " polynomials\n";
      for (const auto& p : polynomials) o << polynomial_text(p, ctx.order, ctx.table) << "\n";
    });
    return 0;
  }

  if (equiv->parsed()) {
    Context ctx(graph_path, order_spec);
    Coloring f = load_coloring(f_path);
    Coloring h = load_coloring(g_path);
    auto basis = kempe_groebner_basis(ctx.graph, ctx.table, ctx.order);
    bool eq = are_equivalent(ctx.graph, f, h, basis, ctx.table);
    Json j;
    j["equivalent"] = eq;
    emit(out, j, text, [&](std::ostream& o) { o << (eq ? "equivalent\n" : "not equivalent\n"); });
    return 0;
  }

  if (reps->parsed()) {
    Context ctx(graph_path, order_spec);
    auto basis = kempe_groebner_basis(ctx.graph, ctx.table, ctx.order);
    auto system = representative_system(ctx.graph, k, basis, ctx.table);
    Json j;
    j["k"] = k;
    j["all_count"] = system.all.size();
    j["full_count"] = system.full.size();
    Json all = Json::array(), full = Json::array();
    for (const auto& f : system.all) all.push_back(coloring_to_json(f));
    for (const auto& f : system.full) full.push_back(coloring_to_json(f));
    j["all"] = std::move(all);
    j["full"] = std::move(full);
    emit(out, j, text, [&](std::ostream& o) {
      o << system.all.size() << " representatives, " << system.full.size() << " with full support\n";
      for (const auto& f : system.full) o << coloring_text(f) << "\n";
    });
    return 0;
  }

  if (hilbert_cmd->parsed()) {
    Context ctx(graph_path, order_spec);
    auto basis = kempe_groebner_basis(ctx.graph, ctx.table, ctx.order);
    auto values = hilbert_series(basis, max_k);
    Json j;
    j["max_k"] = max_k;
    j["values"] = values;
    emit(out, j, text, [&](std::ostream& o) {
      for (int i = 0; i <= max_k; ++i) o << "H(" << i << ") = " << values[i] << "\n";
    });
    return 0;
  }

  if (classes->parsed()) {
    Context ctx(graph_path, order_spec);
    auto basis = kempe_groebner_basis(ctx.graph, ctx.table, ctx.order);
    CountMethod m = method == "a" ? CountMethod::Representatives : CountMethod::InclusionExclusion;
    long long count = class_count(ctx.graph, k, basis, ctx.table, m);
    Json j;
    j["k"] = k;
    j["method"] = method;
    j["count"] = count;
    emit(out, j, text, [&](std::ostream& o) { o << count << "\n"; });
    return 0;
  }

  if (class_of->parsed()) {
    Context ctx(graph_path, order_spec);
    Coloring f = load_coloring(coloring_path);
    if (k > 0) f = f.padded_to(k);
    auto basis = kempe_groebner_basis(ctx.graph, ctx.table, ctx.order);
    auto members = enumerate_class(ctx.graph, f, basis, ctx.table);
    Json j;
    j["k"] = f.k();
    j["size"] = members.size();
    Json list = Json::array();
    for (const auto& member : members) list.push_back(coloring_to_json(member));
    j["class"] = std::move(list);
    emit(out, j, text, [&](std::ostream& o) {
      o << members.size() << " colorings\n";
      for (const auto& member : members) o << coloring_text(member) << "\n";
    });
    return 0;
  }

  if (kempe_basis_cmd->parsed()) {
    Context ctx(graph_path, order_spec);
    auto basis = kempe_groebner_basis(ctx.graph, ctx.table, ctx.order);
    auto entries = kempe_basis(ctx.graph, basis, ctx.table, fiber_cap);
    Json j;
    j["count"] = entries.size();
    Json list = Json::array();
    for (const auto& entry : entries) {
      Json e;
      e["binomial"] = polynomial_json(entry.binomial, ctx.order, ctx.table);
      e["sequence"] = sequence_to_json(entry.sequence);
      list.push_back(std::move(e));
    }
    j["entries"] = std::move(list);
    emit(out, j, text, [&](std::ostream& o) {
      o << entries.size() << " entries\n";
      for (const auto& entry : entries) {
        o << polynomial_text(entry.binomial, ctx.order, ctx.table) << ":";
        for (const auto& f : entry.sequence) o << " " << coloring_text(f);
        o << "\n";
      }
    });
    return 0;
  }

  if (sequence->parsed()) {
    Context ctx(graph_path, order_spec);
    Coloring f = load_coloring(f_path);
    Coloring h = load_coloring(g_path);
    if (k > 0) {
      f = f.padded_to(k);
      h = h.padded_to(k);
    }
    auto basis = kempe_groebner_basis(ctx.graph, ctx.table, ctx.order);
    auto kbasis = kempe_basis(ctx.graph, basis, ctx.table, fiber_cap);
    auto result = switching_sequence(ctx.graph, f, h, basis, kbasis, ctx.table);
    Json j;
    j["equivalent"] = result.equivalent;
    if (result.equivalent) {
      j["length"] = result.sequence.size();
      j["sequence"] = sequence_to_json(result.sequence);
    }
    emit(out, j, text, [&](std::ostream& o) {
      if (!result.equivalent) {
        o << "not equivalent\n";
        return;
      }
      for (const auto& step : result.sequence) o << coloring_text(step) << "\n";
    });
    return 0;
  }

  if (oracle_classes->parsed()) {
    Context ctx(graph_path, order_spec);
    auto kg = oracle::classes_bruteforce(ctx.graph, k, ctx.graph.vertices(), caps);
    std::vector<std::size_t> sizes;
    for (const auto& component : kg.components()) sizes.push_back(component.size());
    std::sort(sizes.rbegin(), sizes.rend());
    Json j;
    j["k"] = k;
    j["coloring_count"] = kg.nodes.size();
    j["class_count"] = kg.component_count;
    j["class_sizes"] = sizes;
    emit(out, j, text, [&](std::ostream& o) {
      o << kg.component_count << " classes over " << kg.nodes.size() << " colorings\n";
    });
    return 0;
  }

  if (oracle_equiv->parsed()) {
    Context ctx(graph_path, order_spec);
    Coloring f = load_coloring(f_path);
    Coloring h = load_coloring(g_path);
    bool eq = oracle::are_equivalent_bruteforce(ctx.graph, f, h, caps);
    Json j;
    j["equivalent"] = eq;
    emit(out, j, text, [&](std::ostream& o) { o << (eq ? "equivalent\n" : "not equivalent\n"); });
    return 0;
  }

  if (oracle_verify->parsed()) {
    Context ctx(graph_path, order_spec);
    auto seq = sequence_from_json(parse_json_file(sequence_path));
    auto result = oracle::verify_sequence(ctx.graph, seq);
    Json j;
    j["ok"] = result.ok;
    if (!result.ok) j["first_failure"] = result.first_failure;
    emit(out, j, text, [&](std::ostream& o) {
      if (result.ok)
        o << "valid sequence\n";
      else
        o << "invalid at index " << result.first_failure << "\n";
    });
    return 0;
  }

  if (suite->parsed()) {
    auto results = run_regression_suite(only);
    bool all_pass = true;
    for (const auto& item : results) all_pass = all_pass && item.pass;
    if (text) {
      for (const auto& item : results) {
        out << (item.pass ? "PASS" : "FAIL") << ": " << item.name;
        if (!item.detail.empty()) out << " (" << item.detail << ")";
        out << "\n";
      }
      out << (all_pass ? "all items passed\n" : "some items FAILED\n");
    } else {
      Json j;
      Json list = Json::array();
      for (const auto& item : results) {
        Json e;
        e["name"] = item.name;
        e["pass"] = item.pass;
        if (!item.detail.empty()) e["detail"] = item.detail;
        list.push_back(std::move(e));
      }
      j["items"] = std::move(list);
      j["pass"] = all_pass;
      out << j.dump(2) << "\n";
    }
    return all_pass ? 0 : 1;
  }

  throw DomainError("no subcommand selected");
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  try {
    return run_impl(args, out, err);
  } catch (const DomainError& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  } catch (const ResourceError& e) {
    err << "resource error: " << e.what() << "\n";
    return 2;
  } catch (const InternalError& e) {
    err << "internal error: " << e.what() << "\n";
    return 3;
  }
}

}  // namespace kempe::cli
