#include <doctest.h>

#include <algorithm>
#include <map>
#include <random>
#include <set>

#include "fixtures.hpp"
#include "kempe/equivalence.hpp"
#include "kempe/oracle.hpp"

using namespace kempe;
namespace fx = kempe::fixtures;

namespace {

struct Setup {
  Graph graph;
  VariableTable table;
  GroebnerBasis basis;

  explicit Setup(Graph g)
      : graph(std::move(g)),
        table(graph),
        basis(kempe_groebner_basis(graph, table, MonomialOrder::grevlex_default(table.size()))) {}
};

Monomial var_product(const VariableTable& table, const std::vector<VertexSet>& sets) {
  Monomial m;
  for (const auto& s : sets) m = m.times(Monomial::variable(table.index_of(s)));
  return m;
}

}  // namespace

TEST_CASE("coloring to monomial and back") {
  VariableTable table(fx::near_prism());
  Coloring f({{1, 5}, {2, 6}, {3, 4}});
  Monomial m = coloring_to_monomial(f, table);
  CHECK(m == var_product(table, {{1, 5}, {2, 6}, {3, 4}}));
  CHECK(monomial_to_coloring(m, table) == f);

  CHECK(coloring_to_monomial(Coloring({{}, {}, {}}), table) == Monomial::variable(0, 3));
  CHECK(monomial_to_coloring(Monomial::variable(0, 3), table) == Coloring({{}, {}, {}}));

  CHECK_THROWS_AS(monomial_to_coloring(var_product(table, {{1}, {1, 5}}), table), DomainError);
  CHECK_THROWS_AS(coloring_to_monomial(Coloring({{1, 4}}), table), DomainError);
}

TEST_CASE("equivalence decisions on the worked pairs") {
  Setup near(fx::near_prism());
  Coloring f({{1, 5}, {2, 6}, {3, 4}});
  Coloring g52({{1, 3, 5}, {2, 6}, {4}});
  CHECK(are_equivalent(near.graph, f, g52, near.basis, near.table));
  CHECK(are_equivalent(near.graph, f, f, near.basis, near.table));

  Setup prism(fx::prism());
  Coloring g53({{1, 6}, {2, 4}, {3, 5}});
  CHECK_FALSE(are_equivalent(prism.graph, f, g53, prism.basis, prism.table));

  CHECK_THROWS_AS(are_equivalent(prism.graph, f, f.padded_to(4), prism.basis, prism.table),
                  DomainError);
  CHECK_THROWS_AS(are_equivalent(prism.graph, f, Coloring({{1, 6}, {2, 4}, {3}}), prism.basis,
                                 prism.table),
                  DomainError);
  CHECK_THROWS_AS(are_equivalent(prism.graph, Coloring({{1, 3}, {2}, {4, 5, 6}}), g53, prism.basis,
                                 prism.table),
                  DomainError);
}

TEST_CASE("representative systems") {
  Setup prism(fx::prism());
  auto reps = representative_system(prism.graph, 3, prism.basis, prism.table);
  CHECK(reps.all.size() == 65);
  std::set<Coloring> full(reps.full.begin(), reps.full.end());
  CHECK(full == std::set<Coloring>{Coloring({{1, 5}, {2, 6}, {3, 4}}),
                                   Coloring({{1, 6}, {2, 4}, {3, 5}})});

  Setup k3(fx::complete(3));
  auto k3_reps = representative_system(k3.graph, 3, k3.basis, k3.table);
  CHECK(k3_reps.full == std::vector<Coloring>{Coloring({{1}, {2}, {3}})});

  auto zero = representative_system(prism.graph, 0, prism.basis, prism.table);
  CHECK(zero.all == std::vector<Coloring>{Coloring()});
  CHECK(zero.full.empty());
}

TEST_CASE("hilbert values") {
  Setup prism(fx::prism());
  CHECK(hilbert_series(prism.basis, 5) == std::vector<long long>{1, 13, 49, 65, 64, 64});
  CHECK(hilbert(prism.basis, 6) == 64);
  CHECK(hilbert(prism.basis, 1) == prism.table.size());

  std::mt19937 rng(37);
  for (int trial = 0; trial < 4; ++trial) {
    Setup s(fx::random_graph(rng, 4));
    CHECK(hilbert(s.basis, 1) == s.table.size());
    CHECK(hilbert(s.basis, max_degree(s.graph) + 1) == 1 << s.graph.vertex_count());
  }
}

TEST_CASE("class counts by both methods") {
  Setup prism(fx::prism());
  CHECK(class_count(prism.graph, 3, prism.basis, prism.table, CountMethod::Representatives) == 2);
  CHECK(class_count(prism.graph, 3, prism.basis, prism.table, CountMethod::InclusionExclusion) == 2);
  CHECK(class_count(prism.graph, 4, prism.basis, prism.table, CountMethod::Representatives) == 1);
  CHECK(class_count(prism.graph, 4, prism.basis, prism.table, CountMethod::InclusionExclusion) == 1);

  Setup k3(fx::complete(3));
  CHECK(class_count(k3.graph, 3, k3.basis, k3.table, CountMethod::Representatives) == 1);
}

TEST_CASE("class enumeration") {
  Setup k3(fx::complete(3));
  Coloring rainbow({{1}, {2}, {3}});
  CHECK(enumerate_class(k3.graph, rainbow, k3.basis, k3.table) ==
        std::vector<Coloring>{rainbow});

  Setup prism(fx::prism());
  Coloring f({{1, 5}, {2, 6}, {3, 4}});
  auto cls = enumerate_class(prism.graph, f, prism.basis, prism.table);
  CHECK(std::find(cls.begin(), cls.end(), Coloring({{1, 6}, {2, 4}, {3, 5}})) == cls.end());
  CHECK(std::find(cls.begin(), cls.end(), f) != cls.end());

  Setup near(fx::near_prism());
  auto near_cls = enumerate_class(near.graph, f, near.basis, near.table);
  CHECK(std::find(near_cls.begin(), near_cls.end(), Coloring({{1, 3, 5}, {2, 6}, {4}})) !=
        near_cls.end());
}

TEST_CASE("class enumeration agrees with the oracle components") {
  std::mt19937 rng(41);
  for (int trial = 0; trial < 12; ++trial) {
    Setup s(fx::random_graph(rng, 3 + static_cast<int>(rng() % 3)));
    for (int k = 2; k <= 3; ++k) {
      auto kg = oracle::classes_bruteforce(s.graph, k, s.graph.vertices());
      for (const auto& component : kg.components()) {
        std::vector<Coloring> expected;
        for (int node : component) expected.push_back(kg.nodes[node]);
        std::sort(expected.begin(), expected.end());
        CHECK(enumerate_class(s.graph, expected.front(), s.basis, s.table) == expected);
      }
    }
  }
}

TEST_CASE("quadratic switch sequences") {
  Graph p3 = fx::path(3);
  auto seq = quad_switch_sequence(p3, {1, 3}, {}, {1}, {3});
  CHECK(seq == std::vector<Coloring>{Coloring({{1, 3}, {}}), Coloring({{1}, {3}})});

  auto fixed = quad_switch_sequence(p3, {1, 3}, {}, {1, 3}, {});
  CHECK(fixed == std::vector<Coloring>{Coloring({{1, 3}, {}})});

  auto near_seq = quad_switch_sequence(fx::near_prism(), {1, 5}, {3, 4}, {1, 3, 5}, {4});
  CHECK(near_seq.size() == 2);
  CHECK(near_seq.front() == Coloring({{1, 5}, {3, 4}}));
  CHECK(near_seq.back() == Coloring({{1, 3, 5}, {4}}));

  CHECK_THROWS_AS(quad_switch_sequence(p3, {1, 3}, {}, {1}, {2}), DomainError);
  CHECK_THROWS_AS(quad_switch_sequence(p3, {1}, {1, 3}, {1}, {3}), DomainError);
}

TEST_CASE("lifting sequences by a cofactor") {
  VariableTable table(fx::near_prism());
  auto base = quad_switch_sequence(fx::near_prism(), {1, 5}, {3, 4}, {1, 3, 5}, {4});

  auto lifted = lift_sequence(Monomial::variable(table.index_of({2, 6})), base, table);
  CHECK(lifted.front() == Coloring({{1, 5}, {2, 6}, {3, 4}}));
  CHECK(lifted.back() == Coloring({{1, 3, 5}, {2, 6}, {4}}));
  for (std::size_t i = 0; i + 1 < lifted.size(); ++i) {
    auto check = oracle::verify_sequence(fx::near_prism(), lifted);
    CHECK(check.ok);
  }

  auto padded = lift_sequence(Monomial::variable(0), base, table);
  CHECK(padded.front().k() == 3);
  CHECK(padded.front().empty_class_count() == 1);

  CHECK(lift_sequence(Monomial::one(), base, table) == base);

  CHECK_THROWS_AS(lift_sequence(Monomial::variable(table.index_of({3, 5})), base, table),
                  DomainError);
}

TEST_CASE("fiber chains") {
  Graph near = fx::near_prism();
  VariableTable table(near);
  auto order = MonomialOrder::grevlex_default(table.size());
  auto gens = gens_J(near, table, order);

  // A generator itself connects in one step.
  REQUIRE_FALSE(gens.generators.empty());
  auto chain = fiber_chain(near, gens.generators.front(), gens, table);
  CHECK(chain.steps.size() == 1);
  CHECK(chain.monomials.size() == 2);

  // Equal sides produce the empty chain.
  CHECK(fiber_chain(near, Polynomial::zero(), gens, table).steps.empty());

  // The worked ternary difference factors through one generator move with the
  // untouched class as cofactor.
  Polynomial b = binomial_difference(var_product(table, {{1, 5}, {2, 6}, {3, 4}}),
                                     var_product(table, {{1, 3, 5}, {2, 6}, {4}}));
  auto worked = fiber_chain(near, b, gens, table);
  REQUIRE(worked.steps.size() == 1);
  CHECK(worked.steps[0].cofactor == Monomial::variable(table.index_of({2, 6})));

  CHECK_THROWS_AS(fiber_chain(near, binomial_difference(var_product(table, {{1}, {2}}),
                                                        var_product(table, {{1}, {3}})),
                              gens, table),
                  DomainError);
  CHECK_THROWS_AS(fiber_chain(near, b, gens, table, 1), ResourceError);
}

TEST_CASE("kempe basis entries carry verified sequences") {
  Setup k4(fx::complete(4));
  CHECK(kempe_basis(k4.graph, k4.basis, k4.table).empty());

  Setup p3(fx::path(3));
  auto p3_entries = kempe_basis(p3.graph, p3.basis, p3.table);
  REQUIRE(p3_entries.size() == 1);
  CHECK(p3_entries[0].sequence.size() == 2);
  std::set<Coloring> endpoints{p3_entries[0].sequence.front(), p3_entries[0].sequence.back()};
  CHECK(endpoints == std::set<Coloring>{Coloring({{1}, {3}}), Coloring({{1, 3}, {}})});

  for (const Graph& g : {fx::prism(), fx::near_prism()}) {
    Setup s(g);
    for (const auto& entry : kempe_basis(s.graph, s.basis, s.table)) {
      CHECK(oracle::verify_sequence(s.graph, entry.sequence).ok);
      auto [lead, lc] = entry.binomial.leading_term(s.basis.order);
      Monomial tail = entry.binomial.terms()[0].first == lead ? entry.binomial.terms()[1].first
                                                              : entry.binomial.terms()[0].first;
      CHECK(entry.sequence.front() == monomial_to_coloring(lead, s.table));
      CHECK(entry.sequence.back() == monomial_to_coloring(tail, s.table));
    }
  }
}

TEST_CASE("kempe basis handles cubic binomials") {
  // This basis contains degree-3 binomials, so the fiber walk has to chain
  // several generator moves.
  Setup s(Graph(4, {{1, 2}, {1, 4}, {2, 3}}));
  int cubic = 0;
  for (const auto& entry : kempe_basis(s.graph, s.basis, s.table)) {
    if (entry.binomial.terms()[0].first.degree() >= 3) ++cubic;
    CHECK(oracle::verify_sequence(s.graph, entry.sequence).ok);
  }
  CHECK(cubic > 0);
}

TEST_CASE("monomial reduction traces") {
  Setup near(fx::near_prism());
  Monomial m = coloring_to_monomial(Coloring({{1, 5}, {2, 6}, {3, 4}}), near.table);
  auto trace = reduce_monomial_with_trace(m, near.basis);
  Monomial current = m;
  for (const auto& step : trace.steps) {
    CHECK(step.before == current);
    const Polynomial& element = near.basis.elements[step.element_index];
    auto [lead, lc] = element.leading_term(near.basis.order);
    Monomial tail = element.terms()[0].first == lead ? element.terms()[1].first
                                                     : element.terms()[0].first;
    CHECK(step.before == step.cofactor.times(lead));
    CHECK(step.after == step.cofactor.times(tail));
    current = step.after;
  }
  CHECK(trace.normal_form == current);
  CHECK(near.basis.normal_form(Polynomial::term(m, 1)) ==
        Polynomial::term(trace.normal_form, 1));
}

TEST_CASE("switching sequences on the worked pairs") {
  Setup near(fx::near_prism());
  auto kb = kempe_basis(near.graph, near.basis, near.table);
  Coloring f({{1, 5}, {2, 6}, {3, 4}});

  auto self = switching_sequence(near.graph, f, f, near.basis, kb, near.table);
  CHECK(self.equivalent);
  CHECK(self.sequence == std::vector<Coloring>{f});

  Coloring g52({{1, 3, 5}, {2, 6}, {4}});
  auto result = switching_sequence(near.graph, f, g52, near.basis, kb, near.table);
  REQUIRE(result.equivalent);
  CHECK(result.sequence.front() == f);
  CHECK(result.sequence.back() == g52);
  CHECK(oracle::verify_sequence(near.graph, result.sequence).ok);

  Setup prism(fx::prism());
  auto prism_kb = kempe_basis(prism.graph, prism.basis, prism.table);
  auto negative = switching_sequence(prism.graph, f, Coloring({{1, 6}, {2, 4}, {3, 5}}),
                                     prism.basis, prism_kb, prism.table);
  CHECK_FALSE(negative.equivalent);
  CHECK(negative.sequence.empty());
}

TEST_CASE("hilbert values sum the oracle class counts over induced subgraphs") {
  std::mt19937 rng(53);
  std::vector<Graph> sample;
  for (unsigned mask = 0; mask < 8; ++mask) sample.push_back(fx::from_edge_mask(3, mask));
  for (int trial = 0; trial < 3; ++trial) sample.push_back(fx::random_graph(rng, 4));
  sample.push_back(fx::random_graph(rng, 5));
  for (const auto& g : sample) {
    Setup s(g);
    const int d = g.vertex_count();
    for (int k = 2; k <= 3; ++k) {
      long long total = 0;
      for (unsigned mask = 0; mask < (1u << d); ++mask) {
        VertexSet w;
        for (int v = 1; v <= d; ++v)
          if (mask & (1u << (v - 1))) w.push_back(v);
        Graph sub = induced_subgraph(g, w).graph;
        total += oracle::classes_bruteforce(sub, k, sub.vertices()).component_count;
      }
      CHECK(hilbert(s.basis, k) == total);
    }
  }
}

TEST_CASE("representatives are inequivalent and complete on every support") {
  std::mt19937 rng(59);
  for (int trial = 0; trial < 6; ++trial) {
    Setup s(fx::random_graph(rng, 3 + static_cast<int>(rng() % 2)));
    const int d = s.graph.vertex_count();
    const int k = 2 + static_cast<int>(rng() % 2);
    auto reps = representative_system(s.graph, k, s.basis, s.table);
    std::map<VertexSet, std::vector<Coloring>> by_support;
    for (const auto& rep : reps.all) by_support[rep.support()].push_back(rep);
    for (unsigned mask = 0; mask < (1u << d); ++mask) {
      VertexSet w;
      for (int v = 1; v <= d; ++v)
        if (mask & (1u << (v - 1))) w.push_back(v);
      const auto& mine = by_support[w];
      for (std::size_t i = 0; i < mine.size(); ++i)
        for (std::size_t j = i + 1; j < mine.size(); ++j)
          CHECK_FALSE(oracle::are_equivalent_bruteforce(s.graph, mine[i], mine[j]));
      for (const auto& f : oracle::all_colorings(s.graph, k, w)) {
        int matches = 0;
        for (const auto& rep : mine)
          matches += oracle::are_equivalent_bruteforce(s.graph, f, rep) ? 1 : 0;
        CHECK(matches == 1);
      }
    }
  }
}

TEST_CASE("equivalence matches the oracle on six-vertex samples") {
  std::mt19937 rng(43);
  int graphs_checked = 0;
  while (graphs_checked < 50) {
    Graph g = fx::random_graph(rng, 6);
    ++graphs_checked;
    Setup s(std::move(g));
    for (int k = 2; k <= 4; ++k) {
      auto kg = oracle::classes_bruteforce(s.graph, k, s.graph.vertices());
      // The normal form partitions the colorings exactly like the switching
      // components do.
      std::map<Monomial, std::set<int>> components_by_form;
      for (int node = 0; node < static_cast<int>(kg.nodes.size()); ++node) {
        Monomial form = s.basis
                            .normal_form(Polynomial::term(
                                coloring_to_monomial(kg.nodes[node], s.table), 1))
                            .leading_term(s.basis.order)
                            .first;
        components_by_form[form].insert(kg.component_of[node]);
      }
      CHECK(components_by_form.size() == static_cast<std::size_t>(kg.component_count));
      for (const auto& [form, comps] : components_by_form) CHECK(comps.size() == 1);
      CHECK(class_count(s.graph, k, s.basis, s.table, CountMethod::Representatives) ==
            kg.component_count);
    }
  }
}
