#include "kempe/ideals.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace kempe {

PiImage pi_image(const Monomial& m, const VariableTable& table) {
  PiImage out;
  out.vertex_multiplicity.assign(table.vertex_count() + 1, 0);
  for (auto& [v, e] : m.exponents()) {
    for (int vertex : table.set_at(v)) out.vertex_multiplicity[vertex] += e;
    out.degree += e;
  }
  return out;
}

bool is_pi_balanced(const Polynomial& p, const VariableTable& table) {
  if (p.term_count() != 2) return false;
  return pi_image(p.terms()[0].first, table) == pi_image(p.terms()[1].first, table);
}

bool monomial_in_M(const Monomial& m, const VariableTable& table) {
  auto image = pi_image(m, table);
  for (int mult : image.vertex_multiplicity)
    if (mult >= 2) return true;
  return false;
}

std::string ideal_kind_name(IdealKind kind) {
  switch (kind) {
    case IdealKind::L: return "L";
    case IdealKind::J: return "J";
    case IdealKind::M: return "M";
    case IdealKind::K: return "K";
    case IdealKind::Q2: return "Q2";
    case IdealKind::I: return "I";
  }
  throw InternalError("unknown ideal kind");
}

IdealKind ideal_kind_from_name(const std::string& name) {
  if (name == "L") return IdealKind::L;
  if (name == "J") return IdealKind::J;
  if (name == "M") return IdealKind::M;
  if (name == "K") return IdealKind::K;
  if (name == "Q2") return IdealKind::Q2;
  if (name == "I") return IdealKind::I;
  throw DomainError("unknown ideal kind: " + name + " (expected L, J, M, K, Q2 or I)");
}

namespace {

std::vector<Polynomial> deduplicate(std::set<Polynomial> collected) {
  return {collected.begin(), collected.end()};
}

}  // namespace

IdealSpec gens_L(const Graph& g, const VariableTable& table, const MonomialOrder& order) {
  (void)g;
  std::set<Polynomial> out;
  const int empty_var = table.empty_set_index();
  for (int s = 0; s < table.size(); ++s) {
    const VertexSet& set = table.set_at(s);
    if (set.size() < 2) continue;
    for (int vertex : set) {
      VertexSet rest = set_difference(set, {vertex});
      Monomial split = Monomial::variable(table.index_of(rest)).times(Monomial::variable(table.index_of({vertex})));
      Monomial whole = Monomial::variable(s).times(Monomial::variable(empty_var));
      Polynomial p = canonical_binomial(split, whole, order);
      if (!p.is_zero()) out.insert(std::move(p));
    }
  }
  return IdealSpec{IdealKind::L, deduplicate(std::move(out))};
}

IdealSpec gens_J(const Graph& g, const VariableTable& table, const MonomialOrder& order) {
  (void)g;
  // Unordered pairs of disjoint stable sets grouped by their union.
  std::map<VertexSet, std::vector<Monomial>> fibers;
  for (int i = 0; i < table.size(); ++i) {
    for (int j = i; j < table.size(); ++j) {
      const VertexSet& a = table.set_at(i);
      const VertexSet& b = table.set_at(j);
      if (i == j && !a.empty()) continue;
      if (!sets_disjoint(a, b)) continue;
      fibers[set_union(a, b)].push_back(Monomial::variable(i).times(Monomial::variable(j)));
    }
  }
  std::set<Polynomial> out;
  for (auto& [union_set, monomials] : fibers) {
    for (std::size_t t = 1; t < monomials.size(); ++t) {
      Polynomial p = canonical_binomial(monomials[0], monomials[t], order);
      if (!p.is_zero()) out.insert(std::move(p));
    }
  }
  return IdealSpec{IdealKind::J, deduplicate(std::move(out))};
}

IdealSpec gens_M(const Graph& g, const VariableTable& table, const MonomialOrder& order) {
  (void)g;
  (void)order;
  std::set<Polynomial> out;
  for (int i = 0; i < table.size(); ++i) {
    for (int j = i; j < table.size(); ++j) {
      const VertexSet& a = table.set_at(i);
      const VertexSet& b = table.set_at(j);
      if (sets_disjoint(a, b)) continue;
      out.insert(Polynomial::term(Monomial::variable(i).times(Monomial::variable(j)), 1));
    }
  }
  return IdealSpec{IdealKind::M, deduplicate(std::move(out))};
}

IdealSpec gens_K(const Graph& g, const VariableTable& table, const MonomialOrder& order) {
  IdealSpec j = gens_J(g, table, order);
  IdealSpec m = gens_M(g, table, order);
  std::vector<Polynomial> generators = std::move(j.generators);
  generators.insert(generators.end(), m.generators.begin(), m.generators.end());
  return IdealSpec{IdealKind::K, std::move(generators)};
}

IdealSpec gens_Q2(const Graph& g, const VariableTable& table, const MonomialOrder& order) {
  (void)g;
  std::map<std::vector<int>, std::vector<Monomial>> fibers;
  for (int i = 0; i < table.size(); ++i) {
    for (int j = i; j < table.size(); ++j) {
      Monomial m = Monomial::variable(i).times(Monomial::variable(j));
      fibers[pi_image(m, table).vertex_multiplicity].push_back(std::move(m));
    }
  }
  std::set<Polynomial> out;
  for (auto& [image, monomials] : fibers) {
    for (std::size_t t = 1; t < monomials.size(); ++t) {
      Polynomial p = canonical_binomial(monomials[0], monomials[t], order);
      if (!p.is_zero()) out.insert(std::move(p));
    }
  }
  return IdealSpec{IdealKind::Q2, deduplicate(std::move(out))};
}

IdealSpec generators_for(IdealKind kind, const Graph& g, const VariableTable& table,
                         const MonomialOrder& order) {
  switch (kind) {
    case IdealKind::L: return gens_L(g, table, order);
    case IdealKind::J: return gens_J(g, table, order);
    case IdealKind::M: return gens_M(g, table, order);
    case IdealKind::K: return gens_K(g, table, order);
    case IdealKind::Q2: return gens_Q2(g, table, order);
    case IdealKind::I: return IdealSpec{IdealKind::I, groebner_I(g, table).elements};
  }
  throw InternalError("unknown ideal kind");
}

std::vector<Polynomial> saturate_by_smallest_var(const GroebnerBasis& basis) {
  if (basis.order.variable_count() == 0) return {};
  const VarIndex smallest = basis.order.smallest_variable();
  if (smallest != 0)
    throw DomainError("saturation requires the empty-set variable to be the smallest");
  std::vector<Polynomial> out;
  for (const auto& element : basis.elements) {
    int power = -1;
    for (auto& [m, c] : element.terms()) {
      int e = m.exponent_of(smallest);
      power = power < 0 ? e : std::min(power, e);
    }
    if (power <= 0) {
      out.push_back(element);
      continue;
    }
    Monomial divisor = Monomial::variable(smallest, power);
    std::vector<std::pair<Monomial, Coeff>> terms;
    for (auto& [m, c] : element.terms()) terms.emplace_back(m.divided_by(divisor), c);
    out.push_back(Polynomial::from_terms(std::move(terms)));
  }
  return out;
}

GroebnerBasis groebner_I(const Graph& g, const VariableTable& table) {
  MonomialOrder order = MonomialOrder::grevlex_default(table.size());
  GroebnerBasis basis_L = buchberger(gens_L(g, table, order).generators, order);
  return reduce_basis(saturate_by_smallest_var(basis_L), order);
}

namespace {

// A degree-2 monomial is the product of two disjoint stable sets exactly when
// no vertex is repeated across its factors.
bool is_two_coloring_monomial(const Monomial& m, const VariableTable& table) {
  return m.degree() == 2 && !monomial_in_M(m, table);
}

}  // namespace

GroebnerBasis algorithm1_K(const Graph& g, const VariableTable& table, const MonomialOrder& order) {
  if (order.variable_count() != table.size())
    throw DomainError("monomial order does not match the variable table");
  MonomialOrder default_order = MonomialOrder::grevlex_default(table.size());
  GroebnerBasis basis_L = buchberger(gens_L(g, table, default_order).generators, default_order);
  std::vector<Polynomial> toric = saturate_by_smallest_var(basis_L);
  std::vector<Polynomial> quadratic;
  for (const auto& element : toric) {
    if (element.term_count() != 2) continue;
    if (is_two_coloring_monomial(element.terms()[0].first, table) &&
        is_two_coloring_monomial(element.terms()[1].first, table))
      quadratic.push_back(element);
  }
  for (auto& p : gens_M(g, table, order).generators) quadratic.push_back(std::move(p));
  return buchberger(quadratic, order);
}

bool ideal_equal_given(const IdealSpec& a, const GroebnerBasis& basis_a, const IdealSpec& b,
                       const GroebnerBasis& basis_b) {
  for (const auto& gen : a.generators)
    if (!basis_b.contains(gen)) return false;
  for (const auto& gen : b.generators)
    if (!basis_a.contains(gen)) return false;
  return true;
}

bool ideal_equal(const IdealSpec& a, const IdealSpec& b, const MonomialOrder& order) {
  GroebnerBasis basis_a = buchberger(a.generators, order);
  GroebnerBasis basis_b = buchberger(b.generators, order);
  return ideal_equal_given(a, basis_a, b, basis_b);
}

std::string chain_case_name(ChainCase c) {
  switch (c) {
    case ChainCase::I: return "(i)";
    case ChainCase::II: return "(ii)";
    case ChainCase::III: return "(iii)";
    case ChainCase::IV: return "(iv)";
    case ChainCase::V: return "(v)";
    case ChainCase::VI: return "(vi)";
  }
  throw InternalError("unknown chain case");
}

ChainCase classify_chain(const Graph& g) {
  VariableTable table(g);
  MonomialOrder order = MonomialOrder::grevlex_default(table.size());
  IdealSpec l = gens_L(g, table, order);
  IdealSpec j = gens_J(g, table, order);
  IdealSpec q2 = gens_Q2(g, table, order);
  IdealSpec i{IdealKind::I, groebner_I(g, table).elements};
  GroebnerBasis basis_l = buchberger(l.generators, order);
  GroebnerBasis basis_j = buchberger(j.generators, order);
  GroebnerBasis basis_q2 = buchberger(q2.generators, order);
  GroebnerBasis basis_i = reduce_basis(i.generators, order);
  bool lj = ideal_equal_given(l, basis_l, j, basis_j);
  bool jq = ideal_equal_given(j, basis_j, q2, basis_q2);
  bool qi = ideal_equal_given(q2, basis_q2, i, basis_i);
  if (lj && jq && qi) return ChainCase::I;
  if (lj && !jq && qi) return ChainCase::II;
  if (!lj && jq && qi) return ChainCase::III;
  if (!lj && jq && !qi) return ChainCase::IV;
  if (!lj && !jq && qi) return ChainCase::V;
  if (!lj && !jq && !qi) return ChainCase::VI;
  // L = J forces the toric ideal to be quadratic, so these cannot coexist.
  throw InternalError("inconsistent ideal chain: L = J but Q2 != I");
}

}  // namespace kempe
