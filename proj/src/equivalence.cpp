#include "kempe/equivalence.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>

namespace kempe {

Monomial coloring_to_monomial(const Coloring& f, const VariableTable& table) {
  Monomial m;
  for (const auto& cls : f.classes()) m = m.times(Monomial::variable(table.index_of(cls)));
  return m;
}

Coloring monomial_to_coloring(const Monomial& m, const VariableTable& table) {
  if (monomial_in_M(m, table))
    throw DomainError("monomial does not encode a coloring: a vertex is repeated");
  std::vector<VertexSet> classes;
  for (auto& [v, e] : m.exponents())
    for (int copy = 0; copy < e; ++copy) classes.push_back(table.set_at(v));
  return Coloring(std::move(classes));
}

GroebnerBasis kempe_groebner_basis(const Graph& g, const VariableTable& table,
                                   const MonomialOrder& order) {
  return buchberger(gens_K(g, table, order).generators, order);
}

namespace {

void require_comparable(const Coloring& f, const Coloring& h) {
  if (f.k() != h.k())
    throw DomainError("colorings use different numbers of colors (" + std::to_string(f.k()) +
                      " vs " + std::to_string(h.k()) + ")");
  if (f.support() != h.support()) throw DomainError("colorings have different supports");
}

void require_valid(const Graph& g, const Coloring& f) {
  for (const auto& cls : f.classes())
    if (!is_stable(g, cls)) throw DomainError("color class is not stable: " + vertex_set_text(cls));
}

}  // namespace

bool are_equivalent(const Graph& g, const Coloring& f, const Coloring& h,
                    const GroebnerBasis& basis, const VariableTable& table) {
  require_valid(g, f);
  require_valid(g, h);
  require_comparable(f, h);
  Monomial mf = coloring_to_monomial(f, table);
  Monomial mh = coloring_to_monomial(h, table);
  return basis.normal_form(binomial_difference(mf, mh)).is_zero();
}

RepresentativeSystem representative_system(const Graph& g, int k, const GroebnerBasis& basis,
                                           const VariableTable& table) {
  if (k < 0) throw DomainError("k must be nonnegative");
  RepresentativeSystem out;
  VertexSet all_vertices = g.vertices();
  for (const auto& m : standard_monomials(basis.initials(), basis.order, k)) {
    Coloring f = monomial_to_coloring(m, table);
    if (f.support() == all_vertices) out.full.push_back(f);
    out.all.push_back(std::move(f));
  }
  return out;
}

long long hilbert(const GroebnerBasis& basis, int k) {
  return static_cast<long long>(standard_monomials(basis.initials(), basis.order, k).size());
}

std::vector<long long> hilbert_series(const GroebnerBasis& basis, int max_k) {
  std::vector<long long> out;
  for (int k = 0; k <= max_k; ++k) out.push_back(hilbert(basis, k));
  return out;
}

namespace {

// Induced subgraphs are memoized by (vertex count, edge bitmask); the Hilbert
// value of the Kempe ideal is order- and labeling-independent.
long long subgraph_hilbert(const Graph& g, int k, std::map<std::pair<int, long long>, long long>& memo) {
  long long mask = 0;
  for (auto [u, v] : g.edges()) {
    int i = u - 1, j = v - 1;
    mask |= 1LL << (i * g.vertex_count() + j);
  }
  auto key = std::make_pair(g.vertex_count(), mask);
  auto it = memo.find(key);
  if (it != memo.end()) return it->second;
  VariableTable table(g);
  MonomialOrder order = MonomialOrder::grevlex_default(table.size());
  GroebnerBasis basis = kempe_groebner_basis(g, table, order);
  long long value = hilbert(basis, k);
  memo.emplace(key, value);
  return value;
}

}  // namespace

long long class_count(const Graph& g, int k, const GroebnerBasis& basis, const VariableTable& table,
                      CountMethod method) {
  if (method == CountMethod::InclusionExclusion && g.vertex_count() <= 6) {
    const int d = g.vertex_count();
    std::map<std::pair<int, long long>, long long> memo;
    long long total = 0;
    for (unsigned mask = 0; mask < (1u << d); ++mask) {
      VertexSet vertices;
      for (int v = 1; v <= d; ++v)
        if (mask & (1u << (v - 1))) vertices.push_back(v);
      long long h = subgraph_hilbert(induced_subgraph(g, vertices).graph, k, memo);
      int m = static_cast<int>(vertices.size());
      total += ((d - m) % 2 == 0 ? 1 : -1) * h;
    }
    return total;
  }
  return static_cast<long long>(representative_system(g, k, basis, table).full.size());
}

std::vector<Coloring> enumerate_class(const Graph& g, const Coloring& f, const GroebnerBasis& basis,
                                      const VariableTable& table) {
  require_valid(g, f);
  Monomial start = basis.normal_form(Polynomial::term(coloring_to_monomial(f, table), 1))
                       .leading_term(basis.order)
                       .first;
  std::set<Monomial> visited{start};
  std::deque<Monomial> queue{start};
  while (!queue.empty()) {
    Monomial current = queue.front();
    queue.pop_front();
    for (const auto& element : basis.elements) {
      if (element.term_count() != 2) continue;
      auto [lead, lc] = element.leading_term(basis.order);
      Monomial tail = element.terms()[0].first == lead ? element.terms()[1].first
                                                       : element.terms()[0].first;
      if (!tail.divides(current)) continue;
      Monomial next = current.divided_by(tail).times(lead);
      if (visited.insert(next).second) queue.push_back(next);
    }
  }
  std::vector<Coloring> out;
  out.reserve(visited.size());
  for (const auto& m : visited) out.push_back(monomial_to_coloring(m, table));
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Coloring> quad_switch_sequence(const Graph& g, const VertexSet& a1, const VertexSet& a2,
                                           const VertexSet& b1, const VertexSet& b2) {
  if (!sets_disjoint(a1, a2) || !sets_disjoint(b1, b2))
    throw DomainError("quadratic relation sides must be disjoint unions");
  if (set_union(a1, a2) != set_union(b1, b2))
    throw DomainError("quadratic relation sides must share their union");
  // Vertices whose color differs, pairing b1 with a1. This region meets no
  // edge of the rest of the support, so its components are components of the
  // induced subgraph on both classes.
  VertexSet flip = set_union(set_intersection(a1, b2), set_intersection(a2, b1));
  std::vector<Coloring> out;
  out.push_back(Coloring({a1, a2}));
  VertexSet moved;
  for (const auto& component : connected_components(g, flip)) {
    moved = set_union(moved, component);
    VertexSet c1 = set_union(set_difference(a1, moved), set_intersection(b1, moved));
    VertexSet c2 = set_union(set_difference(a2, moved), set_intersection(b2, moved));
    out.push_back(Coloring({c1, c2}));
  }
  if (out.back() != Coloring({b1, b2}))
    throw InternalError("quadratic switch sequence missed its endpoint");
  return out;
}

std::vector<Coloring> lift_sequence(const Monomial& cofactor, const std::vector<Coloring>& sequence,
                                    const VariableTable& table) {
  Coloring extra = monomial_to_coloring(cofactor, table);  // validates the cofactor
  std::vector<Coloring> out;
  out.reserve(sequence.size());
  for (const auto& f : sequence) {
    std::vector<VertexSet> classes = f.classes();
    for (const auto& cls : extra.classes()) classes.push_back(cls);
    out.push_back(Coloring(std::move(classes)));  // throws if supports overlap
  }
  return out;
}

FiberChain fiber_chain(const Graph& g, const Polynomial& binomial, const IdealSpec& quadratic_gens,
                       const VariableTable& table, std::size_t node_cap) {
  (void)g;
  if (binomial.term_count() == 0) return {};
  if (binomial.term_count() != 2) throw DomainError("fiber chain expects a binomial");
  Monomial from = binomial.terms()[0].first;
  Monomial to = binomial.terms()[1].first;
  if (pi_image(from, table) != pi_image(to, table))
    throw DomainError("binomial sides lie in different fibers");
  FiberChain chain;
  if (from == to) {
    chain.monomials.push_back(from);
    return chain;
  }
  // Breadth-first search over the fiber with generator moves as edges; the
  // fiber is generated lazily, never materialized.
  struct Parent {
    Monomial monomial;
    FiberChainStep step;
  };
  std::map<Monomial, Parent> parents;
  std::set<Monomial> visited{from};
  std::deque<Monomial> queue{from};
  bool found = false;
  while (!queue.empty() && !found) {
    Monomial current = queue.front();
    queue.pop_front();
    for (int gi = 0; gi < static_cast<int>(quadratic_gens.generators.size()) && !found; ++gi) {
      const Polynomial& gen = quadratic_gens.generators[gi];
      if (gen.term_count() != 2) continue;
      const Monomial& side_a = gen.terms()[0].first;
      const Monomial& side_b = gen.terms()[1].first;
      for (int dir = 0; dir < 2 && !found; ++dir) {
        const Monomial& src = dir == 0 ? side_a : side_b;
        const Monomial& dst = dir == 0 ? side_b : side_a;
        if (!src.divides(current)) continue;
        Monomial cofactor = current.divided_by(src);
        Monomial next = cofactor.times(dst);
        if (!visited.insert(next).second) continue;
        if (visited.size() > node_cap)
          throw ResourceError("fiber search exceeded the node cap of " + std::to_string(node_cap));
        parents.emplace(next, Parent{current, FiberChainStep{gi, dir == 0, std::move(cofactor)}});
        if (next == to)
          found = true;
        else
          queue.push_back(next);
      }
    }
  }
  if (!found)
    throw InternalError("fiber search exhausted without connecting the binomial's sides");
  std::vector<Monomial> path{to};
  std::vector<FiberChainStep> steps;
  Monomial cursor = to;
  while (cursor != from) {
    const Parent& p = parents.at(cursor);
    steps.push_back(p.step);
    cursor = p.monomial;
    path.push_back(cursor);
  }
  std::reverse(path.begin(), path.end());
  std::reverse(steps.begin(), steps.end());
  chain.monomials = std::move(path);
  chain.steps = std::move(steps);
  return chain;
}

namespace {

std::pair<VertexSet, VertexSet> quad_classes(const Monomial& m, const VariableTable& table) {
  std::vector<VertexSet> classes;
  for (auto& [v, e] : m.exponents())
    for (int copy = 0; copy < e; ++copy) classes.push_back(table.set_at(v));
  if (classes.size() != 2) throw InternalError("expected a degree-2 monomial");
  return {classes[0], classes[1]};
}

void append_segment(std::vector<Coloring>& sequence, const std::vector<Coloring>& segment) {
  if (sequence.empty()) {
    sequence = segment;
    return;
  }
  if (segment.empty()) return;
  if (sequence.back() != segment.front())
    throw InternalError("switching segments do not meet at their junction");
  sequence.insert(sequence.end(), segment.begin() + 1, segment.end());
}

std::vector<Coloring> collapse_duplicates(std::vector<Coloring> sequence) {
  sequence.erase(std::unique(sequence.begin(), sequence.end()), sequence.end());
  return sequence;
}

// Expand one fiber move u -> u * dst/src into a lifted switching sequence.
std::vector<Coloring> expand_step(const Graph& g, const FiberChainStep& step,
                                  const IdealSpec& quadratic_gens, const VariableTable& table) {
  const Polynomial& gen = quadratic_gens.generators.at(step.generator_index);
  const Monomial& src = step.forward ? gen.terms()[0].first : gen.terms()[1].first;
  const Monomial& dst = step.forward ? gen.terms()[1].first : gen.terms()[0].first;
  auto [a1, a2] = quad_classes(src, table);
  auto [b1, b2] = quad_classes(dst, table);
  return lift_sequence(step.cofactor, quad_switch_sequence(g, a1, a2, b1, b2), table);
}

}  // namespace

std::vector<KempeBasisEntry> kempe_basis(const Graph& g, const GroebnerBasis& basis,
                                         const VariableTable& table, std::size_t fiber_cap) {
  MonomialOrder order = MonomialOrder::grevlex_default(table.size());
  IdealSpec quadratic_gens = gens_J(g, table, order);
  std::vector<KempeBasisEntry> out;
  for (int index = 0; index < static_cast<int>(basis.elements.size()); ++index) {
    const Polynomial& element = basis.elements[index];
    if (element.term_count() != 2) continue;
    FiberChain chain = fiber_chain(g, element, quadratic_gens, table, fiber_cap);
    std::vector<Coloring> sequence{monomial_to_coloring(chain.monomials.front(), table)};
    for (const auto& step : chain.steps)
      append_segment(sequence, expand_step(g, step, quadratic_gens, table));
    KempeBasisEntry entry;
    entry.element_index = index;
    entry.binomial = element;
    entry.sequence = collapse_duplicates(std::move(sequence));
    // Orient the stored sequence from the element's leading coloring.
    Monomial lead = element.leading_term(basis.order).first;
    if (entry.sequence.front() != monomial_to_coloring(lead, table))
      std::reverse(entry.sequence.begin(), entry.sequence.end());
    out.push_back(std::move(entry));
  }
  return out;
}

ReductionTrace reduce_monomial_with_trace(const Monomial& m, const GroebnerBasis& basis) {
  ReductionTrace trace;
  Monomial current = m;
  bool reduced = true;
  while (reduced) {
    reduced = false;
    for (int index = 0; index < static_cast<int>(basis.elements.size()); ++index) {
      const Polynomial& element = basis.elements[index];
      Monomial lead = element.leading_term(basis.order).first;
      if (!lead.divides(current)) continue;
      if (element.term_count() != 2)
        throw InternalError("monomial reduction hit a monomial basis element");
      Monomial tail = element.terms()[0].first == lead ? element.terms()[1].first
                                                       : element.terms()[0].first;
      Monomial cofactor = current.divided_by(lead);
      Monomial after = cofactor.times(tail);
      trace.steps.push_back(TraceStep{current, index, cofactor, after});
      current = after;
      reduced = true;
      break;
    }
  }
  trace.normal_form = current;
  return trace;
}

SequenceResult switching_sequence(const Graph& g, const Coloring& f, const Coloring& h,
                                  const GroebnerBasis& basis,
                                  const std::vector<KempeBasisEntry>& kbasis,
                                  const VariableTable& table) {
  require_valid(g, f);
  require_valid(g, h);
  require_comparable(f, h);
  if (f == h) return SequenceResult{true, {f}};
  std::map<int, const KempeBasisEntry*> by_element;
  for (const auto& entry : kbasis) by_element[entry.element_index] = &entry;

  auto expand = [&](const Coloring& start, const ReductionTrace& trace) {
    std::vector<Coloring> sequence{start};
    for (const auto& step : trace.steps) {
      auto it = by_element.find(step.element_index);
      if (it == by_element.end())
        throw InternalError("reduction used a basis element missing from the Kempe basis");
      append_segment(sequence, lift_sequence(step.cofactor, it->second->sequence, table));
    }
    return sequence;
  };

  ReductionTrace trace_f = reduce_monomial_with_trace(coloring_to_monomial(f, table), basis);
  ReductionTrace trace_h = reduce_monomial_with_trace(coloring_to_monomial(h, table), basis);
  if (trace_f.normal_form != trace_h.normal_form) return SequenceResult{false, {}};

  std::vector<Coloring> sequence = expand(f, trace_f);
  std::vector<Coloring> back = expand(h, trace_h);
  std::reverse(back.begin(), back.end());
  append_segment(sequence, back);
  sequence = collapse_duplicates(std::move(sequence));
  if (sequence.front() != f || sequence.back() != h)
    throw InternalError("switching sequence endpoints do not match the request");
  return SequenceResult{true, std::move(sequence)};
}

}  // namespace kempe
