#include "kempe/polynomial.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace kempe {

Monomial Monomial::variable(VarIndex v, int exponent) {
  return from_exponents({{v, exponent}});
}

Monomial Monomial::from_exponents(std::vector<std::pair<VarIndex, int>> exponents) {
  std::sort(exponents.begin(), exponents.end());
  Monomial m;
  for (auto& [v, e] : exponents) {
    if (e < 0) throw DomainError("negative exponent");
    if (e == 0) continue;
    if (v < 0) throw DomainError("negative variable index");
    if (!m.exps_.empty() && m.exps_.back().first == v)
      m.exps_.back().second += e;
    else
      m.exps_.emplace_back(v, e);
  }
  return m;
}

int Monomial::degree() const {
  int deg = 0;
  for (auto& [v, e] : exps_) deg += e;
  return deg;
}

int Monomial::exponent_of(VarIndex v) const {
  auto it = std::lower_bound(exps_.begin(), exps_.end(), std::make_pair(v, 0));
  if (it != exps_.end() && it->first == v) return it->second;
  return 0;
}

Monomial Monomial::times(const Monomial& m) const {
  Monomial out;
  out.exps_.reserve(exps_.size() + m.exps_.size());
  auto i = exps_.begin();
  auto j = m.exps_.begin();
  while (i != exps_.end() || j != m.exps_.end()) {
    if (j == m.exps_.end() || (i != exps_.end() && i->first < j->first))
      out.exps_.push_back(*i++);
    else if (i == exps_.end() || j->first < i->first)
      out.exps_.push_back(*j++);
    else {
      out.exps_.emplace_back(i->first, i->second + j->second);
      ++i;
      ++j;
    }
  }
  return out;
}

bool Monomial::divides(const Monomial& m) const {
  auto i = exps_.begin();
  auto j = m.exps_.begin();
  while (i != exps_.end()) {
    while (j != m.exps_.end() && j->first < i->first) ++j;
    if (j == m.exps_.end() || j->first != i->first || j->second < i->second) return false;
    ++i;
  }
  return true;
}

Monomial Monomial::divided_by(const Monomial& m) const {
  Monomial out;
  auto j = m.exps_.begin();
  for (auto& [v, e] : exps_) {
    int sub = 0;
    if (j != m.exps_.end() && j->first < v) throw InternalError("monomial division is not exact");
    if (j != m.exps_.end() && j->first == v) {
      sub = j->second;
      ++j;
    }
    if (e < sub) throw InternalError("monomial division is not exact");
    if (e > sub) out.exps_.emplace_back(v, e - sub);
  }
  if (j != m.exps_.end()) throw InternalError("monomial division is not exact");
  return out;
}

Monomial Monomial::lcm(const Monomial& a, const Monomial& b) {
  Monomial out;
  auto i = a.exps_.begin();
  auto j = b.exps_.begin();
  while (i != a.exps_.end() || j != b.exps_.end()) {
    if (j == b.exps_.end() || (i != a.exps_.end() && i->first < j->first))
      out.exps_.push_back(*i++);
    else if (i == a.exps_.end() || j->first < i->first)
      out.exps_.push_back(*j++);
    else {
      out.exps_.emplace_back(i->first, std::max(i->second, j->second));
      ++i;
      ++j;
    }
  }
  return out;
}

bool Monomial::coprime_with(const Monomial& m) const {
  auto i = exps_.begin();
  auto j = m.exps_.begin();
  while (i != exps_.end() && j != m.exps_.end()) {
    if (i->first < j->first)
      ++i;
    else if (j->first < i->first)
      ++j;
    else
      return false;
  }
  return true;
}

MonomialOrder MonomialOrder::grevlex_default(int variable_count) {
  std::vector<VarIndex> descending(variable_count);
  for (int i = 0; i < variable_count; ++i) descending[i] = variable_count - 1 - i;
  return grevlex(std::move(descending));
}

MonomialOrder MonomialOrder::grevlex(std::vector<VarIndex> descending) {
  MonomialOrder order;
  order.rank_of_.assign(descending.size(), -1);
  for (int r = 0; r < static_cast<int>(descending.size()); ++r) {
    VarIndex v = descending[r];
    if (v < 0 || v >= static_cast<int>(descending.size()) || order.rank_of_[v] != -1)
      throw DomainError("variable ordering must be a permutation of the variable indices");
    order.rank_of_[v] = r;
  }
  order.descending_ = std::move(descending);
  return order;
}

VarIndex MonomialOrder::smallest_variable() const {
  if (descending_.empty()) throw DomainError("empty variable ordering");
  return descending_.back();
}

int MonomialOrder::rank_of(VarIndex v) const {
  if (v < 0 || v >= variable_count()) throw DomainError("variable index out of range");
  return rank_of_[v];
}

std::strong_ordering MonomialOrder::compare(const Monomial& a, const Monomial& b) const {
  int da = a.degree(), db = b.degree();
  if (da != db) return da <=> db;
  // Collect (rank, exponent) for both, largest rank (smallest variable) first.
  auto ranked = [this](const Monomial& m) {
    std::vector<std::pair<int, int>> out;
    out.reserve(m.exponents().size());
    for (auto& [v, e] : m.exponents()) out.emplace_back(rank_of(v), e);
    std::sort(out.begin(), out.end(), std::greater<>());
    return out;
  };
  auto ra = ranked(a);
  auto rb = ranked(b);
  std::size_t i = 0, j = 0;
  while (i < ra.size() || j < rb.size()) {
    int rank_a = i < ra.size() ? ra[i].first : -1;
    int rank_b = j < rb.size() ? rb[j].first : -1;
    if (rank_a == rank_b) {
      if (ra[i].second != rb[j].second)
        // More of the smallest differing variable means smaller.
        return ra[i].second > rb[j].second ? std::strong_ordering::less : std::strong_ordering::greater;
      ++i;
      ++j;
    } else if (rank_a > rank_b) {
      return std::strong_ordering::less;  // a alone has the smallest variable
    } else {
      return std::strong_ordering::greater;
    }
  }
  return std::strong_ordering::equal;
}

Polynomial Polynomial::term(Monomial m, Coeff c) {
  Polynomial p;
  if (c != 0) p.terms_.emplace_back(std::move(m), c);
  return p;
}

Polynomial Polynomial::from_terms(std::vector<std::pair<Monomial, Coeff>> terms) {
  std::sort(terms.begin(), terms.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  Polynomial p;
  for (auto& [m, c] : terms) {
    if (!p.terms_.empty() && p.terms_.back().first == m)
      p.terms_.back().second += c;
    else
      p.terms_.emplace_back(std::move(m), c);
    if (!p.terms_.empty() && p.terms_.back().second == 0) p.terms_.pop_back();
  }
  return p;
}

Polynomial Polynomial::plus(const Polynomial& p) const {
  std::vector<std::pair<Monomial, Coeff>> merged = terms_;
  merged.insert(merged.end(), p.terms_.begin(), p.terms_.end());
  return from_terms(std::move(merged));
}

Polynomial Polynomial::minus(const Polynomial& p) const { return plus(p.negated()); }

Polynomial Polynomial::negated() const {
  Polynomial out = *this;
  for (auto& [m, c] : out.terms_) c = -c;
  return out;
}

Polynomial Polynomial::times(const Monomial& m, Coeff c) const {
  if (c == 0) return zero();
  Polynomial out;
  out.terms_.reserve(terms_.size());
  for (auto& [tm, tc] : terms_) out.terms_.emplace_back(tm.times(m), tc * c);
  std::sort(out.terms_.begin(), out.terms_.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  return out;
}

Coeff Polynomial::coefficient_of(const Monomial& m) const {
  for (auto& [tm, tc] : terms_)
    if (tm == m) return tc;
  return 0;
}

std::pair<Monomial, Coeff> Polynomial::leading_term(const MonomialOrder& order) const {
  if (is_zero()) throw DomainError("zero polynomial has no leading term");
  const std::pair<Monomial, Coeff>* best = &terms_.front();
  for (auto& term : terms_)
    if (order.less(best->first, term.first)) best = &term;
  return *best;
}

Polynomial binomial_difference(const Monomial& a, const Monomial& b) {
  return Polynomial::from_terms({{a, 1}, {b, -1}});
}

Polynomial canonical_binomial(const Monomial& a, const Monomial& b, const MonomialOrder& order) {
  auto cmp = order.compare(a, b);
  if (cmp == 0) return Polynomial::zero();
  return cmp > 0 ? binomial_difference(a, b) : binomial_difference(b, a);
}

namespace {

// The artifact only ever feeds the engine pure differences and +-monomials;
// anything wider indicates a bug.
void check_closure(const Polynomial& p) {
  if (p.term_count() > 2)
    throw InternalError("binomial closure violated: polynomial with more than two terms");
  for (auto& [m, c] : p.terms())
    if (c != 1 && c != -1)
      throw InternalError("binomial closure violated: coefficient outside {-1,+1}");
}

// Divide by the content and flip the sign so the leading coefficient is +1.
Polynomial normalize_leading(Polynomial p, const MonomialOrder& order) {
  if (p.is_zero()) return p;
  Coeff content = 0;
  for (auto& [m, c] : p.terms()) content = std::gcd(content, c < 0 ? -c : c);
  std::vector<std::pair<Monomial, Coeff>> terms;
  for (auto& [m, c] : p.terms()) terms.emplace_back(m, c / content);
  p = Polynomial::from_terms(std::move(terms));
  auto [lm, lc] = p.leading_term(order);
  if (lc < 0) p = p.negated();
  if (p.leading_term(order).second != 1)
    throw InternalError("cannot normalize leading coefficient to +1 over the integers");
  return p;
}

}  // namespace

Polynomial s_polynomial(const Polynomial& f, const Polynomial& g, const MonomialOrder& order) {
  if (f.is_zero() || g.is_zero()) throw DomainError("s-polynomial of a zero polynomial");
  auto [fm, fc] = f.leading_term(order);
  auto [gm, gc] = g.leading_term(order);
  if (fc != 1 && fc != -1) throw InternalError("s-polynomial expects unit leading coefficients");
  if (gc != 1 && gc != -1) throw InternalError("s-polynomial expects unit leading coefficients");
  Monomial m = Monomial::lcm(fm, gm);
  // 1/c == c for unit coefficients.
  return f.times(m.divided_by(fm), fc).minus(g.times(m.divided_by(gm), gc));
}

Polynomial normal_form(Polynomial p, const std::vector<Polynomial>& basis, const MonomialOrder& order) {
  Polynomial remainder;
  while (!p.is_zero()) {
    auto [lm, lc] = p.leading_term(order);
    const Polynomial* reducer = nullptr;
    for (const auto& b : basis) {
      if (b.is_zero()) throw DomainError("zero element in division basis");
      if (b.leading_term(order).first.divides(lm)) {
        reducer = &b;
        break;
      }
    }
    if (reducer == nullptr) {
      remainder = remainder.plus(Polynomial::term(lm, lc));
      p = p.minus(Polynomial::term(lm, lc));
    } else {
      auto [bm, bc] = reducer->leading_term(order);
      if (bc != 1 && bc != -1) throw InternalError("division expects unit leading coefficients");
      p = p.minus(reducer->times(lm.divided_by(bm), lc * bc));
      check_closure(p);
    }
  }
  return remainder;
}

GroebnerBasis buchberger(const std::vector<Polynomial>& generators, const MonomialOrder& order) {
  std::vector<Polynomial> basis;
  // Key: (lcm degree, lcm, i, j); processed in ascending order.
  struct PairKey {
    int degree;
    Monomial lcm;
    int i, j;
  };
  auto key_less = [&order](const PairKey& a, const PairKey& b) {
    if (a.degree != b.degree) return a.degree < b.degree;
    auto cmp = order.compare(a.lcm, b.lcm);
    if (cmp != 0) return cmp < 0;
    if (a.i != b.i) return a.i < b.i;
    return a.j < b.j;
  };
  std::vector<PairKey> queue;
  auto heap_less = [&](const PairKey& a, const PairKey& b) { return key_less(b, a); };
  auto append = [&](Polynomial p) {
    p = normalize_leading(std::move(p), order);
    check_closure(p);
    basis.push_back(std::move(p));
    const int j = static_cast<int>(basis.size()) - 1;
    const Monomial mj = basis[j].leading_term(order).first;
    for (int i = 0; i < j; ++i) {
      const Monomial mi = basis[i].leading_term(order).first;
      // Buchberger's first criterion: coprime leading monomials reduce to 0.
      if (mi.coprime_with(mj)) continue;
      Monomial l = Monomial::lcm(mi, mj);
      queue.push_back(PairKey{l.degree(), std::move(l), i, j});
      std::push_heap(queue.begin(), queue.end(), heap_less);
    }
  };

  for (const auto& gen : generators) {
    if (gen.is_zero()) continue;
    Polynomial reduced = normal_form(normalize_leading(gen, order), basis, order);
    if (!reduced.is_zero()) append(std::move(reduced));
  }
  while (!queue.empty()) {
    std::pop_heap(queue.begin(), queue.end(), heap_less);
    PairKey pair = std::move(queue.back());
    queue.pop_back();
    Polynomial s = s_polynomial(basis[pair.i], basis[pair.j], order);
    if (s.is_zero()) continue;
    check_closure(s);
    Polynomial r = normal_form(std::move(s), basis, order);
    if (!r.is_zero()) append(std::move(r));
  }
  return reduce_basis(std::move(basis), order);
}

GroebnerBasis reduce_basis(std::vector<Polynomial> groebner_elements, const MonomialOrder& order) {
  std::vector<Polynomial> elements;
  for (auto& p : groebner_elements)
    if (!p.is_zero()) elements.push_back(normalize_leading(std::move(p), order));
  std::sort(elements.begin(), elements.end(), [&](const Polynomial& a, const Polynomial& b) {
    auto cmp = order.compare(a.leading_term(order).first, b.leading_term(order).first);
    if (cmp != 0) return cmp < 0;
    return a < b;
  });
  // Minimalize: drop elements whose lead is divisible by an earlier kept lead.
  std::vector<Polynomial> minimal;
  for (auto& p : elements) {
    Monomial lm = p.leading_term(order).first;
    bool redundant = false;
    for (const auto& q : minimal)
      if (q.leading_term(order).first.divides(lm)) {
        redundant = true;
        break;
      }
    if (!redundant) minimal.push_back(std::move(p));
  }
  // Tail-reduce until stable. A tail monomial is strictly below its own
  // lead, so reducing against the full minimal set never uses the element
  // on itself.
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t i = 0; i < minimal.size(); ++i) {
      auto [lm, lc] = minimal[i].leading_term(order);
      Polynomial tail = minimal[i].minus(Polynomial::term(lm, lc));
      Polynomial reduced_tail = normal_form(tail, minimal, order);
      Polynomial replacement = Polynomial::term(lm, lc).plus(reduced_tail);
      if (replacement != minimal[i]) {
        minimal[i] = std::move(replacement);
        changed = true;
      }
    }
  }
  std::sort(minimal.begin(), minimal.end(), [&](const Polynomial& a, const Polynomial& b) {
    return order.compare(a.leading_term(order).first, b.leading_term(order).first) < 0;
  });
  return GroebnerBasis{order, std::move(minimal)};
}

std::vector<Monomial> GroebnerBasis::initials() const {
  std::vector<Monomial> out;
  out.reserve(elements.size());
  for (const auto& p : elements) out.push_back(p.leading_term(order).first);
  return out;
}

namespace {

void standard_monomials_dfs(const std::vector<Monomial>& initials, const std::vector<VarIndex>& descending,
                            std::size_t next, int remaining, std::vector<std::pair<VarIndex, int>>& chosen,
                            std::vector<Monomial>& out) {
  if (remaining == 0) {
    out.push_back(Monomial::from_exponents(chosen));
    return;
  }
  if (next >= descending.size()) return;
  VarIndex v = descending[next];
  for (int e = 0; e <= remaining; ++e) {
    if (e > 0) {
      chosen.emplace_back(v, e);
      Monomial partial = Monomial::from_exponents(chosen);
      bool blocked = false;
      for (const auto& init : initials)
        if (init.divides(partial)) {
          blocked = true;
          break;
        }
      if (blocked) {
        chosen.pop_back();
        break;  // larger exponents of v stay divisible
      }
    }
    standard_monomials_dfs(initials, descending, next + 1, remaining - e, chosen, out);
    if (e > 0) chosen.pop_back();
  }
}

}  // namespace

std::vector<Monomial> standard_monomials(const std::vector<Monomial>& initials,
                                         const MonomialOrder& order, int degree) {
  if (degree < 0) throw DomainError("degree must be nonnegative");
  for (const auto& init : initials)
    if (init.is_one()) return {};
  std::vector<Monomial> out;
  std::vector<std::pair<VarIndex, int>> chosen;
  standard_monomials_dfs(initials, order.descending_variables(), 0, degree, chosen, out);
  return out;
}

}  // namespace kempe
