#pragma once
// Exact sparse polynomials over indexed variables, graded reverse
// lexicographic orders, Buchberger's algorithm, reduced Groebner bases and
// standard monomial enumeration.
//
// Everything this project feeds the engine is a pure-difference binomial or a
// monomial with coefficients in {-1,+1}; that closure is asserted at runtime
// inside the division and Buchberger loops and a violation aborts with an
// internal error.

#include <compare>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "kempe/errors.hpp"

namespace kempe {

using VarIndex = int;
using Coeff = std::int64_t;

class Monomial {
 public:
  Monomial() = default;  // the unit monomial 1

  static Monomial one() { return Monomial(); }
  static Monomial variable(VarIndex v, int exponent = 1);
  static Monomial from_exponents(std::vector<std::pair<VarIndex, int>> exponents);

  // Sparse exponents, sorted by variable index, all positive.
  const std::vector<std::pair<VarIndex, int>>& exponents() const { return exps_; }
  int degree() const;
  bool is_one() const { return exps_.empty(); }
  int exponent_of(VarIndex v) const;

  Monomial times(const Monomial& m) const;
  bool divides(const Monomial& m) const;
  Monomial divided_by(const Monomial& m) const;  // InternalError if not divisible
  static Monomial lcm(const Monomial& a, const Monomial& b);
  bool coprime_with(const Monomial& m) const;

  // Structural (order-independent) comparison, for containers and dedup.
  bool operator==(const Monomial&) const = default;
  auto operator<=>(const Monomial&) const = default;

 private:
  std::vector<std::pair<VarIndex, int>> exps_;
};

// Graded reverse lexicographic order over a permutation of the variables.
// descending[0] is the largest variable; the last entry is the smallest.
// At equal total degree the monomial with the larger exponent at the
// smallest differing variable is the smaller one.
class MonomialOrder {
 public:
  static MonomialOrder grevlex_default(int variable_count);
  static MonomialOrder grevlex(std::vector<VarIndex> descending);

  int variable_count() const { return static_cast<int>(descending_.size()); }
  VarIndex smallest_variable() const;
  const std::vector<VarIndex>& descending_variables() const { return descending_; }
  int rank_of(VarIndex v) const;

  std::strong_ordering compare(const Monomial& a, const Monomial& b) const;
  bool less(const Monomial& a, const Monomial& b) const { return compare(a, b) < 0; }

  bool operator==(const MonomialOrder&) const = default;

 private:
  std::vector<VarIndex> descending_;
  std::vector<int> rank_of_;  // variable -> rank; rank 0 is the largest
};

class Polynomial {
 public:
  Polynomial() = default;  // zero

  static Polynomial zero() { return Polynomial(); }
  static Polynomial term(Monomial m, Coeff c);
  static Polynomial from_terms(std::vector<std::pair<Monomial, Coeff>> terms);

  // Terms sorted structurally by monomial; no zero coefficients.
  const std::vector<std::pair<Monomial, Coeff>>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  int term_count() const { return static_cast<int>(terms_.size()); }

  Polynomial plus(const Polynomial& p) const;
  Polynomial minus(const Polynomial& p) const;
  Polynomial negated() const;
  Polynomial times(const Monomial& m, Coeff c = 1) const;
  Coeff coefficient_of(const Monomial& m) const;

  std::pair<Monomial, Coeff> leading_term(const MonomialOrder& order) const;  // DomainError on zero

  bool operator==(const Polynomial&) const = default;
  auto operator<=>(const Polynomial&) const = default;

 private:
  std::vector<std::pair<Monomial, Coeff>> terms_;
};

// a - b; zero when a == b.
Polynomial binomial_difference(const Monomial& a, const Monomial& b);

// Difference oriented so the larger monomial under the order carries +1.
Polynomial canonical_binomial(const Monomial& a, const Monomial& b, const MonomialOrder& order);

Polynomial s_polynomial(const Polynomial& f, const Polynomial& g, const MonomialOrder& order);

// Multivariate division remainder against basis elements tried in stored
// order; the result has no monomial divisible by any basis initial.
Polynomial normal_form(Polynomial p, const std::vector<Polynomial>& basis, const MonomialOrder& order);

struct GroebnerBasis {
  MonomialOrder order;
  // Reduced: leading coefficients +1, no monomial of any element in the
  // initial ideal of the others; sorted by leading monomial ascending.
  std::vector<Polynomial> elements;

  std::vector<Monomial> initials() const;
  Polynomial normal_form(const Polynomial& p) const { return kempe::normal_form(p, elements, order); }
  bool contains(const Polynomial& p) const { return normal_form(p).is_zero(); }
};

GroebnerBasis buchberger(const std::vector<Polynomial>& generators, const MonomialOrder& order);

// Turn a (not necessarily reduced) Groebner basis into the unique reduced one.
GroebnerBasis reduce_basis(std::vector<Polynomial> groebner_elements, const MonomialOrder& order);

// All degree-k monomials divisible by none of the initials, by DFS over the
// variables in descending order with divisibility pruning.
std::vector<Monomial> standard_monomials(const std::vector<Monomial>& initials,
                                         const MonomialOrder& order, int degree);

}  // namespace kempe
