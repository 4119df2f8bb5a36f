#pragma once
// Generator construction for the coloring ideals of a graph, the saturation
// pipeline down to the toric stable-set ideal, and extensional ideal
// comparison.

#include <string>
#include <vector>

#include "kempe/graph.hpp"
#include "kempe/polynomial.hpp"

namespace kempe {

// Image of a monomial under the monomial map x_S -> t^S s: every vertex with
// its total multiplicity over all stable-set factors, plus the total degree.
struct PiImage {
  std::vector<int> vertex_multiplicity;  // indexed 1..d, [0] unused
  int degree = 0;

  bool operator==(const PiImage&) const = default;
  auto operator<=>(const PiImage&) const = default;
};
PiImage pi_image(const Monomial& m, const VariableTable& table);

// A binomial is balanced when its two monomials have the same image.
bool is_pi_balanced(const Polynomial& p, const VariableTable& table);

// Monomial membership in the overlap ideal: some vertex appears at least
// twice among the stable-set factors.
bool monomial_in_M(const Monomial& m, const VariableTable& table);

enum class IdealKind { L, J, M, K, Q2, I };
std::string ideal_kind_name(IdealKind kind);
IdealKind ideal_kind_from_name(const std::string& name);  // DomainError on unknown

struct IdealSpec {
  IdealKind kind;
  std::vector<Polynomial> generators;
};

// One binomial per way of splitting a singleton off a stable set of size >= 2,
// x_{S\{i}} x_{i} - x_S x_{}, deduplicated.
IdealSpec gens_L(const Graph& g, const VariableTable& table, const MonomialOrder& order);

// Differences of two-class partitions with the same union: unordered pairs of
// disjoint stable sets are grouped by their union, and each group emits
// anchor − other (star shape; same ideal as all pairwise differences).
IdealSpec gens_J(const Graph& g, const VariableTable& table, const MonomialOrder& order);

// All quadratic monomials x_S x_T with S ∩ T nonempty (S = T allowed when
// S is nonempty).
IdealSpec gens_M(const Graph& g, const VariableTable& table, const MonomialOrder& order);

// gens_J ∪ gens_M.
IdealSpec gens_K(const Graph& g, const VariableTable& table, const MonomialOrder& order);

// All quadratic binomials of the toric ideal: pairs of stable sets (any
// intersection) grouped by the image of their product, star-emitted.
IdealSpec gens_Q2(const Graph& g, const VariableTable& table, const MonomialOrder& order);

// Dispatch by kind; kind I yields the reduced Groebner basis elements of the
// toric ideal (computed through groebner_I).
IdealSpec generators_for(IdealKind kind, const Graph& g, const VariableTable& table,
                         const MonomialOrder& order);

// Divide every element by the largest power of the smallest variable dividing
// it. Requires the basis order to have x_{} (variable 0) smallest; the result
// is a Groebner basis of the saturation by that variable.
std::vector<Polynomial> saturate_by_smallest_var(const GroebnerBasis& basis);

// Reduced Groebner basis of the toric stable-set ideal: reduced basis of the
// L generators under the default order, saturated, re-reduced.
GroebnerBasis groebner_I(const Graph& g, const VariableTable& table);

// Five-step pipeline for the reduced Groebner basis of the Kempe ideal:
// basis of L → saturation (a basis of the toric ideal) → keep the quadratic
// binomials whose monomials are products of two disjoint stable sets → run
// Buchberger on those together with the overlap monomials under `order`.
GroebnerBasis algorithm1_K(const Graph& g, const VariableTable& table, const MonomialOrder& order);

// Extensional equality: every generator of each side reduces to zero against
// a reduced basis of the other.
bool ideal_equal(const IdealSpec& a, const IdealSpec& b, const MonomialOrder& order);
bool ideal_equal_given(const IdealSpec& a, const GroebnerBasis& basis_a, const IdealSpec& b,
                       const GroebnerBasis& basis_b);

// Which of the six inclusion-chain cases L ⊆ J ⊆ Q2 ⊆ I the graph realizes.
enum class ChainCase { I = 1, II, III, IV, V, VI };
std::string chain_case_name(ChainCase c);  // "(i)" .. "(vi)"
ChainCase classify_chain(const Graph& g);

}  // namespace kempe
