#pragma once
// Kempe equivalence decisions, representative systems, class enumeration,
// Hilbert counting and explicit switching-sequence synthesis, all driven by
// the reduced Groebner basis of the Kempe ideal.

#include <cstddef>
#include <vector>

#include "kempe/graph.hpp"
#include "kempe/ideals.hpp"
#include "kempe/polynomial.hpp"

namespace kempe {

inline constexpr std::size_t kDefaultFiberCap = 1'000'000;

// Bijection between colorings and monomials with squarefree non-empty part
// and pairwise disjoint supports; the x_{} exponent counts empty classes.
Monomial coloring_to_monomial(const Coloring& f, const VariableTable& table);
Coloring monomial_to_coloring(const Monomial& m, const VariableTable& table);

// Reduced Groebner basis of the Kempe ideal from its quadratic generators.
GroebnerBasis kempe_groebner_basis(const Graph& g, const VariableTable& table,
                                   const MonomialOrder& order);

// Normal-form membership of x_f - x_g. Both colorings must use the same
// number of colors and the same support.
bool are_equivalent(const Graph& g, const Coloring& f, const Coloring& h,
                    const GroebnerBasis& basis, const VariableTable& table);

struct RepresentativeSystem {
  std::vector<Coloring> all;   // one coloring per class of every induced subgraph
  std::vector<Coloring> full;  // those whose support is the full vertex set
};
RepresentativeSystem representative_system(const Graph& g, int k, const GroebnerBasis& basis,
                                           const VariableTable& table);

// Number of degree-k standard monomials of the basis's initial ideal.
long long hilbert(const GroebnerBasis& basis, int k);
std::vector<long long> hilbert_series(const GroebnerBasis& basis, int max_k);

enum class CountMethod { Representatives, InclusionExclusion };

// Number of classes of k-colorings of the whole graph. The representative
// method filters the standard monomials; inclusion-exclusion sums signed
// Hilbert values over all induced subgraphs (and falls back to the
// representative method above 6 vertices).
long long class_count(const Graph& g, int k, const GroebnerBasis& basis, const VariableTable& table,
                      CountMethod method = CountMethod::Representatives);

// Every coloring equivalent to f, by search over basis-binomial moves
// upward from the normal form of x_f.
std::vector<Coloring> enumerate_class(const Graph& g, const Coloring& f, const GroebnerBasis& basis,
                                      const VariableTable& table);

// Switching sequence realizing a quadratic relation: from the 2-coloring with
// classes (a1, a2) to the one with classes {b1, b2}, flipping one connected
// component of the changed region at a time.
std::vector<Coloring> quad_switch_sequence(const Graph& g, const VertexSet& a1, const VertexSet& a2,
                                           const VertexSet& b1, const VertexSet& b2);

// Combine every coloring of a sequence with the classes of a cofactor
// monomial disjoint from its support; switchings survive the lift.
std::vector<Coloring> lift_sequence(const Monomial& cofactor, const std::vector<Coloring>& sequence,
                                    const VariableTable& table);

// A walk between the two monomials of a binomial through single generator
// moves inside the fiber of their common image.
struct FiberChainStep {
  int generator_index = -1;
  bool forward = true;  // true: larger side -> smaller side of the generator
  Monomial cofactor;
};
struct FiberChain {
  std::vector<Monomial> monomials;  // front and back are the binomial's sides
  std::vector<FiberChainStep> steps;
};
FiberChain fiber_chain(const Graph& g, const Polynomial& binomial, const IdealSpec& quadratic_gens,
                       const VariableTable& table, std::size_t node_cap = kDefaultFiberCap);

// One explicit switching sequence per binomial element of the basis.
struct KempeBasisEntry {
  int element_index = -1;  // index into basis.elements
  Polynomial binomial;
  std::vector<Coloring> sequence;  // endpoints are the binomial's two colorings
};
std::vector<KempeBasisEntry> kempe_basis(const Graph& g, const GroebnerBasis& basis,
                                         const VariableTable& table,
                                         std::size_t fiber_cap = kDefaultFiberCap);

// Record of a monomial reduction: before = cofactor * lead(element),
// after = cofactor * tail(element).
struct TraceStep {
  Monomial before;
  int element_index = -1;
  Monomial cofactor;
  Monomial after;
};
struct ReductionTrace {
  std::vector<TraceStep> steps;
  Monomial normal_form;
};
ReductionTrace reduce_monomial_with_trace(const Monomial& m, const GroebnerBasis& basis);

struct SequenceResult {
  bool equivalent = false;
  std::vector<Coloring> sequence;  // endpoints f and g when equivalent
};

// Reduce both colorings with traces; distinct normal forms mean not
// equivalent, otherwise each trace step is expanded through the matching
// Kempe basis entry lifted by the step's cofactor.
SequenceResult switching_sequence(const Graph& g, const Coloring& f, const Coloring& h,
                                  const GroebnerBasis& basis,
                                  const std::vector<KempeBasisEntry>& kbasis,
                                  const VariableTable& table);

}  // namespace kempe
