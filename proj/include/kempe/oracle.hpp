#pragma once
// Independent combinatorial ground truth: exhaustive coloring enumeration,
// the switching graph with its connected components, and a sequence verifier.
// Deliberately free of any algebra so it can check the Groebner route.

#include <vector>

#include "kempe/graph.hpp"

namespace kempe::oracle {

struct Caps {
  int max_vertices = 9;
  int max_colors = 6;
};

// Every k-coloring with the given support (all of it colored), canonical and
// sorted. ResourceError beyond the caps.
std::vector<Coloring> all_colorings(const Graph& g, int k, const VertexSet& support,
                                    const Caps& caps = {});

struct KempeGraph {
  std::vector<Coloring> nodes;
  std::vector<std::vector<int>> adjacency;  // sorted neighbor indices
  std::vector<int> component_of;            // node index -> component id
  int component_count = 0;

  std::vector<std::vector<int>> components() const;
};

KempeGraph classes_bruteforce(const Graph& g, int k, const VertexSet& support,
                              const Caps& caps = {});

// Breadth-first search from f over single switchings.
bool are_equivalent_bruteforce(const Graph& g, const Coloring& f, const Coloring& h,
                               const Caps& caps = {});

struct VerifyResult {
  bool ok = true;
  int first_failure = -1;  // index of the left element of the offending pair
};

// A sequence is valid when every consecutive pair is equal as canonical
// colorings or differs by exactly one switching (witness search over all
// class pairs and components). Singleton sequences are valid.
VerifyResult verify_sequence(const Graph& g, const std::vector<Coloring>& sequence);

}  // namespace kempe::oracle
