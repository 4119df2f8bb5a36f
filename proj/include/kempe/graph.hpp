#pragma once
// Simple undirected graphs on {1..d}, stable sets, colorings identified up to
// permuting colors, and the Kempe switching move.

#include <compare>
#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "kempe/errors.hpp"

namespace kempe {

// A strictly increasing list of vertex ids.
using VertexSet = std::vector<int>;

VertexSet sorted_set(VertexSet v);
VertexSet set_union(const VertexSet& a, const VertexSet& b);
VertexSet set_intersection(const VertexSet& a, const VertexSet& b);
VertexSet set_difference(const VertexSet& a, const VertexSet& b);
bool sets_disjoint(const VertexSet& a, const VertexSet& b);
bool set_contains(const VertexSet& a, int v);
std::string vertex_set_text(const VertexSet& s);  // "{1,5}", "{}"

class Graph {
 public:
  Graph() = default;  // the null graph (d = 0)
  Graph(int vertex_count, const std::vector<std::pair<int, int>>& edges);

  int vertex_count() const { return d_; }
  const std::vector<std::pair<int, int>>& edges() const { return edges_; }
  bool adjacent(int u, int v) const;
  int degree(int v) const;
  bool has_vertex(int v) const { return v >= 1 && v <= d_; }
  VertexSet vertices() const;  // 1..d
  Graph complement() const;

  bool operator==(const Graph&) const = default;

 private:
  int d_ = 0;
  std::vector<std::pair<int, int>> edges_;  // normalized u < v, sorted, unique
  std::vector<std::vector<char>> adj_;
};

// True iff no edge of g joins two members of s. Vertices must lie in 1..d.
bool is_stable(const Graph& g, const VertexSet& s);

// The indexed list of all stable sets of a graph, ordered by (cardinality,
// then lex on the sorted vertex list). The empty set is always index 0, so
// the corresponding variable is the smallest one of the default order.
class VariableTable {
 public:
  explicit VariableTable(const Graph& g);

  int size() const { return static_cast<int>(sets_.size()); }
  int vertex_count() const { return d_; }
  const VertexSet& set_at(int index) const;
  const std::vector<VertexSet>& stable_sets() const { return sets_; }
  bool contains(const VertexSet& s) const;
  int index_of(const VertexSet& s) const;  // DomainError if s is not stable
  int empty_set_index() const { return 0; }
  std::string variable_name(int index) const;  // "x{1,5}", "x{}"

 private:
  int d_ = 0;
  std::vector<VertexSet> sets_;
  std::map<VertexSet, int> index_;
};

// A k-coloring of an induced subgraph, stored canonically as a multiset of
// pairwise disjoint classes: non-empty classes sorted by (size, lex), empty
// classes last. Equality is multiset equality, i.e. colorings are identified
// up to permuting colors. Stability against a particular graph is checked
// separately (is_valid_coloring).
class Coloring {
 public:
  Coloring() = default;  // k = 0
  explicit Coloring(std::vector<VertexSet> classes);

  int k() const { return static_cast<int>(classes_.size()); }
  const std::vector<VertexSet>& classes() const { return classes_; }
  VertexSet support() const;
  int empty_class_count() const;
  Coloring padded_to(int k) const;

  bool operator==(const Coloring&) const = default;
  auto operator<=>(const Coloring&) const = default;

 private:
  std::vector<VertexSet> classes_;
};

bool is_valid_coloring(const Graph& g, const Coloring& f);
std::string coloring_text(const Coloring& f);  // "[{1,5},{2,6},{3,4}]"

struct KempeStep {
  int color_a = 0;  // class indices into the canonical class list
  int color_b = 0;
  VertexSet component;  // one connected component of G[class_a ∪ class_b]
};

// Maximal connected pieces of G[within], ordered by minimum vertex.
std::vector<VertexSet> connected_components(const Graph& g, const VertexSet& within);

struct InducedSubgraph {
  Graph graph;
  std::vector<int> to_parent;    // new id (1-based) -> original id; [0] unused
  std::vector<int> from_parent;  // original id -> new id, 0 if absent
};
InducedSubgraph induced_subgraph(const Graph& g, const VertexSet& vertices);

// Swap the two colors on step.component. The step must name an actual
// component of G[class_a ∪ class_b].
Coloring kempe_switch(const Graph& g, const Coloring& f, const KempeStep& step);

// Every coloring reachable from f by exactly one switching, deduplicated as
// canonical colorings.
std::set<Coloring> all_kempe_neighbors(const Graph& g, const Coloring& f);

int max_degree(const Graph& g);

// Exhaustive search over increasing k; desk scale only.
int chromatic_number(const Graph& g);

}  // namespace kempe
