#include "kempe/graph.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <numeric>
#include <sstream>

namespace kempe {

VertexSet sorted_set(VertexSet v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  return v;
}

VertexSet set_union(const VertexSet& a, const VertexSet& b) {
  VertexSet out;
  out.reserve(a.size() + b.size());
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

VertexSet set_intersection(const VertexSet& a, const VertexSet& b) {
  VertexSet out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

VertexSet set_difference(const VertexSet& a, const VertexSet& b) {
  VertexSet out;
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

bool sets_disjoint(const VertexSet& a, const VertexSet& b) {
  auto i = a.begin();
  auto j = b.begin();
  while (i != a.end() && j != b.end()) {
    if (*i < *j)
      ++i;
    else if (*j < *i)
      ++j;
    else
      return false;
  }
  return true;
}

bool set_contains(const VertexSet& a, int v) {
  return std::binary_search(a.begin(), a.end(), v);
}

std::string vertex_set_text(const VertexSet& s) {
  std::ostringstream out;
  out << '{';
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (i) out << ',';
    out << s[i];
  }
  out << '}';
  return out.str();
}

Graph::Graph(int vertex_count, const std::vector<std::pair<int, int>>& edges) : d_(vertex_count) {
  if (d_ < 0) throw DomainError("vertex count must be nonnegative");
  adj_.assign(d_ + 1, std::vector<char>(d_ + 1, 0));
  for (auto [u, v] : edges) {
    if (u < 1 || u > d_ || v < 1 || v > d_)
      throw DomainError("edge endpoint out of range: {" + std::to_string(u) + "," + std::to_string(v) + "}");
    if (u == v) throw DomainError("self-loop at vertex " + std::to_string(u));
    if (u > v) std::swap(u, v);
    if (!adj_[u][v]) edges_.emplace_back(u, v);
    adj_[u][v] = adj_[v][u] = 1;
  }
  std::sort(edges_.begin(), edges_.end());
}

bool Graph::adjacent(int u, int v) const {
  if (!has_vertex(u) || !has_vertex(v)) return false;
  return adj_[u][v] != 0;
}

int Graph::degree(int v) const {
  if (!has_vertex(v)) throw DomainError("vertex out of range: " + std::to_string(v));
  int deg = 0;
  for (int u = 1; u <= d_; ++u) deg += adj_[v][u];
  return deg;
}

VertexSet Graph::vertices() const {
  VertexSet out(d_);
  std::iota(out.begin(), out.end(), 1);
  return out;
}

Graph Graph::complement() const {
  std::vector<std::pair<int, int>> edges;
  for (int u = 1; u <= d_; ++u)
    for (int v = u + 1; v <= d_; ++v)
      if (!adj_[u][v]) edges.emplace_back(u, v);
  return Graph(d_, edges);
}

bool is_stable(const Graph& g, const VertexSet& s) {
  for (int v : s)
    if (!g.has_vertex(v)) throw DomainError("vertex out of range: " + std::to_string(v));
  for (std::size_t i = 0; i < s.size(); ++i)
    for (std::size_t j = i + 1; j < s.size(); ++j)
      if (g.adjacent(s[i], s[j])) return false;
  return true;
}

namespace {

// Include/exclude recursion over vertices with adjacency pruning.
void collect_stable_sets(const Graph& g, int next, VertexSet& current, std::vector<VertexSet>& out) {
  if (next > g.vertex_count()) {
    out.push_back(current);
    return;
  }
  collect_stable_sets(g, next + 1, current, out);
  bool compatible = true;
  for (int v : current)
    if (g.adjacent(v, next)) {
      compatible = false;
      break;
    }
  if (compatible) {
    current.push_back(next);
    collect_stable_sets(g, next + 1, current, out);
    current.pop_back();
  }
}

}  // namespace

VariableTable::VariableTable(const Graph& g) : d_(g.vertex_count()) {
  VertexSet current;
  collect_stable_sets(g, 1, current, sets_);
  std::sort(sets_.begin(), sets_.end(), [](const VertexSet& a, const VertexSet& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  });
  for (int i = 0; i < static_cast<int>(sets_.size()); ++i) index_[sets_[i]] = i;
}

const VertexSet& VariableTable::set_at(int index) const {
  if (index < 0 || index >= size()) throw DomainError("variable index out of range");
  return sets_[index];
}

bool VariableTable::contains(const VertexSet& s) const { return index_.count(s) != 0; }

int VariableTable::index_of(const VertexSet& s) const {
  auto it = index_.find(s);
  if (it == index_.end()) throw DomainError("not a stable set: " + vertex_set_text(s));
  return it->second;
}

std::string VariableTable::variable_name(int index) const { return "x" + vertex_set_text(set_at(index)); }

Coloring::Coloring(std::vector<VertexSet> classes) : classes_(std::move(classes)) {
  std::vector<char> seen;
  for (auto& cls : classes_) {
    cls = sorted_set(std::move(cls));
    for (int v : cls) {
      if (v < 1) throw DomainError("vertex ids must be positive");
      if (v >= static_cast<int>(seen.size())) seen.resize(v + 1, 0);
      if (seen[v]) throw DomainError("color classes overlap at vertex " + std::to_string(v));
      seen[v] = 1;
    }
  }
  std::sort(classes_.begin(), classes_.end(), [](const VertexSet& a, const VertexSet& b) {
    if (a.empty() != b.empty()) return b.empty();  // empty classes last
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  });
}

VertexSet Coloring::support() const {
  VertexSet out;
  for (const auto& cls : classes_) out.insert(out.end(), cls.begin(), cls.end());
  return sorted_set(std::move(out));
}

int Coloring::empty_class_count() const {
  int n = 0;
  for (const auto& cls : classes_) n += cls.empty();
  return n;
}

Coloring Coloring::padded_to(int k) const {
  if (k < this->k()) throw DomainError("cannot pad a coloring to fewer classes");
  auto classes = classes_;
  classes.resize(k);
  return Coloring(std::move(classes));
}

bool is_valid_coloring(const Graph& g, const Coloring& f) {
  for (const auto& cls : f.classes())
    if (!is_stable(g, cls)) return false;
  return true;
}

std::string coloring_text(const Coloring& f) {
  std::string out = "[";
  for (int i = 0; i < f.k(); ++i) {
    if (i) out += ',';
    out += vertex_set_text(f.classes()[i]);
  }
  return out + "]";
}

std::vector<VertexSet> connected_components(const Graph& g, const VertexSet& within) {
  for (int v : within)
    if (!g.has_vertex(v)) throw DomainError("vertex out of range: " + std::to_string(v));
  std::vector<VertexSet> components;
  std::set<int> unvisited(within.begin(), within.end());
  while (!unvisited.empty()) {
    int start = *unvisited.begin();
    unvisited.erase(unvisited.begin());
    VertexSet component{start};
    std::deque<int> queue{start};
    while (!queue.empty()) {
      int v = queue.front();
      queue.pop_front();
      for (auto it = unvisited.begin(); it != unvisited.end();) {
        if (g.adjacent(v, *it)) {
          component.push_back(*it);
          queue.push_back(*it);
          it = unvisited.erase(it);
        } else {
          ++it;
        }
      }
    }
    components.push_back(sorted_set(std::move(component)));
  }
  std::sort(components.begin(), components.end(),
            [](const VertexSet& a, const VertexSet& b) { return a.front() < b.front(); });
  return components;
}

InducedSubgraph induced_subgraph(const Graph& g, const VertexSet& vertices) {
  VertexSet w = sorted_set(vertices);
  for (int v : w)
    if (!g.has_vertex(v)) throw DomainError("vertex out of range: " + std::to_string(v));
  InducedSubgraph out;
  out.to_parent.assign(w.size() + 1, 0);
  out.from_parent.assign(g.vertex_count() + 1, 0);
  for (std::size_t i = 0; i < w.size(); ++i) {
    out.to_parent[i + 1] = w[i];
    out.from_parent[w[i]] = static_cast<int>(i + 1);
  }
  std::vector<std::pair<int, int>> edges;
  for (std::size_t i = 0; i < w.size(); ++i)
    for (std::size_t j = i + 1; j < w.size(); ++j)
      if (g.adjacent(w[i], w[j])) edges.emplace_back(static_cast<int>(i + 1), static_cast<int>(j + 1));
  out.graph = Graph(static_cast<int>(w.size()), edges);
  return out;
}

Coloring kempe_switch(const Graph& g, const Coloring& f, const KempeStep& step) {
  const int k = f.k();
  if (step.color_a < 0 || step.color_a >= k || step.color_b < 0 || step.color_b >= k ||
      step.color_a == step.color_b)
    throw DomainError("kempe step color indices out of range");
  const VertexSet& ca = f.classes()[step.color_a];
  const VertexSet& cb = f.classes()[step.color_b];
  auto components = connected_components(g, set_union(ca, cb));
  if (std::find(components.begin(), components.end(), step.component) == components.end())
    throw DomainError("kempe step does not name a component of the two chosen classes");
  auto classes = f.classes();
  classes[step.color_a] = set_union(set_difference(ca, step.component), set_intersection(cb, step.component));
  classes[step.color_b] = set_union(set_difference(cb, step.component), set_intersection(ca, step.component));
  return Coloring(std::move(classes));
}

std::set<Coloring> all_kempe_neighbors(const Graph& g, const Coloring& f) {
  std::set<Coloring> out;
  for (int a = 0; a < f.k(); ++a) {
    for (int b = a + 1; b < f.k(); ++b) {
      auto joint = set_union(f.classes()[a], f.classes()[b]);
      for (const auto& component : connected_components(g, joint))
        out.insert(kempe_switch(g, f, KempeStep{a, b, component}));
    }
  }
  return out;
}

int max_degree(const Graph& g) {
  int best = 0;
  for (int v = 1; v <= g.vertex_count(); ++v) best = std::max(best, g.degree(v));
  return best;
}

namespace {

bool colorable_with(const Graph& g, int k, int next, std::vector<int>& color, int used) {
  if (next > g.vertex_count()) return true;
  // Symmetry break: a vertex may open at most one fresh color.
  int limit = std::min(k, used + 1);
  for (int c = 1; c <= limit; ++c) {
    bool ok = true;
    for (int v = 1; v < next; ++v)
      if (color[v] == c && g.adjacent(v, next)) {
        ok = false;
        break;
      }
    if (!ok) continue;
    color[next] = c;
    if (colorable_with(g, k, next + 1, color, std::max(used, c))) return true;
    color[next] = 0;
  }
  return false;
}

}  // namespace

int chromatic_number(const Graph& g) {
  if (g.vertex_count() == 0) return 0;
  for (int k = 1; k <= g.vertex_count(); ++k) {
    std::vector<int> color(g.vertex_count() + 1, 0);
    if (colorable_with(g, k, 1, color, 0)) return k;
  }
  return g.vertex_count();
}

}  // namespace kempe
