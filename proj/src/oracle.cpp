#include "kempe/oracle.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <map>
#include <numeric>
#include <set>

namespace kempe::oracle {

namespace {

void check_caps(const VertexSet& support, int k, const Caps& caps) {
  if (static_cast<int>(support.size()) > caps.max_vertices)
    throw ResourceError("oracle support cap exceeded: " + std::to_string(support.size()) +
                        " vertices > " + std::to_string(caps.max_vertices));
  if (k > caps.max_colors)
    throw ResourceError("oracle color cap exceeded: k=" + std::to_string(k) + " > " +
                        std::to_string(caps.max_colors));
}

// Restricted-growth enumeration of partitions into at most k nonempty stable
// classes: each vertex joins an existing compatible class or opens a new one.
void enumerate_partitions(const Graph& g, const VertexSet& support, std::size_t next, int k,
                          std::vector<VertexSet>& classes, std::vector<Coloring>& out) {
  if (next == support.size()) {
    auto padded = classes;
    padded.resize(k);
    out.push_back(Coloring(std::move(padded)));
    return;
  }
  int vertex = support[next];
  // Index loop: deeper recursion appends and removes classes, which would
  // invalidate references into the vector.
  for (std::size_t ci = 0; ci < classes.size(); ++ci) {
    bool stable = true;
    for (int member : classes[ci])
      if (g.adjacent(member, vertex)) {
        stable = false;
        break;
      }
    if (!stable) continue;
    classes[ci].push_back(vertex);
    enumerate_partitions(g, support, next + 1, k, classes, out);
    classes[ci].pop_back();
  }
  if (static_cast<int>(classes.size()) < k) {
    classes.push_back({vertex});
    enumerate_partitions(g, support, next + 1, k, classes, out);
    classes.pop_back();
  }
}

}  // namespace

std::vector<Coloring> all_colorings(const Graph& g, int k, const VertexSet& support,
                                    const Caps& caps) {
  if (k < 0) throw DomainError("k must be nonnegative");
  VertexSet w = sorted_set(support);
  for (int v : w)
    if (!g.has_vertex(v)) throw DomainError("vertex out of range: " + std::to_string(v));
  check_caps(w, k, caps);
  std::vector<Coloring> out;
  if (w.empty()) {
    out.push_back(Coloring().padded_to(k));
    return out;
  }
  if (k == 0) return out;
  std::vector<VertexSet> classes;
  enumerate_partitions(g, w, 0, k, classes, out);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::vector<int>> KempeGraph::components() const {
  std::vector<std::vector<int>> out(component_count);
  for (int i = 0; i < static_cast<int>(nodes.size()); ++i) out[component_of[i]].push_back(i);
  return out;
}

KempeGraph classes_bruteforce(const Graph& g, int k, const VertexSet& support, const Caps& caps) {
  KempeGraph kg;
  kg.nodes = all_colorings(g, k, support, caps);
  std::map<Coloring, int> index;
  for (int i = 0; i < static_cast<int>(kg.nodes.size()); ++i) index[kg.nodes[i]] = i;

  std::vector<int> parent(kg.nodes.size());
  std::iota(parent.begin(), parent.end(), 0);
  std::function<int(int)> find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };

  kg.adjacency.resize(kg.nodes.size());
  for (int i = 0; i < static_cast<int>(kg.nodes.size()); ++i) {
    for (const auto& neighbor : all_kempe_neighbors(g, kg.nodes[i])) {
      auto it = index.find(neighbor);
      if (it == index.end()) throw InternalError("switching left the oracle's coloring universe");
      kg.adjacency[i].push_back(it->second);
      parent[find(i)] = find(it->second);
    }
    kg.adjacency[i] = [](std::vector<int> v) {
      std::sort(v.begin(), v.end());
      v.erase(std::unique(v.begin(), v.end()), v.end());
      return v;
    }(std::move(kg.adjacency[i]));
  }

  kg.component_of.assign(kg.nodes.size(), -1);
  for (int i = 0; i < static_cast<int>(kg.nodes.size()); ++i) {
    int root = find(i);
    if (kg.component_of[root] == -1) kg.component_of[root] = kg.component_count++;
    kg.component_of[i] = kg.component_of[root];
  }
  return kg;
}

bool are_equivalent_bruteforce(const Graph& g, const Coloring& f, const Coloring& h,
                               const Caps& caps) {
  if (f.k() != h.k()) throw DomainError("colorings use different numbers of colors");
  if (f.support() != h.support()) throw DomainError("colorings have different supports");
  if (!is_valid_coloring(g, f) || !is_valid_coloring(g, h))
    throw DomainError("input is not a valid coloring of the graph");
  check_caps(f.support(), f.k(), caps);
  if (f == h) return true;
  std::set<Coloring> visited{f};
  std::deque<Coloring> queue{f};
  while (!queue.empty()) {
    Coloring current = queue.front();
    queue.pop_front();
    for (const auto& neighbor : all_kempe_neighbors(g, current)) {
      if (neighbor == h) return true;
      if (visited.insert(neighbor).second) queue.push_back(neighbor);
    }
  }
  return false;
}

VerifyResult verify_sequence(const Graph& g, const std::vector<Coloring>& sequence) {
  for (int i = 0; i < static_cast<int>(sequence.size()); ++i)
    if (!is_valid_coloring(g, sequence[i])) return VerifyResult{false, i};
  for (int i = 0; i + 1 < static_cast<int>(sequence.size()); ++i) {
    const Coloring& from = sequence[i];
    const Coloring& to = sequence[i + 1];
    if (from == to) continue;
    bool witnessed = false;
    for (int a = 0; a < from.k() && !witnessed; ++a) {
      for (int b = a + 1; b < from.k() && !witnessed; ++b) {
        auto joint = set_union(from.classes()[a], from.classes()[b]);
        for (const auto& component : connected_components(g, joint)) {
          if (kempe_switch(g, from, KempeStep{a, b, component}) == to) {
            witnessed = true;
            break;
          }
        }
      }
    }
    if (!witnessed) return VerifyResult{false, i};
  }
  return VerifyResult{};
}

}  // namespace kempe::oracle
