#pragma once
// Shared graph builders for the test suites.

#include <random>
#include <utility>
#include <vector>

#include "kempe/graph.hpp"

namespace kempe::fixtures {

// Two triangles 1-2-3 and 4-5-6 joined by the matching 1-4, 2-5, 3-6.
inline Graph prism() {
  return Graph(6, {{1, 2}, {2, 3}, {1, 3}, {1, 4}, {2, 5}, {3, 6}, {4, 5}, {4, 6}, {5, 6}});
}

// The prism with the edge {1,3} removed.
inline Graph near_prism() {
  return Graph(6, {{1, 2}, {2, 3}, {1, 4}, {2, 5}, {3, 6}, {4, 5}, {4, 6}, {5, 6}});
}

inline Graph path(int d) {
  std::vector<std::pair<int, int>> edges;
  for (int v = 1; v < d; ++v) edges.emplace_back(v, v + 1);
  return Graph(d, edges);
}

inline Graph cycle(int d) {
  std::vector<std::pair<int, int>> edges;
  for (int v = 1; v < d; ++v) edges.emplace_back(v, v + 1);
  edges.emplace_back(d, 1);
  return Graph(d, edges);
}

inline Graph complete(int d) {
  std::vector<std::pair<int, int>> edges;
  for (int u = 1; u <= d; ++u)
    for (int v = u + 1; v <= d; ++v) edges.emplace_back(u, v);
  return Graph(d, edges);
}

inline Graph complete_bipartite(int a, int b) {
  std::vector<std::pair<int, int>> edges;
  for (int u = 1; u <= a; ++u)
    for (int v = a + 1; v <= a + b; ++v) edges.emplace_back(u, v);
  return Graph(a + b, edges);
}

inline Graph from_edge_mask(int d, unsigned mask) {
  std::vector<std::pair<int, int>> edges;
  int bit = 0;
  for (int u = 1; u <= d; ++u)
    for (int v = u + 1; v <= d; ++v) {
      if (mask & (1u << bit)) edges.emplace_back(u, v);
      ++bit;
    }
  return Graph(d, edges);
}

// Every graph on exactly d labeled vertices.
inline std::vector<Graph> all_graphs_on(int d) {
  std::vector<Graph> out;
  const int m = d * (d - 1) / 2;
  for (unsigned mask = 0; mask < (1u << m); ++mask) out.push_back(from_edge_mask(d, mask));
  return out;
}

inline Graph random_graph(std::mt19937& rng, int d, double edge_probability = 0.5) {
  std::bernoulli_distribution toss(edge_probability);
  std::vector<std::pair<int, int>> edges;
  for (int u = 1; u <= d; ++u)
    for (int v = u + 1; v <= d; ++v)
      if (toss(rng)) edges.emplace_back(u, v);
  return Graph(d, edges);
}

}  // namespace kempe::fixtures
