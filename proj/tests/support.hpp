#pragma once

// Slow reference implementations used as test oracles. They share nothing
// with the library's search code beyond the graph container.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <random>
#include <vector>

#include "rainbow/colored_graph.hpp"

namespace rainbow::testing {

inline ColoredGraph random_graph(std::size_t n, double p, std::mt19937& rng) {
  std::bernoulli_distribution coin(p);
  std::vector<Edge> edges;
  for (Vertex i = 0; i < n; ++i) {
    for (Vertex j = i + 1; j < n; ++j) {
      if (coin(rng)) edges.push_back({i, j});
    }
  }
  return ColoredGraph(n, edges);
}

// Random pattern on t >= 2 vertices with at least one edge.
inline ColoredGraph random_pattern(std::size_t t, std::mt19937& rng) {
  if (t < 2) t = 2;
  for (;;) {
    ColoredGraph h = random_graph(t, 0.5, rng);
    if (h.edge_count() > 0) return h;
  }
}

// Calls visit(vertex_subset, edge_subset) for every subgraph of g that is
// isomorphic to h: all t-subsets of vertices, all edge subsets of the right
// size inside them, and an exhaustive bijection test.
template <class Visit>
void for_each_subgraph_copy(const ColoredGraph& g, const ColoredGraph& h, Visit&& visit) {
  const std::size_t n = g.vertex_count();
  const std::size_t t = h.vertex_count();
  if (t > n) return;
  std::vector<char> pick(n, 0);
  std::fill(pick.begin(), pick.begin() + static_cast<std::ptrdiff_t>(t), 1);
  std::vector<std::vector<char>> subsets;
  do {
    subsets.push_back(pick);
  } while (std::prev_permutation(pick.begin(), pick.end()));

  for (const auto& mask : subsets) {
    std::vector<Vertex> verts;
    for (Vertex v = 0; v < n; ++v) {
      if (mask[v]) verts.push_back(v);
    }
    std::vector<EdgeId> inside;
    for (EdgeId e = 0; e < g.edge_count(); ++e) {
      if (mask[g.edge(e).u] && mask[g.edge(e).v]) inside.push_back(e);
    }
    const std::size_t m = h.edge_count();
    if (inside.size() < m) continue;
    for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << inside.size()); ++bits) {
      if (static_cast<std::size_t>(__builtin_popcountll(bits)) != m) continue;
      std::vector<EdgeId> chosen;
      for (std::size_t i = 0; i < inside.size(); ++i) {
        if (bits >> i & 1) chosen.push_back(inside[i]);
      }
      // Is (verts, chosen) isomorphic to h?
      std::vector<Vertex> perm(t);
      std::iota(perm.begin(), perm.end(), 0);
      bool iso = false;
      do {
        bool ok = true;
        for (const Edge& he : h.edges()) {
          const Vertex a = verts[perm[he.u]];
          const Vertex b = verts[perm[he.v]];
          bool present = false;
          for (EdgeId e : chosen) {
            const Edge& ge = g.edge(e);
            present = present || (ge.u == std::min(a, b) && ge.v == std::max(a, b));
          }
          ok = ok && present;
        }
        iso = ok;
      } while (!iso && std::next_permutation(perm.begin(), perm.end()));
      if (iso) visit(verts, chosen);
    }
  }
}

inline std::uint64_t brute_count_copies(const ColoredGraph& g, const ColoredGraph& h) {
  std::uint64_t count = 0;
  for_each_subgraph_copy(g, h, [&](const auto&, const auto&) { ++count; });
  return count;
}

inline bool brute_has_rainbow(const ColoredGraph& g, const ColoredGraph& h) {
  bool found = false;
  for_each_subgraph_copy(g, h, [&](const auto&, const std::vector<EdgeId>& edges) {
    std::vector<Color> seen;
    for (EdgeId e : edges) {
      if (!g.color(e)) return;
      seen.push_back(*g.color(e));
    }
    std::sort(seen.begin(), seen.end());
    if (std::adjacent_find(seen.begin(), seen.end()) == seen.end()) found = true;
  });
  return found;
}

}  // namespace rainbow::testing
