#pragma once

#include <cstddef>
#include <vector>

#include "rainbow/colored_graph.hpp"

namespace rainbow {

enum class ViolationKind {
  RepeatedColor,  // two edges at a common vertex share a color
  MissingColor,   // edge has no color
};

struct Violation {
  ViolationKind kind;
  Vertex at;      // shared vertex, or the smaller endpoint for MissingColor
  EdgeId first;
  EdgeId second;  // equals first for MissingColor

  friend bool operator==(const Violation&, const Violation&) = default;
};

/// Every pair of same-colored edges meeting at a vertex, plus one entry per
/// uncolored edge. Empty iff the coloring is total and proper.
std::vector<Violation> validate_proper(const ColoredGraph& g);

inline bool is_proper(const ColoredGraph& g) { return validate_proper(g).empty(); }

/// Replaces v by b clones, each adjacent to the former neighbors of v.
///
/// Vertices other than v keep their relative order (those above v shift down
/// by one); the clones are appended as n-1 .. n-2+b. Colors on edges that
/// touched v are dropped, all other colors are kept.
ColoredGraph blow_up(const ColoredGraph& g, Vertex v, std::size_t b);

/// Colors every uncolored edge, in EdgeId order, with the smallest id
/// >= first_free that is absent at both endpoints. Pre-assigned colors are
/// kept; throws InvalidInput if they already conflict.
ColoredGraph extend_coloring_greedy(const ColoredGraph& g, Color first_free = 0);

/// Sorted common neighborhood of u and v (u != v).
std::vector<Vertex> common_neighbors(const ColoredGraph& g, Vertex u, Vertex v);

enum class PairClass { Thin, Fat };

/// Thin iff the pair has at most `threshold` common neighbors.
PairClass classify_pair(const ColoredGraph& g, Vertex u, Vertex v, std::size_t threshold);

/// Vertex sets of the connected components, each sorted, ordered by their
/// smallest vertex.
std::vector<std::vector<Vertex>> connected_components(const ColoredGraph& g);

/// Subgraph induced on `vertices`; the i-th listed vertex becomes vertex i.
ColoredGraph induced_subgraph(const ColoredGraph& g, std::span<const Vertex> vertices);

/// Applies the permutation old -> perm[old], carrying colors along.
ColoredGraph relabel(const ColoredGraph& g, std::span<const Vertex> perm);

/// Proper 2-coloring of the vertices exists.
bool is_bipartite(const ColoredGraph& g);

}  // namespace rainbow
