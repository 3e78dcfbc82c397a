#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

namespace rainbow {

using Vertex = std::uint32_t;
using Color = std::uint32_t;
using EdgeId = std::uint32_t;

/// Graphs above this many vertices are rejected at construction.
inline constexpr std::size_t kSoftVertexLimit = 100000;

/// Unordered vertex pair, stored with u < v.
struct Edge {
  Vertex u = 0;
  Vertex v = 0;

  friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Normalizes the pair so that u < v. Throws InvalidInput on a self-loop.
Edge make_edge(Vertex a, Vertex b);

struct ColoredEdge {
  Vertex u = 0;
  Vertex v = 0;
  std::optional<Color> color;
};

struct Incidence {
  Vertex to = 0;
  EdgeId edge = 0;
};

/// Simple undirected graph on vertices 0..n-1 with a partial edge coloring.
///
/// Edges are kept in lexicographic (min endpoint, max endpoint) order and an
/// EdgeId is the index into that order. Instances are immutable; the
/// with_colors/without_colors helpers return new values.
class ColoredGraph {
 public:
  ColoredGraph() = default;
  explicit ColoredGraph(std::size_t n);
  ColoredGraph(std::size_t n, std::span<const Edge> edges);
  ColoredGraph(std::size_t n, std::span<const ColoredEdge> edges);

  std::size_t vertex_count() const noexcept { return n_; }
  std::size_t edge_count() const noexcept { return edges_.size(); }

  std::span<const Edge> edges() const noexcept { return edges_; }
  const Edge& edge(EdgeId e) const { return edges_.at(e); }

  std::span<const std::optional<Color>> colors() const noexcept { return colors_; }
  std::optional<Color> color(EdgeId e) const { return colors_.at(e); }

  /// Incident edges of v sorted by neighbor.
  std::span<const Incidence> incident(Vertex v) const;
  std::size_t degree(Vertex v) const { return incident(v).size(); }

  std::optional<EdgeId> find_edge(Vertex a, Vertex b) const;
  bool has_edge(Vertex a, Vertex b) const { return find_edge(a, b).has_value(); }

  bool is_totally_colored() const;
  /// Number of distinct color ids in use.
  std::size_t palette_size() const;
  /// True when the used ids are exactly 0..palette_size-1.
  bool has_dense_palette() const;

  ColoredGraph with_colors(std::vector<std::optional<Color>> colors) const;
  ColoredGraph without_colors() const;
  std::vector<ColoredEdge> colored_edges() const;

  friend bool operator==(const ColoredGraph& a, const ColoredGraph& b) {
    return a.n_ == b.n_ && a.edges_ == b.edges_ && a.colors_ == b.colors_;
  }

 private:
  void build_adjacency();

  std::size_t n_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::optional<Color>> colors_;
  std::vector<std::size_t> offsets_{0};
  std::vector<Incidence> incidences_;
};

}  // namespace rainbow
