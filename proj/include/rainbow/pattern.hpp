#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "rainbow/colored_graph.hpp"

namespace rainbow {

/// Largest pattern order accepted; the automorphism scan is exhaustive.
inline constexpr std::size_t kMaxPatternVertices = 12;

/// Small uncolored graph searched for inside a host, with its automorphism
/// group order computed once at construction.
class Pattern {
 public:
  Pattern(std::size_t t, std::span<const Edge> edges, std::string name = {});
  explicit Pattern(ColoredGraph graph, std::string name = {});

  /// P_k: path on k vertices.
  static Pattern path(std::size_t k);
  /// C_l: cycle on l >= 3 vertices.
  static Pattern cycle(std::size_t l);
  /// S_p: center 0 joined to p leaves.
  static Pattern star(std::size_t p);
  /// S_{p,r}: centers 0 and 1, with p leaves on 0 and r leaves on 1.
  static Pattern double_star(std::size_t p, std::size_t r);
  /// M_k: k disjoint edges.
  static Pattern matching(std::size_t k);
  /// K_r.
  static Pattern clique(std::size_t r);

  std::size_t vertex_count() const noexcept { return graph_.vertex_count(); }
  std::size_t edge_count() const noexcept { return graph_.edge_count(); }
  std::span<const Edge> edges() const noexcept { return graph_.edges(); }
  const ColoredGraph& graph() const noexcept { return graph_; }
  std::uint64_t aut_count() const noexcept { return aut_count_; }
  const std::string& name() const noexcept { return name_; }

  bool is_connected() const;
  bool is_tree() const;

 private:
  ColoredGraph graph_;
  std::uint64_t aut_count_ = 1;
  std::string name_;
};

/// Accepts the family shorthands Pk, Ck, Sp, Sp.r, Mk, Kr, or an edge list
/// "0-1,1-2" with an optional vertex count prefix "5:0-1,1-2".
Pattern parse_pattern(std::string_view text);

/// Canonical edge-list literal for any pattern, e.g. "4:0-1,1-2,2-3".
std::string edge_list_literal(const ColoredGraph& g);

/// A star here is a tree with at least one edge in which one vertex is
/// adjacent to all others.
bool is_star(const ColoredGraph& g);
/// A tree that is not a star and whose longest path has four vertices.
bool is_double_star(const ColoredGraph& g);
bool is_tree(const ColoredGraph& g);

}  // namespace rainbow
