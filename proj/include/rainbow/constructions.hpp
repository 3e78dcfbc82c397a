#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "rainbow/colored_graph.hpp"
#include "rainbow/pattern.hpp"

namespace rainbow {

enum class Family {
  PathLower,
  OddCycleLower,
  EvenCycleLower,
  C4Lower,
  DisjointComponents,
  TreeLeafBlowup,
  TreeStarCase,
  TreeBarePath,
  CliqueLower,
  P4Extremal,
};

std::string_view family_name(Family f);

/// Size of the blown-up classes: either the largest that fits a vertex
/// budget, or a fixed value.
class ClassSize {
 public:
  static ClassSize fit(std::size_t n_target) { return ClassSize(n_target, std::nullopt); }
  static ClassSize exactly(std::size_t b) { return ClassSize(0, b); }

  /// b for a gadget with `fixed` singleton vertices and `classes` blown-up
  /// classes. Throws InvalidInput when even b = 1 does not fit.
  std::size_t resolve(std::size_t fixed, std::size_t classes) const;

  std::size_t n_target() const { return n_target_; }
  std::optional<std::size_t> b() const { return b_; }

 private:
  ClassSize(std::size_t n, std::optional<std::size_t> b) : n_target_(n), b_(b) {}

  std::size_t n_target_;
  std::optional<std::size_t> b_;
};

struct ConstructionSpec {
  Family family;
  std::vector<std::pair<std::string, std::int64_t>> params;
  std::size_t n_target = 0;   // vertex budget (equals the output size for fixed b)
  std::optional<std::size_t> b;  // class size actually used, when the gadget has classes
};

struct Construction {
  ConstructionSpec spec;
  ColoredGraph graph;
  /// The pattern this graph has many copies of, none of them rainbow.
  Pattern target;
  /// Groups of edges given one shared color by the construction; every copy
  /// of the target contains two edges of some group.
  std::vector<std::vector<EdgeId>> shared_color_groups;
  /// The lower bound the graph witnesses, in words.
  std::string statement;
};

/// Paths: classes U_1..U_k with u2-U3 and U4-u5 colored by class index and a
/// U3-U4 matching; every P_k copy meets a same-colored pair. k >= 5.
Construction path_lower(std::size_t k, ClassSize size);

/// Blow-up of C_{2k+1} where two non-adjacent class pairs carry one shared
/// monochromatic perfect matching. k >= 2.
Construction odd_cycle_lower(std::size_t k, ClassSize size);

/// Blow-up of C_{2k} at v3, v6, v8, ..., v_{2k}; edges v1v2 and v4v5 share a
/// color. k >= 3; k = 2 delegates to c4_lower.
Construction even_cycle_lower(std::size_t k, ClassSize size);

/// Two copies of a C4-free polarity graph joined by a monochromatic perfect
/// matching. n_target >= 10.
Construction c4_lower(std::size_t n_target);

/// Vertex of the polarity graph of PG(2, q) for prime q; C4-free.
ColoredGraph polarity_graph(std::size_t q);

/// b disjoint copies of each component of h, each copy colored identically.
/// Rejects patterns whose component colorings do not use fewer colors than
/// h has edges (stars, the triangle).
Construction disjoint_components(const Pattern& h, ClassSize size);

enum class TreeStrategy { LeafBlowup, StarCase, BarePath };

std::string_view strategy_name(TreeStrategy s);

/// Case analysis for a tree that is neither a star nor a double star.
TreeStrategy select_tree_strategy(const Pattern& tree);
/// Whether a strategy's structural premise holds for this tree.
bool strategy_applies(const Pattern& tree, TreeStrategy s);

Construction tree_lower(const Pattern& tree, ClassSize size,
                        std::optional<TreeStrategy> strategy = std::nullopt);

/// K_r construction: r parts, matchings between parts 1-2 and 3-4 in one
/// shared color, complete bipartite elsewhere. r >= 4.
Construction clique_lower(std::size_t r, ClassSize size);

/// floor(n/4) disjoint K4's, each 3-colored by its perfect matchings.
Construction p4_extremal(std::size_t n_target);

/// Name-addressable entry point used by the CLI.
struct ConstructionRequest {
  std::string family;   // path-lower, odd-cycle-lower, ...
  std::optional<std::size_t> k;
  std::optional<std::size_t> r;
  std::optional<std::string> pattern;
  std::optional<std::string> strategy;  // leaf-blowup | star-case | bare-path (or A/B/C)
  std::size_t n_target = 0;
  std::optional<std::size_t> b;
};

Construction construct(const ConstructionRequest& request);

/// Output size as a function of b for the fixed-skeleton families.
std::size_t path_lower_size(std::size_t k, std::size_t b);

}  // namespace rainbow
