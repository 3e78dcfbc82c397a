#pragma once

#include <chrono>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "rainbow/colored_graph.hpp"
#include "rainbow/pattern.hpp"

namespace rainbow {

/// Caps for the exhaustive searches. Unset means unlimited; set caps must be
/// positive.
struct SearchBudget {
  std::optional<std::uint64_t> max_graphs;
  std::optional<std::uint64_t> max_coloring_nodes;  // per host graph
  bool dedupe = true;
  std::optional<std::chrono::milliseconds> time_limit;
};

/// Largest host for which the coloring backtracker is defined.
inline constexpr std::size_t kMaxOracleEdges = 64;

enum class ColorabilityStatus { Colorable, NotColorable, Incomplete };

struct ColorabilityResult {
  ColorabilityStatus status = ColorabilityStatus::Incomplete;
  std::optional<ColoredGraph> coloring;  // set when Colorable
  std::uint64_t nodes = 0;
  std::string binding_cap;  // "max_coloring_nodes" or "time_limit" when Incomplete
};

/// Searches the proper total colorings of g (up to renaming colors) for one
/// with no rainbow copy of f. Existing colors on g are ignored.
ColorabilityResult rainbow_free_colorable(const ColoredGraph& g, const Pattern& f, const SearchBudget& budget = {});

/// Upper-triangle adjacency bits, pair (i, j) with i < j at bit index
/// j(j-1)/2 + i. Needs n <= 11.
std::uint64_t adjacency_code(const ColoredGraph& g);

/// Least adjacency code over all relabelings that list vertices by
/// non-increasing degree. Equal for isomorphic graphs.
std::uint64_t canonical_code(const ColoredGraph& g);

/// All graphs on n vertices: one per isomorphism class when dedupe is set,
/// every labeled graph otherwise. Ordered by edge count, then code.
std::vector<ColoredGraph> enumerate_graphs(std::size_t n, bool dedupe = true);

enum class ExtremalStatus { Exact, Incomplete };

struct ExtremalResult {
  std::size_t n = 0;
  std::string h;
  std::string f;
  std::uint64_t value = 0;  // exact, or a certified lower bound when Incomplete
  ColoredGraph witness;
  ExtremalStatus status = ExtremalStatus::Exact;
  std::string binding_cap;  // which cap stopped the search when Incomplete
  std::uint64_t graphs_examined = 0;
};

/// Maximum number of copies of h over properly colored n-vertex graphs with
/// no rainbow copy of f. Hosts are tried by decreasing copy count, so the
/// first one admitting a good coloring gives the value; ties go to the
/// smallest code.
ExtremalResult exact_extremal(std::size_t n, const Pattern& h, const Pattern& f, const SearchBudget& budget = {});

struct P4Verdict {
  bool colorable = false;
  std::optional<ColoredGraph> witness;     // when colorable
  std::vector<Vertex> offending_component;  // when not
  std::string reason;
};

/// A graph has a proper coloring without a rainbow P4 iff each component is
/// a star, a path, an even cycle, or has at most four vertices.
P4Verdict p4_characterize(const ColoredGraph& g);

struct ExponentFit {
  double slope = 0;
  double intercept = 0;
  double residual = 0;  // root mean square, in log space
};

/// Least-squares line through (log n, log count).
ExponentFit fit_exponent(std::span<const std::pair<double, double>> points);

}  // namespace rainbow
