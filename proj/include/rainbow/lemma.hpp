#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "rainbow/colored_graph.hpp"

namespace rainbow {

/// Input to the greedy rainbow path search: consecutive anchors v1..vk are
/// joined through connectors u_i, avoiding the vertices in
/// forbidden_vertices and the colors in forbidden_colors. The forbidden
/// vertices may include anchors.
struct LemmaInstance {
  std::vector<Vertex> anchors;
  std::vector<Vertex> forbidden_vertices;
  std::vector<Color> forbidden_colors;
};

/// |U| + 2|A| + 5k - 9, the common-neighbor count that guarantees success.
std::size_t required_common_neighbors(const LemmaInstance& inst);

/// The forbidden-connector count the greedy step may meet at worst when the
/// guarantee is to hold: |U| + 2|A| + 5k - 10.
std::size_t forbidden_bound(const LemmaInstance& inst);

struct PreconditionReport {
  bool holds = false;
  std::size_t required = 0;
  std::vector<std::size_t> common_counts;  // per consecutive anchor pair
  std::optional<std::size_t> first_short;  // first pair below `required`
};

PreconditionReport check_precondition(const ColoredGraph& g, const LemmaInstance& inst);

enum class LemmaMode {
  Strict,      // refuse to search when the precondition fails
  BestEffort,  // search anyway and report where the greedy gets stuck
};

enum class LemmaStatus { Found, NotFound, PreconditionViolated };

struct LemmaOutcome {
  LemmaStatus status = LemmaStatus::NotFound;
  std::vector<Vertex> path;        // v1 u1 v2 ... u_{k-1} vk when found
  std::vector<Vertex> connectors;  // u1 .. u_{k-1} chosen so far
  std::vector<EdgeId> edges;
  std::vector<Color> colors;
  std::optional<std::size_t> stuck_at;  // index j of the pair (v_j, v_{j+1}), 0-based
  /// Largest number of forbidden common neighbors seen at any greedy step.
  std::size_t max_forbidden = 0;
  PreconditionReport precondition;
};

/// Greedy search for a rainbow path v1 u1 v2 u2 ... u_{k-1} vk. At each
/// step the smallest admissible common neighbor is taken. g must be
/// properly and totally colored, with at least two distinct anchors.
///
/// Throws InternalError if the precondition holds and the greedy still gets
/// stuck.
LemmaOutcome find_rainbow_alternating_path(const ColoredGraph& g, const LemmaInstance& inst,
                                           LemmaMode mode = LemmaMode::Strict);

struct CycleOutcome {
  LemmaOutcome path;
  std::vector<Vertex> cycle;   // closed walk order, first vertex not repeated
  std::vector<EdgeId> edges;   // path edges followed by the closing edge
};

/// Runs the path search on anchors v1..v_{k+1} (v1 adjacent to v_{k+1})
/// with the closing edge's color added to the forbidden colors, then closes
/// the path into a rainbow cycle of length 2k+1.
CycleOutcome close_rainbow_odd_cycle(const ColoredGraph& g, const std::vector<Vertex>& anchors,
                                     const std::vector<Vertex>& forbidden_vertices = {},
                                     LemmaMode mode = LemmaMode::Strict);

}  // namespace rainbow
