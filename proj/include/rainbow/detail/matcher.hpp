#pragma once

// Backtracking subgraph matcher shared by the census and the oracle.
//
// A Host must provide:
//   std::size_t vertex_count() const;
//   std::span<const Incidence> incident(Vertex) const;   // may list inactive edges
//   bool active(EdgeId) const;
//   std::size_t degree(Vertex) const;                    // active degree
//   std::optional<EdgeId> find_edge(Vertex, Vertex) const;  // active edges only
//   std::optional<Color> color(EdgeId) const;

#include <atomic>
#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "rainbow/colored_graph.hpp"

namespace rainbow::detail {

inline constexpr std::size_t kNoParent = static_cast<std::size_t>(-1);

/// Connectivity-respecting order of pattern vertices: inside each component
/// every vertex after the first has an earlier neighbor.
struct SearchPlan {
  std::vector<Vertex> order;       // pattern vertex placed at each position
  std::vector<std::size_t> parent; // earlier neighbor used to generate candidates
  std::vector<std::vector<std::pair<std::size_t, EdgeId>>> back;  // (earlier position, pattern edge)
  std::vector<std::size_t> degree; // pattern degree per position
  std::size_t pattern_edges = 0;
};

SearchPlan make_plan(const ColoredGraph& pattern);
/// Plan whose first two positions are the adjacent pattern vertices a, b.
SearchPlan make_seeded_plan(const ColoredGraph& pattern, Vertex a, Vertex b);

class NodeCounter {
 public:
  explicit NodeCounter(std::optional<std::uint64_t> limit = std::nullopt) : limit_(limit) {}

  bool tick() {
    const auto c = count_.fetch_add(1, std::memory_order_relaxed) + 1;
    if (limit_ && c > *limit_) {
      exhausted_.store(true, std::memory_order_relaxed);
      return false;
    }
    return true;
  }
  std::uint64_t count() const { return count_.load(std::memory_order_relaxed); }
  bool exhausted() const { return exhausted_.load(std::memory_order_relaxed); }

 private:
  std::optional<std::uint64_t> limit_;
  std::atomic<std::uint64_t> count_{0};
  std::atomic<bool> exhausted_{false};
};

struct GraphHost {
  const ColoredGraph& g;

  std::size_t vertex_count() const { return g.vertex_count(); }
  std::span<const Incidence> incident(Vertex v) const { return g.incident(v); }
  bool active(EdgeId) const { return true; }
  std::size_t degree(Vertex v) const { return g.degree(v); }
  std::optional<EdgeId> find_edge(Vertex a, Vertex b) const { return g.find_edge(a, b); }
  std::optional<Color> color(EdgeId e) const { return g.color(e); }
};

/// Enumerates labeled embeddings (injective, edge-preserving maps) of the
/// planned pattern into the host. In rainbow mode partial embeddings that
/// repeat a color, or touch an uncolored edge, are pruned.
///
/// Sink: bool(std::span<const Vertex> image_by_position,
///            std::span<const EdgeId> host_edge_by_pattern_edge)
/// returning false to stop the search.
template <class Host, class Sink>
class Matcher {
 public:
  Matcher(const Host& host, const SearchPlan& plan, bool rainbow, NodeCounter& nodes, Sink& sink)
      : host_(host),
        plan_(plan),
        rainbow_(rainbow),
        nodes_(nodes),
        sink_(sink),
        image_(plan.order.size()),
        edge_image_(plan.pattern_edges),
        used_(host.vertex_count(), 0) {}

  /// Runs the search with positions 0..prefix.size()-1 pinned to the given
  /// host vertices. Roots of the first position are restricted to
  /// root % stride == offset. Returns false if the search was cut short.
  bool run(std::span<const Vertex> prefix = {}, std::size_t stride = 1, std::size_t offset = 0) {
    prefix_ = prefix;
    stride_ = stride;
    offset_ = offset;
    colors_.clear();
    if (plan_.order.size() > host_.vertex_count()) return true;
    return extend(0);
  }

 private:
  bool extend(std::size_t pos) {
    if (pos == plan_.order.size()) return sink_(std::span<const Vertex>(image_), std::span<const EdgeId>(edge_image_));
    const std::size_t parent = plan_.parent[pos];
    if (pos < prefix_.size()) {
      const Vertex x = prefix_[pos];
      std::optional<EdgeId> via;
      if (parent != kNoParent) {
        via = host_.find_edge(x, image_[parent]);
        if (!via) return true;
      }
      return try_vertex(pos, x, via);
    }
    if (parent == kNoParent) {
      const std::size_t n = host_.vertex_count();
      const std::size_t start = pos == 0 ? offset_ : 0;
      const std::size_t step = pos == 0 ? stride_ : 1;
      for (std::size_t x = start; x < n; x += step) {
        if (!try_vertex(pos, static_cast<Vertex>(x), std::nullopt)) return false;
      }
      return true;
    }
    for (const Incidence& inc : host_.incident(image_[parent])) {
      if (!host_.active(inc.edge)) continue;
      if (!try_vertex(pos, inc.to, inc.edge)) return false;
    }
    return true;
  }

  bool try_vertex(std::size_t pos, Vertex x, std::optional<EdgeId> via_parent) {
    if (used_[x] || host_.degree(x) < plan_.degree[pos]) return true;
    if (!nodes_.tick()) return false;
    const std::size_t colors_before = colors_.size();
    for (const auto& [earlier, pattern_edge] : plan_.back[pos]) {
      std::optional<EdgeId> he =
          earlier == plan_.parent[pos] ? via_parent : host_.find_edge(x, image_[earlier]);
      if (!he) {
        colors_.resize(colors_before);
        return true;
      }
      if (rainbow_) {
        const auto c = host_.color(*he);
        if (!c || contains_color(*c)) {
          colors_.resize(colors_before);
          return true;
        }
        colors_.push_back(*c);
      }
      edge_image_[pattern_edge] = *he;
    }
    used_[x] = 1;
    image_[pos] = x;
    const bool keep_going = extend(pos + 1);
    used_[x] = 0;
    colors_.resize(colors_before);
    return keep_going;
  }

  bool contains_color(Color c) const {
    for (Color d : colors_) {
      if (d == c) return true;
    }
    return false;
  }

  const Host& host_;
  const SearchPlan& plan_;
  bool rainbow_;
  NodeCounter& nodes_;
  Sink& sink_;
  std::vector<Vertex> image_;
  std::vector<EdgeId> edge_image_;
  std::vector<char> used_;
  std::vector<Color> colors_;
  std::span<const Vertex> prefix_;
  std::size_t stride_ = 1;
  std::size_t offset_ = 0;
};

}  // namespace rainbow::detail
