#include "rainbow/colored_graph.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "rainbow/errors.hpp"

namespace rainbow {

Edge make_edge(Vertex a, Vertex b) {
  if (a == b) {
    throw InvalidInput("self-loop at vertex " + std::to_string(a));
  }
  return a < b ? Edge{a, b} : Edge{b, a};
}

ColoredGraph::ColoredGraph(std::size_t n) : ColoredGraph(n, std::span<const ColoredEdge>{}) {}

ColoredGraph::ColoredGraph(std::size_t n, std::span<const Edge> edges) {
  std::vector<ColoredEdge> plain;
  plain.reserve(edges.size());
  for (const Edge& e : edges) plain.push_back({e.u, e.v, std::nullopt});
  *this = ColoredGraph(n, std::span<const ColoredEdge>(plain));
}

ColoredGraph::ColoredGraph(std::size_t n, std::span<const ColoredEdge> edges) : n_(n) {
  if (n > kSoftVertexLimit) {
    throw InvalidInput("vertex count " + std::to_string(n) + " exceeds limit " +
                       std::to_string(kSoftVertexLimit));
  }
  std::vector<std::pair<Edge, std::optional<Color>>> items;
  items.reserve(edges.size());
  for (const ColoredEdge& ce : edges) {
    if (ce.u >= n || ce.v >= n) {
      throw InvalidInput("edge " + std::to_string(ce.u) + "-" + std::to_string(ce.v) +
                         " out of range for n=" + std::to_string(n));
    }
    items.emplace_back(make_edge(ce.u, ce.v), ce.color);
  }
  std::sort(items.begin(), items.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  for (std::size_t i = 1; i < items.size(); ++i) {
    if (items[i].first == items[i - 1].first) {
      throw InvalidInput("parallel edge " + std::to_string(items[i].first.u) + "-" +
                         std::to_string(items[i].first.v));
    }
  }
  edges_.reserve(items.size());
  colors_.reserve(items.size());
  for (auto& [e, c] : items) {
    edges_.push_back(e);
    colors_.push_back(c);
  }
  build_adjacency();
}

void ColoredGraph::build_adjacency() {
  std::vector<std::size_t> deg(n_, 0);
  for (const Edge& e : edges_) {
    ++deg[e.u];
    ++deg[e.v];
  }
  offsets_.assign(n_ + 1, 0);
  std::partial_sum(deg.begin(), deg.end(), offsets_.begin() + 1);
  incidences_.assign(offsets_.back(), {});
  std::vector<std::size_t> fill(offsets_.begin(), offsets_.end() - 1);
  for (EdgeId id = 0; id < edges_.size(); ++id) {
    const Edge& e = edges_[id];
    incidences_[fill[e.u]++] = {e.v, id};
    incidences_[fill[e.v]++] = {e.u, id};
  }
  for (std::size_t v = 0; v < n_; ++v) {
    std::sort(incidences_.begin() + offsets_[v], incidences_.begin() + offsets_[v + 1],
              [](const Incidence& a, const Incidence& b) { return a.to < b.to; });
  }
}

std::span<const Incidence> ColoredGraph::incident(Vertex v) const {
  if (v >= n_) throw InvalidInput("vertex " + std::to_string(v) + " out of range");
  return {incidences_.data() + offsets_[v], offsets_[v + 1] - offsets_[v]};
}

std::optional<EdgeId> ColoredGraph::find_edge(Vertex a, Vertex b) const {
  if (a >= n_ || b >= n_ || a == b) return std::nullopt;
  // Search the shorter list.
  if (degree(a) > degree(b)) std::swap(a, b);
  auto list = incident(a);
  auto it = std::lower_bound(list.begin(), list.end(), b,
                             [](const Incidence& inc, Vertex x) { return inc.to < x; });
  if (it == list.end() || it->to != b) return std::nullopt;
  return it->edge;
}

bool ColoredGraph::is_totally_colored() const {
  return std::all_of(colors_.begin(), colors_.end(), [](const auto& c) { return c.has_value(); });
}

std::size_t ColoredGraph::palette_size() const {
  std::vector<Color> used;
  for (const auto& c : colors_) {
    if (c) used.push_back(*c);
  }
  std::sort(used.begin(), used.end());
  return static_cast<std::size_t>(std::unique(used.begin(), used.end()) - used.begin());
}

bool ColoredGraph::has_dense_palette() const {
  std::optional<Color> top;
  for (const auto& c : colors_) {
    if (c && (!top || *c > *top)) top = c;
  }
  return !top || palette_size() == static_cast<std::size_t>(*top) + 1;
}

ColoredGraph ColoredGraph::with_colors(std::vector<std::optional<Color>> colors) const {
  if (colors.size() != edges_.size()) {
    throw InvalidInput("color vector has " + std::to_string(colors.size()) + " entries for " +
                       std::to_string(edges_.size()) + " edges");
  }
  ColoredGraph out = *this;
  out.colors_ = std::move(colors);
  return out;
}

ColoredGraph ColoredGraph::without_colors() const {
  return with_colors(std::vector<std::optional<Color>>(edges_.size()));
}

std::vector<ColoredEdge> ColoredGraph::colored_edges() const {
  std::vector<ColoredEdge> out;
  out.reserve(edges_.size());
  for (std::size_t i = 0; i < edges_.size(); ++i) {
    out.push_back({edges_[i].u, edges_[i].v, colors_[i]});
  }
  return out;
}

}  // namespace rainbow
