#include "rainbow/graph_core.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <string>

#include "rainbow/errors.hpp"

namespace rainbow {

namespace {

void require_vertex(const ColoredGraph& g, Vertex v) {
  if (v >= g.vertex_count()) {
    throw InvalidInput("vertex " + std::to_string(v) + " out of range for n=" +
                       std::to_string(g.vertex_count()));
  }
}

}  // namespace

std::vector<Violation> validate_proper(const ColoredGraph& g) {
  std::vector<Violation> out;
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    if (!g.color(e)) out.push_back({ViolationKind::MissingColor, g.edge(e).u, e, e});
  }
  std::vector<std::pair<Color, EdgeId>> at;
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    at.clear();
    for (const Incidence& inc : g.incident(v)) {
      if (auto c = g.color(inc.edge)) at.emplace_back(*c, inc.edge);
    }
    std::sort(at.begin(), at.end());
    for (std::size_t i = 0; i < at.size(); ++i) {
      for (std::size_t j = i + 1; j < at.size() && at[j].first == at[i].first; ++j) {
        out.push_back({ViolationKind::RepeatedColor, v, at[i].second, at[j].second});
      }
    }
  }
  return out;
}

ColoredGraph blow_up(const ColoredGraph& g, Vertex v, std::size_t b) {
  require_vertex(g, v);
  if (b == 0) throw InvalidInput("blow-up multiplicity must be at least 1");
  const std::size_t n = g.vertex_count();
  auto shifted = [v](Vertex x) { return x < v ? x : x - 1; };
  std::vector<ColoredEdge> out;
  std::vector<Vertex> former;
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    const Edge& ed = g.edge(e);
    if (ed.u == v || ed.v == v) continue;
    out.push_back({shifted(ed.u), shifted(ed.v), g.color(e)});
  }
  for (const Incidence& inc : g.incident(v)) former.push_back(shifted(inc.to));
  for (std::size_t c = 0; c < b; ++c) {
    const auto clone = static_cast<Vertex>(n - 1 + c);
    for (Vertex w : former) out.push_back({w, clone, std::nullopt});
  }
  return ColoredGraph(n - 1 + b, out);
}

ColoredGraph extend_coloring_greedy(const ColoredGraph& g, Color first_free) {
  std::vector<std::set<Color>> used(g.vertex_count());
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    const auto c = g.color(e);
    if (!c) continue;
    const Edge& ed = g.edge(e);
    if (!used[ed.u].insert(*c).second || !used[ed.v].insert(*c).second) {
      throw InvalidInput("pre-assigned coloring repeats color " + std::to_string(*c) +
                         " at edge " + std::to_string(ed.u) + "-" + std::to_string(ed.v));
    }
  }
  std::vector<std::optional<Color>> colors(g.colors().begin(), g.colors().end());
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    if (colors[e]) continue;
    const Edge& ed = g.edge(e);
    Color c = first_free;
    while (used[ed.u].contains(c) || used[ed.v].contains(c)) ++c;
    colors[e] = c;
    used[ed.u].insert(c);
    used[ed.v].insert(c);
  }
  return g.with_colors(std::move(colors));
}

std::vector<Vertex> common_neighbors(const ColoredGraph& g, Vertex u, Vertex v) {
  require_vertex(g, u);
  require_vertex(g, v);
  if (u == v) throw InvalidInput("common_neighbors needs two distinct vertices");
  auto a = g.incident(u);
  auto b = g.incident(v);
  std::vector<Vertex> out;
  std::size_t i = 0;
  std::size_t j = 0;
  while (i < a.size() && j < b.size()) {
    if (a[i].to < b[j].to) {
      ++i;
    } else if (b[j].to < a[i].to) {
      ++j;
    } else {
      out.push_back(a[i].to);
      ++i;
      ++j;
    }
  }
  return out;
}

PairClass classify_pair(const ColoredGraph& g, Vertex u, Vertex v, std::size_t threshold) {
  return common_neighbors(g, u, v).size() <= threshold ? PairClass::Thin : PairClass::Fat;
}

std::vector<std::vector<Vertex>> connected_components(const ColoredGraph& g) {
  std::vector<std::vector<Vertex>> out;
  std::vector<char> seen(g.vertex_count(), 0);
  for (Vertex s = 0; s < g.vertex_count(); ++s) {
    if (seen[s]) continue;
    std::vector<Vertex> comp{s};
    seen[s] = 1;
    for (std::size_t i = 0; i < comp.size(); ++i) {
      for (const Incidence& inc : g.incident(comp[i])) {
        if (!seen[inc.to]) {
          seen[inc.to] = 1;
          comp.push_back(inc.to);
        }
      }
    }
    std::sort(comp.begin(), comp.end());
    out.push_back(std::move(comp));
  }
  return out;
}

ColoredGraph induced_subgraph(const ColoredGraph& g, std::span<const Vertex> vertices) {
  constexpr auto kAbsent = static_cast<Vertex>(-1);
  std::vector<Vertex> index(g.vertex_count(), kAbsent);
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    require_vertex(g, vertices[i]);
    if (index[vertices[i]] != kAbsent) throw InvalidInput("repeated vertex in induced_subgraph");
    index[vertices[i]] = static_cast<Vertex>(i);
  }
  std::vector<ColoredEdge> out;
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    const Edge& ed = g.edge(e);
    if (index[ed.u] != kAbsent && index[ed.v] != kAbsent) {
      out.push_back({index[ed.u], index[ed.v], g.color(e)});
    }
  }
  return ColoredGraph(vertices.size(), out);
}

ColoredGraph relabel(const ColoredGraph& g, std::span<const Vertex> perm) {
  if (perm.size() != g.vertex_count()) throw InvalidInput("permutation size mismatch");
  std::vector<char> hit(perm.size(), 0);
  for (Vertex p : perm) {
    if (p >= perm.size() || hit[p]) throw InvalidInput("not a permutation");
    hit[p] = 1;
  }
  std::vector<ColoredEdge> out;
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    out.push_back({perm[g.edge(e).u], perm[g.edge(e).v], g.color(e)});
  }
  return ColoredGraph(g.vertex_count(), out);
}

bool is_bipartite(const ColoredGraph& g) {
  std::vector<int> side(g.vertex_count(), -1);
  for (Vertex s = 0; s < g.vertex_count(); ++s) {
    if (side[s] >= 0) continue;
    side[s] = 0;
    std::deque<Vertex> queue{s};
    while (!queue.empty()) {
      const Vertex x = queue.front();
      queue.pop_front();
      for (const Incidence& inc : g.incident(x)) {
        if (side[inc.to] < 0) {
          side[inc.to] = 1 - side[x];
          queue.push_back(inc.to);
        } else if (side[inc.to] == side[x]) {
          return false;
        }
      }
    }
  }
  return true;
}

}  // namespace rainbow
