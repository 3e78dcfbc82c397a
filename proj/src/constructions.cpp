#include "rainbow/constructions.hpp"

#include <algorithm>
#include <array>
#include <deque>
#include <map>
#include <string>

#include "rainbow/errors.hpp"
#include "rainbow/graph_core.hpp"

namespace rainbow {

namespace {

// The vertex budget a ConstructionSpec records: the requested one when b was fitted,
// the output size when b was fixed.
std::size_t recorded_budget(const ClassSize& size, std::size_t used) { return size.b() ? used : size.n_target(); }

// A small graph in which some vertices stand for classes of b clones. Edges
// between a class and anything else become complete bipartite; edges listed
// in `matched` join two classes by the perfect matching clone i <-> clone i.
struct Skeleton {
  std::size_t vertices = 0;
  std::vector<Edge> edges;
  std::vector<char> blown;
  std::vector<Edge> matched;

  explicit Skeleton(std::size_t n) : vertices(n), blown(n, 0) {}

  std::size_t classes() const { return static_cast<std::size_t>(std::count(blown.begin(), blown.end(), 1)); }
  std::size_t fixed() const { return vertices - classes(); }
};

struct Realized {
  ColoredGraph graph;
  std::vector<std::vector<Vertex>> members;  // skeleton vertex -> host vertices

  Vertex at(Vertex s, std::size_t i) const { return members[s].size() == 1 ? members[s][0] : members[s][i]; }
};

Realized realize(const Skeleton& s, std::size_t b) {
  Realized out;
  out.members.resize(s.vertices);
  Vertex next = 0;
  for (Vertex x = 0; x < s.vertices; ++x) {
    const std::size_t size = s.blown[x] ? b : 1;
    for (std::size_t i = 0; i < size; ++i) out.members[x].push_back(next++);
  }
  std::vector<Edge> edges;
  for (const Edge& e : s.edges) {
    const bool is_matched = std::find(s.matched.begin(), s.matched.end(), e) != s.matched.end();
    if (is_matched) {
      for (std::size_t i = 0; i < b; ++i) edges.push_back(make_edge(out.members[e.u][i], out.members[e.v][i]));
      continue;
    }
    for (Vertex a : out.members[e.u]) {
      for (Vertex c : out.members[e.v]) edges.push_back(make_edge(a, c));
    }
  }
  out.graph = ColoredGraph(next, edges);
  return out;
}

// Collects pre-assigned colors and shared-color groups before the greedy
// extension.
class Precoloring {
 public:
  explicit Precoloring(const ColoredGraph& g) : g_(g), colors_(g.edge_count()) {}

  EdgeId set(Vertex a, Vertex b, Color c) {
    const auto e = g_.find_edge(a, b);
    if (!e) throw InternalError("precoloring names a missing edge");
    colors_[*e] = c;
    return *e;
  }

  void add_group(std::vector<EdgeId> group) { groups_.push_back(std::move(group)); }

  Construction finish(ConstructionSpec spec, Pattern target, std::string statement, Color first_free) {
    ColoredGraph colored = extend_coloring_greedy(g_.with_colors(std::move(colors_)), first_free);
    return Construction{std::move(spec), std::move(colored), std::move(target), std::move(groups_),
                        std::move(statement)};
  }

 private:
  const ColoredGraph& g_;
  std::vector<std::optional<Color>> colors_;
  std::vector<std::vector<EdgeId>> groups_;
};

Skeleton cycle_skeleton(std::size_t l) {
  Skeleton s(l);
  for (Vertex i = 0; i < l; ++i) s.edges.push_back(make_edge(i, static_cast<Vertex>((i + 1) % l)));
  return s;
}

std::int64_t as_param(std::size_t x) { return static_cast<std::int64_t>(x); }

bool is_prime(std::size_t q) {
  if (q < 2) return false;
  for (std::size_t d = 2; d * d <= q; ++d) {
    if (q % d == 0) return false;
  }
  return true;
}

// ---- tree analysis --------------------------------------------------------

std::vector<char> leaf_flags(const ColoredGraph& t) {
  std::vector<char> leaf(t.vertex_count(), 0);
  for (Vertex v = 0; v < t.vertex_count(); ++v) leaf[v] = t.degree(v) == 1;
  return leaf;
}

std::size_t leaf_count(const ColoredGraph& t) {
  auto leaf = leaf_flags(t);
  return static_cast<std::size_t>(std::count(leaf.begin(), leaf.end(), 1));
}

// First pair (in edge order) of vertex-disjoint edges between non-leaves.
std::optional<std::pair<Edge, Edge>> independent_inner_edges(const ColoredGraph& t) {
  const auto leaf = leaf_flags(t);
  std::vector<Edge> inner;
  for (const Edge& e : t.edges()) {
    if (!leaf[e.u] && !leaf[e.v]) inner.push_back(e);
  }
  for (std::size_t i = 0; i < inner.size(); ++i) {
    for (std::size_t j = i + 1; j < inner.size(); ++j) {
      const Edge& a = inner[i];
      const Edge& b = inner[j];
      if (a.u != b.u && a.u != b.v && a.v != b.u && a.v != b.v) return std::pair{a, b};
    }
  }
  return std::nullopt;
}

// Bare path v1 v2 v3 v4 (v2, v3 of degree 2) whose first vertex does not
// have degree 2, so it ends a maximal bare path.
std::optional<std::array<Vertex, 4>> find_bare_path(const ColoredGraph& t) {
  auto other = [&](Vertex mid, Vertex from) {
    for (const Incidence& inc : t.incident(mid)) {
      if (inc.to != from) return inc.to;
    }
    return from;
  };
  for (Vertex v1 = 0; v1 < t.vertex_count(); ++v1) {
    if (t.degree(v1) == 2) continue;
    for (const Incidence& inc : t.incident(v1)) {
      const Vertex v2 = inc.to;
      if (t.degree(v2) != 2) continue;
      const Vertex v3 = other(v2, v1);
      if (t.degree(v3) != 2) continue;
      return std::array<Vertex, 4>{v1, v2, v3, other(v3, v2)};
    }
  }
  return std::nullopt;
}

// Center of the tree of non-leaves when that tree is a star with at least
// two leaves.
std::optional<Vertex> inner_star_center(const ColoredGraph& t) {
  const auto leaf = leaf_flags(t);
  std::vector<Vertex> inner;
  for (Vertex v = 0; v < t.vertex_count(); ++v) {
    if (!leaf[v]) inner.push_back(v);
  }
  if (inner.size() < 3) return std::nullopt;
  for (Vertex c : inner) {
    bool all = true;
    for (Vertex w : inner) all = all && (w == c || t.has_edge(c, w));
    if (all) return c;
  }
  return std::nullopt;
}

void require_tree_gadget_input(const Pattern& tree) {
  const ColoredGraph& t = tree.graph();
  if (!is_tree(t)) throw InvalidInput("tree_lower needs a tree, got " + tree.name());
  if (t.edge_count() == 0) throw InvalidInput("tree_lower needs a tree with at least one edge");
  if (is_star(t)) {
    throw InvalidInput(tree.name() + " is a star: every properly edge-colored star is rainbow, "
                       "so ex(n,T,rainbow-T) = 0");
  }
  if (is_double_star(t)) {
    throw InvalidInput(tree.name() + " is a double star: ex(n,T,rainbow-T) = Theta(n), "
                       "realized by disjoint copies rather than a tree gadget");
  }
}

bool is_path_graph(const ColoredGraph& t) {
  for (Vertex v = 0; v < t.vertex_count(); ++v) {
    if (t.degree(v) > 2) return false;
  }
  return true;
}

std::vector<std::pair<std::string, std::int64_t>> tree_params(const Pattern& tree) {
  return {{"t", as_param(tree.vertex_count())}, {"leaves", as_param(leaf_count(tree.graph()))}};
}

std::string tree_statement(const Pattern& tree) {
  return "ex(n, T, rainbow-T) = Omega(n^ceil(t/4)) for the tree T = " + tree.name() +
         " (neither a star nor a double star)";
}

Construction tree_leaf_blowup(const Pattern& tree, ClassSize size) {
  const ColoredGraph& t = tree.graph();
  const auto pair = independent_inner_edges(t);
  if (!pair) throw InvalidInput("leaf blow-up needs two independent edges among the non-leaves");
  Skeleton s(t.vertex_count());
  s.edges.assign(t.edges().begin(), t.edges().end());
  s.blown = leaf_flags(t);
  const std::size_t b = size.resolve(s.fixed(), s.classes());
  const Realized r = realize(s, b);
  Precoloring pre(r.graph);
  pre.add_group({pre.set(r.at(pair->first.u, 0), r.at(pair->first.v, 0), 0),
                 pre.set(r.at(pair->second.u, 0), r.at(pair->second.v, 0), 0)});
  ConstructionSpec spec{Family::TreeLeafBlowup, tree_params(tree), recorded_budget(size, r.graph.vertex_count()), b};
  return pre.finish(std::move(spec), tree, tree_statement(tree), 1);
}

Construction tree_star_case(const Pattern& tree, ClassSize size) {
  const ColoredGraph& t = tree.graph();
  const auto center = inner_star_center(t);
  if (!center) throw InvalidInput("star case needs the non-leaves to form a star with at least two leaves");
  const auto leaf = leaf_flags(t);
  const Vertex u = *center;
  std::vector<Vertex> ends;  // leaves of the inner star
  for (Vertex x = 0; x < t.vertex_count(); ++x) {
    if (!leaf[x] && x != u) ends.push_back(x);
  }
  Vertex v = ends.front();
  for (Vertex x : ends) {
    if (t.degree(x) < t.degree(v)) v = x;
  }
  Vertex w = ends.front() == v ? ends[1] : ends.front();
  Vertex v_leaf = v;
  for (const Incidence& inc : t.incident(v)) {
    if (leaf[inc.to]) {
      v_leaf = inc.to;
      break;
    }
  }
  Skeleton s(t.vertex_count());
  s.edges.assign(t.edges().begin(), t.edges().end());
  for (Vertex x = 0; x < t.vertex_count(); ++x) s.blown[x] = leaf[x] && !t.has_edge(x, v);
  const std::size_t b = size.resolve(s.fixed(), s.classes());
  const Realized r = realize(s, b);
  Precoloring pre(r.graph);
  pre.add_group({pre.set(r.at(u, 0), r.at(w, 0), 0), pre.set(r.at(v, 0), r.at(v_leaf, 0), 0)});
  auto params = tree_params(tree);
  params.emplace_back("blown_leaves", as_param(s.classes()));
  ConstructionSpec spec{Family::TreeStarCase, std::move(params), recorded_budget(size, r.graph.vertex_count()), b};
  return pre.finish(std::move(spec), tree, tree_statement(tree), 1);
}

Construction tree_bare_path(const Pattern& tree, ClassSize size) {
  const ColoredGraph& t = tree.graph();
  const auto path = find_bare_path(t);
  if (!path) throw InvalidInput("bare-path gadget needs a path v1v2v3v4 with deg(v2) = deg(v3) = 2");
  const auto [v1, v2, v3, v4] = *path;
  const auto leaf = leaf_flags(t);
  Skeleton s(t.vertex_count());
  s.edges.assign(t.edges().begin(), t.edges().end());
  s.matched.push_back(make_edge(v2, v3));
  s.blown[v2] = 1;
  s.blown[v3] = 1;
  for (Vertex x = 0; x < t.vertex_count(); ++x) {
    if (leaf[x] && x != v1 && x != v4) s.blown[x] = 1;
  }
  // Remaining degree-2 vertices in breadth-first order from v1; each is
  // replaced only while both of its neighbors are still single vertices.
  std::vector<Vertex> order{v1};
  std::vector<char> seen(t.vertex_count(), 0);
  seen[v1] = 1;
  for (std::size_t i = 0; i < order.size(); ++i) {
    for (const Incidence& inc : t.incident(order[i])) {
      if (!seen[inc.to]) {
        seen[inc.to] = 1;
        order.push_back(inc.to);
      }
    }
  }
  for (Vertex x : order) {
    if (t.degree(x) != 2 || x == v2 || x == v3) continue;
    bool still_two = true;
    for (const Incidence& inc : t.incident(x)) still_two = still_two && !s.blown[inc.to];
    if (still_two) s.blown[x] = 1;
  }
  const std::size_t b = size.resolve(s.fixed(), s.classes());
  const Realized r = realize(s, b);
  Precoloring pre(r.graph);
  std::vector<EdgeId> rungs;
  for (std::size_t i = 0; i < b; ++i) {
    const auto c = static_cast<Color>(i);
    pre.add_group({pre.set(r.at(v1, 0), r.at(v2, i), c), pre.set(r.at(v3, i), r.at(v4, 0), c)});
    rungs.push_back(pre.set(r.at(v2, i), r.at(v3, i), static_cast<Color>(b)));
  }
  pre.add_group(std::move(rungs));
  auto params = tree_params(tree);
  params.emplace_back("classes", as_param(s.classes()));
  ConstructionSpec spec{Family::TreeBarePath, std::move(params), recorded_budget(size, r.graph.vertex_count()), b};
  return pre.finish(std::move(spec), tree, tree_statement(tree), static_cast<Color>(b + 1));
}

}  // namespace

std::string_view family_name(Family f) {
  switch (f) {
    case Family::PathLower: return "path-lower";
    case Family::OddCycleLower: return "odd-cycle-lower";
    case Family::EvenCycleLower: return "even-cycle-lower";
    case Family::C4Lower: return "c4-lower";
    case Family::DisjointComponents: return "disjoint-components";
    case Family::TreeLeafBlowup: return "tree-leaf-blowup";
    case Family::TreeStarCase: return "tree-star-case";
    case Family::TreeBarePath: return "tree-bare-path";
    case Family::CliqueLower: return "clique-lower";
    case Family::P4Extremal: return "p4-extremal";
  }
  return "unknown";
}

std::string_view strategy_name(TreeStrategy s) {
  switch (s) {
    case TreeStrategy::LeafBlowup: return "leaf-blowup";
    case TreeStrategy::StarCase: return "star-case";
    case TreeStrategy::BarePath: return "bare-path";
  }
  return "unknown";
}

std::size_t ClassSize::resolve(std::size_t fixed, std::size_t classes) const {
  if (b_) {
    if (*b_ == 0) throw InvalidInput("class size b must be at least 1");
    return *b_;
  }
  if (classes == 0) throw InternalError("gadget without classes");
  if (n_target_ < fixed + classes) {
    throw InvalidInput("n_target " + std::to_string(n_target_) + " is too small: the skeleton needs at least " +
                       std::to_string(fixed + classes) + " vertices");
  }
  return (n_target_ - fixed) / classes;
}

std::size_t path_lower_size(std::size_t k, std::size_t b) {
  std::size_t classes = 0;
  for (std::size_t i = 1; i <= k; ++i) {
    const bool big = k % 2 == 1 ? (i == 1 || i == 3 || i == 4 || (i >= 7 && i % 2 == 1))
                                : (i == 1 || i == 3 || (i >= 4 && i % 2 == 0));
    classes += big;
  }
  return (k - classes) + classes * b;
}

Construction path_lower(std::size_t k, ClassSize size) {
  if (k < 5) throw InvalidInput("path_lower needs k >= 5");
  // Skeleton vertex i-1 stands for U_i.
  Skeleton s(k);
  for (Vertex i = 0; i + 1 < k; ++i) s.edges.push_back({i, i + 1});
  for (std::size_t i = 1; i <= k; ++i) {
    s.blown[i - 1] = k % 2 == 1 ? (i == 1 || i == 3 || i == 4 || (i >= 7 && i % 2 == 1))
                                : (i == 1 || i == 3 || (i >= 4 && i % 2 == 0));
  }
  s.matched.push_back({2, 3});
  const std::size_t b = size.resolve(s.fixed(), s.classes());
  const Realized r = realize(s, b);
  Precoloring pre(r.graph);
  const Vertex u2 = 1;
  const Vertex u3 = 2;
  const Vertex u4 = 3;
  const Vertex u5 = 4;
  std::vector<EdgeId> matching;
  for (std::size_t i = 0; i < b; ++i) {
    const auto c = static_cast<Color>(i);
    pre.add_group({pre.set(r.at(u2, 0), r.at(u3, i), c), pre.set(r.at(u4, i), r.at(u5, 0), c)});
    // The U3-U4 matching shares one color; for k = 5 this is what keeps the
    // paths u4 u3 u2 u3' u4' and u3 u4 u5 u4' u3' from being rainbow.
    matching.push_back(pre.set(r.at(u3, i), r.at(u4, i), static_cast<Color>(b)));
  }
  pre.add_group(std::move(matching));
  ConstructionSpec spec{Family::PathLower, {{"k", as_param(k)}}, recorded_budget(size, r.graph.vertex_count()), b};
  return pre.finish(std::move(spec), Pattern::path(k),
                    "ex(n, P_k, rainbow-P_k) = Omega(n^floor(k/2)) for k >= 5", static_cast<Color>(b + 1));
}

Construction odd_cycle_lower(std::size_t k, ClassSize size) {
  if (k < 2) {
    throw InvalidInput("odd_cycle_lower needs k >= 2 (ex(n, C3, rainbow-C3) = 0)");
  }
  const std::size_t l = 2 * k + 1;
  Skeleton s = cycle_skeleton(l);
  std::fill(s.blown.begin(), s.blown.end(), 1);
  s.matched = {{0, 1}, {2, 3}};
  const std::size_t b = size.resolve(s.fixed(), s.classes());
  const Realized r = realize(s, b);
  Precoloring pre(r.graph);
  std::vector<EdgeId> group;
  for (std::size_t i = 0; i < b; ++i) {
    group.push_back(pre.set(r.at(0, i), r.at(1, i), 0));
    group.push_back(pre.set(r.at(2, i), r.at(3, i), 0));
  }
  pre.add_group(std::move(group));
  ConstructionSpec spec{Family::OddCycleLower, {{"k", as_param(k)}}, recorded_budget(size, r.graph.vertex_count()), b};
  return pre.finish(std::move(spec), Pattern::cycle(l),
                    "ex(n, C_{2k+1}, rainbow-C_{2k+1}) = Theta(n^{2k-1}) for k >= 2", 1);
}

Construction even_cycle_lower(std::size_t k, ClassSize size) {
  if (k == 2) {
    if (size.b()) throw InvalidInput("even_cycle_lower with k = 2 is the C4 construction, sized by n_target only");
    Construction c = c4_lower(size.n_target());
    return c;
  }
  if (k < 2) throw InvalidInput("even_cycle_lower needs k >= 2");
  const std::size_t l = 2 * k;
  // Skeleton vertex i-1 stands for v_i; classes at v3 and v6, v8, ..., v_{2k}.
  Skeleton s = cycle_skeleton(l);
  s.blown[2] = 1;
  for (std::size_t j = 3; j <= k; ++j) s.blown[2 * j - 1] = 1;
  const std::size_t b = size.resolve(s.fixed(), s.classes());
  const Realized r = realize(s, b);
  Precoloring pre(r.graph);
  pre.add_group({pre.set(r.at(0, 0), r.at(1, 0), 0), pre.set(r.at(3, 0), r.at(4, 0), 0)});
  ConstructionSpec spec{Family::EvenCycleLower, {{"k", as_param(k)}}, recorded_budget(size, r.graph.vertex_count()), b};
  return pre.finish(std::move(spec), Pattern::cycle(l),
                    "ex(n, C_{2k}, rainbow-C_{2k}) = Omega(n^{k-1}) for k >= 2", 1);
}

ColoredGraph polarity_graph(std::size_t q) {
  if (!is_prime(q)) throw InvalidInput("polarity graph needs a prime field order, got " + std::to_string(q));
  // Points of PG(2, q) as vectors whose first non-zero coordinate is 1.
  std::vector<std::array<std::size_t, 3>> points;
  points.push_back({0, 0, 1});
  for (std::size_t z = 0; z < q; ++z) points.push_back({0, 1, z});
  for (std::size_t y = 0; y < q; ++y) {
    for (std::size_t z = 0; z < q; ++z) points.push_back({1, y, z});
  }
  std::vector<Edge> edges;
  for (Vertex i = 0; i < points.size(); ++i) {
    for (Vertex j = i + 1; j < points.size(); ++j) {
      const auto& a = points[i];
      const auto& b = points[j];
      if ((a[0] * b[0] + a[1] * b[1] + a[2] * b[2]) % q == 0) edges.push_back({i, j});
    }
  }
  return ColoredGraph(points.size(), edges);
}

Construction c4_lower(std::size_t n_target) {
  if (n_target < 10) throw InvalidInput("c4_lower needs n_target >= 10");
  const std::size_t m = n_target / 2;
  std::size_t q = 0;
  for (std::size_t p = 2; p * p + p + 1 <= m; ++p) {
    if (is_prime(p)) q = p;
  }
  const ColoredGraph layer = q == 0 ? Pattern::cycle(5).graph() : polarity_graph(q);
  const std::size_t l = layer.vertex_count();
  std::vector<Edge> edges;
  for (const Edge& e : layer.edges()) {
    edges.push_back(e);
    edges.push_back({static_cast<Vertex>(e.u + l), static_cast<Vertex>(e.v + l)});
  }
  for (Vertex v = 0; v < l; ++v) edges.push_back({v, static_cast<Vertex>(v + l)});
  const ColoredGraph g(2 * l, edges);
  Precoloring pre(g);
  std::vector<EdgeId> cross;
  for (Vertex v = 0; v < l; ++v) cross.push_back(pre.set(v, static_cast<Vertex>(v + l), 0));
  pre.add_group(std::move(cross));
  ConstructionSpec spec{Family::C4Lower,
                        {{"q", as_param(q)}, {"layer_vertices", as_param(l)}, {"layer_edges", as_param(layer.edge_count())}},
                        n_target,
                        std::nullopt};
  return pre.finish(std::move(spec), Pattern::cycle(4), "ex(n, C4, rainbow-C4) = Omega(n^{3/2})", 1);
}

Construction disjoint_components(const Pattern& h, ClassSize size) {
  const auto comps = connected_components(h.graph());
  std::vector<ColoredGraph> colored;
  std::size_t palette = 0;
  for (const auto& comp : comps) {
    colored.push_back(extend_coloring_greedy(induced_subgraph(h.graph(), comp)));
    palette = std::max(palette, colored.back().palette_size());
  }
  if (palette >= h.edge_count()) {
    throw InvalidInput(h.name() + " must be neither a star nor a triangle: its components need " +
                       std::to_string(palette) + " colors for " + std::to_string(h.edge_count()) + " edges");
  }
  const std::size_t b = size.resolve(0, h.vertex_count());
  std::vector<ColoredEdge> edges;
  Vertex base = 0;
  for (const ColoredGraph& comp : colored) {
    for (std::size_t copy = 0; copy < b; ++copy) {
      for (const ColoredEdge& e : comp.colored_edges()) {
        edges.push_back({e.u + base, e.v + base, e.color});
      }
      base += static_cast<Vertex>(comp.vertex_count());
    }
  }
  ColoredGraph g(base, edges);
  std::map<Color, std::vector<EdgeId>> by_color;
  for (EdgeId e = 0; e < g.edge_count(); ++e) by_color[*g.color(e)].push_back(e);
  std::vector<std::vector<EdgeId>> groups;
  for (auto& [c, ids] : by_color) groups.push_back(std::move(ids));
  ConstructionSpec spec{Family::DisjointComponents,
                        {{"components", as_param(comps.size())}, {"colors", as_param(palette)}},
                        recorded_budget(size, g.vertex_count()),
                        b};
  return Construction{std::move(spec), std::move(g), h, std::move(groups),
                      "ex(n, H, rainbow-H) = Omega(n^c) for H with c components, neither a star nor a triangle"};
}

bool strategy_applies(const Pattern& tree, TreeStrategy s) {
  const ColoredGraph& t = tree.graph();
  if (!is_tree(t) || is_star(t) || is_double_star(t)) return false;
  switch (s) {
    case TreeStrategy::LeafBlowup: return independent_inner_edges(t).has_value();
    case TreeStrategy::StarCase: return inner_star_center(t).has_value();
    case TreeStrategy::BarePath: return find_bare_path(t).has_value();
  }
  return false;
}

TreeStrategy select_tree_strategy(const Pattern& tree) {
  require_tree_gadget_input(tree);
  const ColoredGraph& t = tree.graph();
  const std::size_t vertices = t.vertex_count();
  const std::size_t leaves = leaf_count(t);
  const bool path5 = vertices == 5 && is_path_graph(t);
  if (find_bare_path(t) && (vertices + 3 > 4 * leaves || path5)) return TreeStrategy::BarePath;
  if (independent_inner_edges(t)) return TreeStrategy::LeafBlowup;
  return TreeStrategy::StarCase;
}

Construction tree_lower(const Pattern& tree, ClassSize size, std::optional<TreeStrategy> strategy) {
  require_tree_gadget_input(tree);
  const TreeStrategy chosen = strategy.value_or(select_tree_strategy(tree));
  switch (chosen) {
    case TreeStrategy::LeafBlowup: return tree_leaf_blowup(tree, size);
    case TreeStrategy::StarCase: return tree_star_case(tree, size);
    case TreeStrategy::BarePath: return tree_bare_path(tree, size);
  }
  throw InternalError("unhandled tree strategy");
}

Construction clique_lower(std::size_t r, ClassSize size) {
  if (r < 4) throw InvalidInput("clique_lower needs r >= 4");
  Skeleton s(r);
  for (Vertex i = 0; i < r; ++i) {
    for (Vertex j = i + 1; j < r; ++j) s.edges.push_back({i, j});
  }
  std::fill(s.blown.begin(), s.blown.end(), 1);
  s.matched = {{0, 1}, {2, 3}};
  const std::size_t b = size.resolve(s.fixed(), s.classes());
  const Realized real = realize(s, b);
  Precoloring pre(real.graph);
  std::vector<EdgeId> group;
  for (std::size_t i = 0; i < b; ++i) group.push_back(pre.set(real.at(0, i), real.at(1, i), 0));
  for (std::size_t i = 0; i < b; ++i) group.push_back(pre.set(real.at(2, i), real.at(3, i), 0));
  pre.add_group(std::move(group));
  ConstructionSpec spec{Family::CliqueLower, {{"r", as_param(r)}}, recorded_budget(size, real.graph.vertex_count()), b};
  return pre.finish(std::move(spec), Pattern::clique(r), "ex(n, K_r, rainbow-K_r) = Omega(n^{r-2}) for r >= 4", 1);
}

Construction p4_extremal(std::size_t n_target) {
  // Perfect matchings of K4 on local vertices 0..3.
  static constexpr std::array<std::array<Edge, 2>, 3> kMatchings{{{{{0, 1}, {2, 3}}},
                                                                  {{{0, 2}, {1, 3}}},
                                                                  {{{0, 3}, {1, 2}}}}};
  std::vector<ColoredEdge> edges;
  for (Vertex base = 0; base + 4 <= n_target; base += 4) {
    for (Color c = 0; c < 3; ++c) {
      for (const Edge& e : kMatchings[c]) edges.push_back({base + e.u, base + e.v, c});
    }
  }
  ColoredGraph g(n_target, edges);
  std::vector<std::vector<EdgeId>> groups;
  for (Vertex base = 0; base + 4 <= n_target; base += 4) {
    for (Color c = 0; c < 3; ++c) {
      std::vector<EdgeId> group;
      for (const Edge& e : kMatchings[c]) group.push_back(*g.find_edge(base + e.u, base + e.v));
      groups.push_back(std::move(group));
    }
  }
  ConstructionSpec spec{Family::P4Extremal, {{"k4_count", as_param(n_target / 4)}}, n_target, std::nullopt};
  return Construction{std::move(spec), std::move(g), Pattern::path(4), std::move(groups),
                      "ex(n, P4, rainbow-P4) = 12 floor(n/4)"};
}

Construction construct(const ConstructionRequest& req) {
  auto need = [&](const std::optional<std::size_t>& v, const char* flag) {
    if (!v) throw InvalidInput(std::string("--") + flag + " is required for " + req.family);
    return *v;
  };
  auto need_pattern = [&] {
    if (!req.pattern) throw InvalidInput("--pattern is required for " + req.family);
    return parse_pattern(*req.pattern);
  };
  const ClassSize size = req.b ? ClassSize::exactly(*req.b) : ClassSize::fit(req.n_target);
  Construction out = [&]() -> Construction {
    if (req.family == "path-lower") return path_lower(need(req.k, "k"), size);
    if (req.family == "odd-cycle-lower") return odd_cycle_lower(need(req.k, "k"), size);
    if (req.family == "even-cycle-lower") return even_cycle_lower(need(req.k, "k"), size);
    if (req.family == "c4-lower") return c4_lower(req.n_target);
    if (req.family == "disjoint-components") return disjoint_components(need_pattern(), size);
    if (req.family == "tree-lower") {
      std::optional<TreeStrategy> strategy;
      if (req.strategy) {
        const std::string& s = *req.strategy;
        if (s == "A" || s == "leaf-blowup") {
          strategy = TreeStrategy::LeafBlowup;
        } else if (s == "B" || s == "star-case") {
          strategy = TreeStrategy::StarCase;
        } else if (s == "C" || s == "bare-path") {
          strategy = TreeStrategy::BarePath;
        } else {
          throw InvalidInput("unknown tree strategy '" + s + "'");
        }
      }
      return tree_lower(need_pattern(), size, strategy);
    }
    if (req.family == "clique-lower") return clique_lower(need(req.r, "r"), size);
    if (req.family == "p4-extremal") return p4_extremal(req.n_target);
    throw InvalidInput("unknown construction family '" + req.family + "'");
  }();
  if (req.b && req.n_target > 0 && out.graph.vertex_count() > req.n_target) {
    throw InvalidInput("b = " + std::to_string(*req.b) + " gives " + std::to_string(out.graph.vertex_count()) +
                       " vertices, above n_target = " + std::to_string(req.n_target));
  }
  return out;
}

}  // namespace rainbow
