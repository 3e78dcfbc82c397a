#include "rainbow/oracle.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <set>

#include "rainbow/census.hpp"
#include "rainbow/detail/matcher.hpp"
#include "rainbow/errors.hpp"
#include "rainbow/graph_core.hpp"

namespace rainbow {

namespace {

using Clock = std::chrono::steady_clock;
using Deadline = std::optional<Clock::time_point>;

void check_budget(const SearchBudget& b) {
  if ((b.max_graphs && *b.max_graphs == 0) || (b.max_coloring_nodes && *b.max_coloring_nodes == 0) ||
      (b.time_limit && b.time_limit->count() <= 0)) {
    throw InvalidInput("search budget caps must be positive");
  }
}

Deadline deadline_for(const SearchBudget& b) {
  if (!b.time_limit) return std::nullopt;
  return Clock::now() + *b.time_limit;
}

bool past(const Deadline& d) { return d && Clock::now() >= *d; }

// Host view in which only the edges colored so far exist.
struct PartialHost {
  const ColoredGraph& g;
  const std::vector<Color>& colors;
  const std::vector<char>& on;
  const std::vector<std::size_t>& deg;

  std::size_t vertex_count() const { return g.vertex_count(); }
  std::span<const Incidence> incident(Vertex v) const { return g.incident(v); }
  bool active(EdgeId e) const { return on[e] != 0; }
  std::size_t degree(Vertex v) const { return deg[v]; }
  std::optional<EdgeId> find_edge(Vertex a, Vertex b) const {
    const auto e = g.find_edge(a, b);
    if (e && on[*e]) return e;
    return std::nullopt;
  }
  std::optional<Color> color(EdgeId e) const { return colors[e]; }
};

struct StopAtFirst {
  bool found = false;
  bool operator()(std::span<const Vertex>, std::span<const EdgeId>) {
    found = true;
    return false;
  }
};

class ColoringSearch {
 public:
  ColoringSearch(const ColoredGraph& g, const Pattern& f, std::optional<std::uint64_t> node_cap, Deadline deadline)
      : g_(g),
        f_(f),
        node_cap_(node_cap),
        deadline_(deadline),
        colors_(g.edge_count(), 0),
        on_(g.edge_count(), 0),
        deg_(g.vertex_count(), 0),
        mask_(g.vertex_count(), 0) {
    for (const Edge& e : f.edges()) plans_.push_back(detail::make_seeded_plan(f.graph(), e.u, e.v));
  }

  ColorabilityResult run() {
    ColorabilityResult out;
    assign(0, 0);
    out.nodes = nodes_;
    if (found_) {
      std::vector<std::optional<Color>> total(colors_.begin(), colors_.end());
      out.status = ColorabilityStatus::Colorable;
      out.coloring = g_.without_colors().with_colors(std::move(total));
    } else if (!binding_.empty()) {
      out.status = ColorabilityStatus::Incomplete;
      out.binding_cap = binding_;
    } else {
      out.status = ColorabilityStatus::NotColorable;
    }
    return out;
  }

 private:
  // Returns true when the search must stop (solution found or cap hit).
  bool assign(EdgeId i, std::size_t palette) {
    if (i == g_.edge_count()) {
      found_ = true;
      return true;
    }
    ++nodes_;
    if (node_cap_ && nodes_ > *node_cap_) {
      binding_ = "max_coloring_nodes";
      return true;
    }
    if ((nodes_ & 1023) == 0 && past(deadline_)) {
      binding_ = "time_limit";
      return true;
    }
    const Edge& e = g_.edge(i);
    const std::uint64_t busy = mask_[e.u] | mask_[e.v];
    // Colors 0..palette-1 are in use; palette is the one fresh choice.
    for (Color c = 0; c <= palette; ++c) {
      const std::uint64_t bit = std::uint64_t{1} << c;
      if (busy & bit) continue;
      colors_[i] = c;
      on_[i] = 1;
      ++deg_[e.u];
      ++deg_[e.v];
      mask_[e.u] |= bit;
      mask_[e.v] |= bit;
      const bool stop = !rainbow_through(e) && assign(i + 1, std::max<std::size_t>(palette, c + 1));
      on_[i] = 0;
      --deg_[e.u];
      --deg_[e.v];
      mask_[e.u] &= ~bit;
      mask_[e.v] &= ~bit;
      if (stop) return true;
    }
    return false;
  }

  // Whether some rainbow copy of f uses edge e among the edges colored so far.
  bool rainbow_through(const Edge& e) {
    const PartialHost host{g_, colors_, on_, deg_};
    for (const auto& plan : plans_) {
      for (int flip = 0; flip < 2; ++flip) {
        const Vertex prefix[] = {flip ? e.v : e.u, flip ? e.u : e.v};
        detail::NodeCounter unlimited;
        StopAtFirst sink;
        detail::Matcher matcher(host, plan, true, unlimited, sink);
        matcher.run(prefix);
        if (sink.found) return true;
      }
    }
    return false;
  }

  const ColoredGraph& g_;
  const Pattern& f_;
  std::optional<std::uint64_t> node_cap_;
  Deadline deadline_;
  std::vector<detail::SearchPlan> plans_;
  std::vector<Color> colors_;
  std::vector<char> on_;
  std::vector<std::size_t> deg_;
  std::vector<std::uint64_t> mask_;
  std::uint64_t nodes_ = 0;
  bool found_ = false;
  std::string binding_;
};

ColorabilityResult colorable_until(const ColoredGraph& g, const Pattern& f, std::optional<std::uint64_t> node_cap,
                                   Deadline deadline) {
  if (g.edge_count() > kMaxOracleEdges) {
    throw Unsupported("the coloring search handles at most " + std::to_string(kMaxOracleEdges) + " edges");
  }
  if (f.edge_count() == 0) throw InvalidInput("the forbidden pattern needs at least one edge");
  return ColoringSearch(g, f, node_cap, deadline).run();
}

std::size_t pair_bit(Vertex i, Vertex j) {
  if (i > j) std::swap(i, j);
  return static_cast<std::size_t>(j) * (j - 1) / 2 + i;
}

ColoredGraph from_code(std::size_t n, std::uint64_t code) {
  std::vector<Edge> edges;
  for (Vertex j = 1; j < n; ++j) {
    for (Vertex i = 0; i < j; ++i) {
      if (code >> pair_bit(i, j) & 1) edges.push_back({i, j});
    }
  }
  return ColoredGraph(n, edges);
}

constexpr std::size_t kMaxCodeVertices = 11;

}  // namespace

ColorabilityResult rainbow_free_colorable(const ColoredGraph& g, const Pattern& f, const SearchBudget& budget) {
  check_budget(budget);
  return colorable_until(g, f, budget.max_coloring_nodes, deadline_for(budget));
}

std::uint64_t adjacency_code(const ColoredGraph& g) {
  if (g.vertex_count() > kMaxCodeVertices) throw Unsupported("adjacency codes need at most 11 vertices");
  std::uint64_t code = 0;
  for (const Edge& e : g.edges()) code |= std::uint64_t{1} << pair_bit(e.u, e.v);
  return code;
}

std::uint64_t canonical_code(const ColoredGraph& g) {
  const std::size_t n = g.vertex_count();
  if (n > kMaxCodeVertices) throw Unsupported("adjacency codes need at most 11 vertices");
  std::vector<std::size_t> wanted(n);
  for (Vertex v = 0; v < n; ++v) wanted[v] = g.degree(v);
  std::sort(wanted.begin(), wanted.end(), std::greater<>());
  std::vector<Vertex> position(n);
  std::vector<char> placed(n, 0);
  std::uint64_t best = ~std::uint64_t{0};
  auto place = [&](auto&& self, std::size_t p) -> void {
    if (p == n) {
      std::uint64_t code = 0;
      for (const Edge& e : g.edges()) code |= std::uint64_t{1} << pair_bit(position[e.u], position[e.v]);
      best = std::min(best, code);
      return;
    }
    for (Vertex x = 0; x < n; ++x) {
      if (placed[x] || g.degree(x) != wanted[p]) continue;
      placed[x] = 1;
      position[x] = static_cast<Vertex>(p);
      self(self, p + 1);
      placed[x] = 0;
    }
  };
  place(place, 0);
  return n == 0 ? 0 : best;
}

std::vector<ColoredGraph> enumerate_graphs(std::size_t n, bool dedupe) {
  if (dedupe ? n > 9 : n > 6) {
    throw Unsupported("graph enumeration supports n <= 9 with deduplication and n <= 6 without");
  }
  const std::size_t pairs = n * (n - (n > 0)) / 2;
  std::vector<ColoredGraph> out;
  if (!dedupe) {
    std::vector<std::pair<int, std::uint64_t>> keyed;
    for (std::uint64_t code = 0; code < (std::uint64_t{1} << pairs); ++code) {
      keyed.emplace_back(std::popcount(code), code);
    }
    std::sort(keyed.begin(), keyed.end());
    for (const auto& [edges, code] : keyed) out.push_back(from_code(n, code));
    return out;
  }
  // Level by level: every graph with e+1 edges is some graph with e edges
  // plus one edge, so closing each level under single-edge additions and
  // keeping canonical codes reaches every isomorphism class.
  std::set<std::uint64_t> level{0};
  while (!level.empty()) {
    std::set<std::uint64_t> next;
    for (std::uint64_t code : level) {
      out.push_back(from_code(n, code));
      for (std::size_t bit = 0; bit < pairs; ++bit) {
        if (code >> bit & 1) continue;
        next.insert(canonical_code(from_code(n, code | std::uint64_t{1} << bit)));
      }
    }
    level = std::move(next);
  }
  return out;
}

ExtremalResult exact_extremal(std::size_t n, const Pattern& h, const Pattern& f, const SearchBudget& budget) {
  check_budget(budget);
  if (f.edge_count() == 0) throw InvalidInput("the forbidden pattern needs at least one edge");
  const Deadline deadline = deadline_for(budget);
  const auto hosts = enumerate_graphs(n, budget.dedupe);

  struct Candidate {
    std::uint64_t count;
    std::uint64_t code;
    std::size_t index;
  };
  std::vector<Candidate> order;
  order.reserve(hosts.size());
  for (std::size_t i = 0; i < hosts.size(); ++i) {
    order.push_back({count_copies(hosts[i], h), adjacency_code(hosts[i]), i});
  }
  std::sort(order.begin(), order.end(), [](const Candidate& a, const Candidate& b) {
    return a.count != b.count ? a.count > b.count : a.code < b.code;
  });

  ExtremalResult result;
  result.n = n;
  result.h = h.name();
  result.f = f.name();
  bool found = false;
  std::optional<std::uint64_t> skipped_max;  // largest count among undecided hosts
  for (const Candidate& c : order) {
    if (budget.max_graphs && result.graphs_examined >= *budget.max_graphs) {
      result.binding_cap = "max_graphs";
      skipped_max = std::max(skipped_max.value_or(0), c.count);
      break;
    }
    if (past(deadline)) {
      result.binding_cap = "time_limit";
      skipped_max = std::max(skipped_max.value_or(0), c.count);
      break;
    }
    ++result.graphs_examined;
    ColorabilityResult r = colorable_until(hosts[c.index], f, budget.max_coloring_nodes, deadline);
    if (r.status == ColorabilityStatus::Colorable) {
      found = true;
      result.value = c.count;
      result.witness = std::move(*r.coloring);
      break;
    }
    if (r.status == ColorabilityStatus::Incomplete) {
      result.binding_cap = r.binding_cap;
      skipped_max = std::max(skipped_max.value_or(0), c.count);
    }
  }
  if (!found) {
    // The edgeless graph is always a feasible point.
    result.witness = ColoredGraph(n);
    result.value = count_copies(result.witness, h);
  }
  const bool exact = found && (!skipped_max || *skipped_max <= result.value);
  result.status = exact ? ExtremalStatus::Exact : ExtremalStatus::Incomplete;
  if (exact) result.binding_cap.clear();

  if (!is_proper(result.witness) && result.witness.edge_count() > 0) {
    throw InternalError("extremal witness is not properly colored");
  }
  if (result.witness.edge_count() > 0 && find_rainbow_copy(result.witness, f)) {
    throw InternalError("extremal witness contains a rainbow copy of " + f.name());
  }
  if (count_copies(result.witness, h) != result.value) {
    throw InternalError("extremal witness copy count does not match the reported value");
  }
  return result;
}

P4Verdict p4_characterize(const ColoredGraph& g) {
  static constexpr Color kK4Color[4][4] = {{0, 0, 1, 2}, {0, 0, 2, 1}, {1, 2, 0, 0}, {2, 1, 0, 0}};
  std::vector<std::optional<Color>> colors(g.edge_count());
  auto set = [&](Vertex a, Vertex b, Color c) { colors[*g.find_edge(a, b)] = c; };
  // Alternating 0/1 colors along a walk through the component.
  auto alternate = [&](Vertex start, std::size_t steps) {
    std::optional<Vertex> prev;
    Vertex cur = start;
    for (std::size_t i = 0; i < steps; ++i) {
      Vertex next = cur;
      for (const Incidence& inc : g.incident(cur)) {
        if (inc.to != prev) {
          next = inc.to;
          break;
        }
      }
      set(cur, next, static_cast<Color>(i % 2));
      prev = cur;
      cur = next;
    }
  };

  P4Verdict verdict;
  for (const auto& comp : connected_components(g)) {
    const ColoredGraph sub = induced_subgraph(g, comp);
    const std::size_t vertices = comp.size();
    const std::size_t edges = sub.edge_count();
    std::size_t max_degree = 0;
    for (Vertex v = 0; v < vertices; ++v) max_degree = std::max(max_degree, sub.degree(v));

    if (vertices <= 4) {
      for (const Edge& e : sub.edges()) set(comp[e.u], comp[e.v], kK4Color[e.u][e.v]);
    } else if (is_star(sub)) {
      Color next = 0;
      for (const Edge& e : sub.edges()) set(comp[e.u], comp[e.v], next++);
    } else if (max_degree <= 2 && edges + 1 == vertices) {
      Vertex end = comp.front();
      for (Vertex v = 0; v < vertices; ++v) {
        if (sub.degree(v) == 1) {
          end = comp[v];
          break;
        }
      }
      alternate(end, edges);
    } else if (max_degree == 2 && edges == vertices && vertices % 2 == 0) {
      alternate(comp.front(), edges);
    } else {
      verdict.offending_component = comp;
      verdict.reason = "component with " + std::to_string(vertices) + " vertices and " + std::to_string(edges) +
                       " edges is not a star, a path, an even cycle, or on at most four vertices";
      return verdict;
    }
  }
  verdict.colorable = true;
  verdict.witness = g.without_colors().with_colors(std::move(colors));
  return verdict;
}

ExponentFit fit_exponent(std::span<const std::pair<double, double>> points) {
  if (points.size() < 3) throw InvalidInput("fitting an exponent needs at least three points");
  double sx = 0;
  double sy = 0;
  std::vector<std::pair<double, double>> logs;
  for (const auto& [n, count] : points) {
    if (!(n > 0) || !(count > 0)) throw InvalidInput("fitting an exponent needs positive sizes and counts");
    logs.emplace_back(std::log(n), std::log(count));
    sx += logs.back().first;
    sy += logs.back().second;
  }
  const double k = static_cast<double>(logs.size());
  const double mx = sx / k;
  const double my = sy / k;
  double sxx = 0;
  double sxy = 0;
  for (const auto& [x, y] : logs) {
    sxx += (x - mx) * (x - mx);
    sxy += (x - mx) * (y - my);
  }
  if (sxx <= 0) throw InvalidInput("fitting an exponent needs at least two distinct sizes");
  ExponentFit fit;
  fit.slope = sxy / sxx;
  fit.intercept = my - fit.slope * mx;
  double sq = 0;
  for (const auto& [x, y] : logs) {
    const double r = y - (fit.intercept + fit.slope * x);
    sq += r * r;
  }
  fit.residual = std::sqrt(sq / k);
  return fit;
}

}  // namespace rainbow
