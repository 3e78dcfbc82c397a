#include "rainbow/census.hpp"

#include <algorithm>
#include <deque>
#include <string>
#include <thread>

#include "rainbow/detail/matcher.hpp"
#include "rainbow/errors.hpp"

namespace rainbow {

namespace detail {

namespace {

SearchPlan finish_plan(const ColoredGraph& h, std::vector<Vertex> order) {
  SearchPlan plan;
  plan.pattern_edges = h.edge_count();
  std::vector<std::size_t> position(h.vertex_count(), kNoParent);
  for (std::size_t i = 0; i < order.size(); ++i) position[order[i]] = i;
  plan.parent.assign(order.size(), kNoParent);
  plan.back.resize(order.size());
  plan.degree.resize(order.size());
  for (std::size_t i = 0; i < order.size(); ++i) {
    const Vertex v = order[i];
    plan.degree[i] = h.degree(v);
    for (const Incidence& inc : h.incident(v)) {
      const std::size_t j = position[inc.to];
      if (j < i) {
        plan.back[i].emplace_back(j, inc.edge);
        if (plan.parent[i] == kNoParent || j < plan.parent[i]) plan.parent[i] = j;
      }
    }
  }
  plan.order = std::move(order);
  return plan;
}

// Breadth-first order, starting from the given seeds, then from the
// remaining vertices by decreasing degree.
std::vector<Vertex> bfs_order(const ColoredGraph& h, std::span<const Vertex> seeds) {
  const std::size_t t = h.vertex_count();
  std::vector<char> placed(t, 0);
  std::vector<Vertex> order;
  std::deque<Vertex> queue;
  auto place = [&](Vertex v) {
    placed[v] = 1;
    order.push_back(v);
    queue.push_back(v);
  };
  auto drain = [&] {
    while (!queue.empty()) {
      const Vertex x = queue.front();
      queue.pop_front();
      std::vector<Vertex> next;
      for (const Incidence& inc : h.incident(x)) {
        if (!placed[inc.to]) next.push_back(inc.to);
      }
      std::stable_sort(next.begin(), next.end(),
                       [&](Vertex a, Vertex b) { return h.degree(a) > h.degree(b); });
      for (Vertex y : next) {
        if (!placed[y]) place(y);
      }
    }
  };
  for (Vertex s : seeds) place(s);
  drain();
  std::vector<Vertex> rest(t);
  for (Vertex v = 0; v < t; ++v) rest[v] = v;
  std::stable_sort(rest.begin(), rest.end(),
                   [&](Vertex a, Vertex b) { return h.degree(a) > h.degree(b); });
  for (Vertex s : rest) {
    if (placed[s]) continue;
    place(s);
    drain();
  }
  return order;
}

}  // namespace

SearchPlan make_plan(const ColoredGraph& pattern) { return finish_plan(pattern, bfs_order(pattern, {})); }

SearchPlan make_seeded_plan(const ColoredGraph& pattern, Vertex a, Vertex b) {
  if (!pattern.has_edge(a, b)) throw InvalidInput("seeded plan needs a pattern edge");
  const Vertex seeds[] = {a, b};
  return finish_plan(pattern, bfs_order(pattern, seeds));
}

}  // namespace detail

namespace {

template <class F>
void for_each_automorphism(const ColoredGraph& h, F&& on_found) {
  const std::size_t t = h.vertex_count();
  if (t > kMaxPatternVertices) {
    throw Unsupported("automorphism scan supports at most " + std::to_string(kMaxPatternVertices) +
                      " vertices, got " + std::to_string(t));
  }
  std::vector<Vertex> image(t);
  std::vector<char> taken(t, 0);
  // Extend a partial map on 0..i-1 that preserves adjacency and non-adjacency.
  auto extend = [&](auto&& self, std::size_t i) -> void {
    if (i == t) {
      on_found(std::span<const Vertex>(image));
      return;
    }
    for (Vertex y = 0; y < t; ++y) {
      if (taken[y] || h.degree(y) != h.degree(static_cast<Vertex>(i))) continue;
      bool ok = true;
      for (Vertex j = 0; j < i && ok; ++j) {
        ok = h.has_edge(static_cast<Vertex>(i), j) == h.has_edge(y, image[j]);
      }
      if (!ok) continue;
      taken[y] = 1;
      image[i] = y;
      self(self, i + 1);
      taken[y] = 0;
    }
  };
  extend(extend, 0);
}

struct CountSink {
  std::uint64_t count = 0;
  bool operator()(std::span<const Vertex>, std::span<const EdgeId>) {
    ++count;
    return true;
  }
};

struct FirstSink {
  const detail::SearchPlan& plan;
  std::optional<Embedding> found;
  bool operator()(std::span<const Vertex> image, std::span<const EdgeId> edges) {
    Embedding e;
    e.vertices.resize(image.size());
    for (std::size_t i = 0; i < image.size(); ++i) e.vertices[plan.order[i]] = image[i];
    e.edges.assign(edges.begin(), edges.end());
    found = std::move(e);
    return false;
  }
};

void throw_exhausted(const detail::NodeCounter& nodes) {
  throw BudgetExhausted("search exceeded node limit after " + std::to_string(nodes.count()) + " nodes",
                        nodes.count());
}

}  // namespace

std::vector<std::vector<Vertex>> automorphisms(const ColoredGraph& h) {
  std::vector<std::vector<Vertex>> out;
  for_each_automorphism(h, [&](std::span<const Vertex> m) { out.emplace_back(m.begin(), m.end()); });
  return out;
}

std::uint64_t automorphism_count(const ColoredGraph& h) {
  std::uint64_t count = 0;
  for_each_automorphism(h, [&](std::span<const Vertex>) { ++count; });
  return count;
}

std::uint64_t count_labeled_embeddings(const ColoredGraph& g, const ColoredGraph& h,
                                       const CensusOptions& options, std::uint64_t* nodes_out) {
  const detail::SearchPlan plan = detail::make_plan(h);
  const detail::GraphHost host{g};
  detail::NodeCounter nodes(options.node_limit);
  const unsigned threads = std::max(1u, options.threads);
  std::uint64_t total = 0;
  if (threads == 1) {
    CountSink sink;
    detail::Matcher matcher(host, plan, false, nodes, sink);
    matcher.run();
    total = sink.count;
  } else {
    std::vector<CountSink> sinks(threads);
    {
      std::vector<std::jthread> workers;
      for (unsigned w = 0; w < threads; ++w) {
        workers.emplace_back([&, w] {
          detail::Matcher matcher(host, plan, false, nodes, sinks[w]);
          matcher.run({}, threads, w);
        });
      }
    }
    for (const CountSink& s : sinks) total += s.count;
  }
  if (nodes_out) *nodes_out = nodes.count();
  if (nodes.exhausted()) throw_exhausted(nodes);
  return total;
}

std::uint64_t count_copies(const ColoredGraph& g, const Pattern& h, const CensusOptions& options) {
  const std::uint64_t labeled = count_labeled_embeddings(g, h.graph(), options);
  if (labeled % h.aut_count() != 0) {
    throw InternalError("labeled embedding count " + std::to_string(labeled) +
                        " is not divisible by |Aut| = " + std::to_string(h.aut_count()));
  }
  return labeled / h.aut_count();
}

std::optional<Embedding> find_rainbow_copy(const ColoredGraph& g, const Pattern& h,
                                           const CensusOptions& options, std::uint64_t* nodes_out) {
  if (!g.is_totally_colored()) throw InvalidInput("rainbow search needs a totally colored host");
  const detail::SearchPlan plan = detail::make_plan(h.graph());
  const detail::GraphHost host{g};
  detail::NodeCounter nodes(options.node_limit);
  FirstSink sink{plan, std::nullopt};
  detail::Matcher matcher(host, plan, true, nodes, sink);
  matcher.run();
  if (nodes_out) *nodes_out = nodes.count();
  if (!sink.found && nodes.exhausted()) throw_exhausted(nodes);
  return sink.found;
}

EnumerationResult enumerate_copies(const ColoredGraph& g, const Pattern& h, const CopyVisitor& visit,
                                   const CensusOptions& options) {
  const detail::SearchPlan plan = detail::make_plan(h.graph());
  const auto auts = automorphisms(h.graph());
  const detail::GraphHost host{g};
  detail::NodeCounter nodes(options.node_limit);
  EnumerationResult result;
  Embedding current;
  current.vertices.resize(h.vertex_count());

  auto sink = [&](std::span<const Vertex> image, std::span<const EdgeId> edges) {
    for (std::size_t i = 0; i < image.size(); ++i) current.vertices[plan.order[i]] = image[i];
    // Keep only the lexicographically least labeling of this copy.
    for (const auto& sigma : auts) {
      for (std::size_t i = 0; i < sigma.size(); ++i) {
        const Vertex permuted = current.vertices[sigma[i]];
        if (permuted < current.vertices[i]) return true;
        if (permuted > current.vertices[i]) break;
      }
    }
    current.edges.assign(edges.begin(), edges.end());
    ++result.visited;
    if (!visit(current)) {
      result.aborted = true;
      return false;
    }
    return true;
  };
  detail::Matcher matcher(host, plan, false, nodes, sink);
  matcher.run();
  if (nodes.exhausted()) throw_exhausted(nodes);
  return result;
}

CensusReport census(const ColoredGraph& g, const Pattern& h, bool search_rainbow,
                    const CensusOptions& options) {
  const auto start = std::chrono::steady_clock::now();
  CensusReport report;
  report.pattern = h.name();
  std::uint64_t nodes = 0;
  const std::uint64_t labeled = count_labeled_embeddings(g, h.graph(), options, &nodes);
  if (labeled % h.aut_count() != 0) {
    throw InternalError("labeled embedding count is not divisible by |Aut|");
  }
  report.copy_count = labeled / h.aut_count();
  report.nodes_explored = nodes;
  if (search_rainbow) {
    report.rainbow_searched = true;
    std::uint64_t rainbow_nodes = 0;
    report.rainbow_witness = find_rainbow_copy(g, h, options, &rainbow_nodes);
    report.nodes_explored += rainbow_nodes;
  }
  report.elapsed = std::chrono::steady_clock::now() - start;
  return report;
}

bool is_rainbow(const ColoredGraph& g, const Embedding& e) {
  std::vector<Color> seen;
  for (EdgeId id : e.edges) {
    const auto c = g.color(id);
    if (!c || std::find(seen.begin(), seen.end(), *c) != seen.end()) return false;
    seen.push_back(*c);
  }
  return true;
}

}  // namespace rainbow
