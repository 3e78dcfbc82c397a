#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>
#include <set>

#include "rainbow/census.hpp"
#include "rainbow/constructions.hpp"
#include "rainbow/errors.hpp"
#include "rainbow/graph_core.hpp"
#include "rainbow/lemma.hpp"
#include "lemma_instances.hpp"

using namespace rainbow;

TEST_CASE("two anchors sharing one neighbor") {
  const std::vector<Edge> e{{0, 2}, {1, 2}};
  const ColoredGraph g = extend_coloring_greedy(ColoredGraph(3, e));
  const LemmaInstance inst{{0, 1}, {}, {}};
  CHECK(required_common_neighbors(inst) == 1);
  const LemmaOutcome out = find_rainbow_alternating_path(g, inst);
  REQUIRE(out.status == LemmaStatus::Found);
  CHECK(out.path == std::vector<Vertex>{0, 2, 1});
  CHECK(out.colors.size() == 2);
  CHECK(out.colors[0] != out.colors[1]);
  CHECK(testing::path_is_valid(g, inst, out));
}

TEST_CASE("randomized instances meeting the bound always succeed") {
  for (std::uint32_t seed = 0; seed < 200; ++seed) {
    CAPTURE(seed);
    const auto [g, inst] = testing::lemma_instance(seed);
    const PreconditionReport pre = check_precondition(g, inst);
    REQUIRE(pre.holds);
    const LemmaOutcome out = find_rainbow_alternating_path(g, inst);
    REQUIRE(out.status == LemmaStatus::Found);
    CHECK(testing::path_is_valid(g, inst, out));
    CHECK(out.max_forbidden <= forbidden_bound(inst));
  }
}

TEST_CASE("forbidden vertices may include anchors") {
  const auto [g, base] = testing::lemma_instance(5);
  LemmaInstance inst = base;
  inst.forbidden_vertices.push_back(inst.anchors.front());
  // The extra forbidden vertex raises the requirement by one; keep the
  // search in best-effort mode so the result does not depend on slack.
  const LemmaOutcome out = find_rainbow_alternating_path(g, inst, LemmaMode::BestEffort);
  if (out.status == LemmaStatus::Found) CHECK(testing::path_is_valid(g, inst, out));
}

TEST_CASE("starved instance reports NotFound") {
  // Star-like host: anchors 0 and 1 share neighbors 2..4.
  std::vector<Edge> e;
  for (Vertex x = 2; x < 5; ++x) {
    e.push_back({0, x});
    e.push_back({1, x});
  }
  const ColoredGraph g = extend_coloring_greedy(ColoredGraph(5, e));
  LemmaInstance inst{{0, 1}, {}, {}};
  for (const Incidence& inc : g.incident(0)) inst.forbidden_colors.push_back(*g.color(inc.edge));
  CHECK(required_common_neighbors(inst) > 3);

  const LemmaOutcome strict = find_rainbow_alternating_path(g, inst);
  CHECK(strict.status == LemmaStatus::PreconditionViolated);
  CHECK(strict.precondition.first_short == std::size_t{0});

  const LemmaOutcome effort = find_rainbow_alternating_path(g, inst, LemmaMode::BestEffort);
  CHECK(effort.status == LemmaStatus::NotFound);
  CHECK(effort.stuck_at == std::size_t{0});
  CHECK(effort.max_forbidden == 3);
}

TEST_CASE("input validation") {
  const ColoredGraph g = extend_coloring_greedy(Pattern::path(4).graph());
  CHECK_THROWS_AS(find_rainbow_alternating_path(g, {{0}, {}, {}}), InvalidInput);
  CHECK_THROWS_AS(find_rainbow_alternating_path(g, {{0, 0}, {}, {}}), InvalidInput);
  CHECK_THROWS_AS(find_rainbow_alternating_path(g, {{0, 9}, {}, {}}), InvalidInput);
  CHECK_THROWS_AS(find_rainbow_alternating_path(Pattern::path(4).graph(), {{0, 2}, {}, {}}), InvalidInput);
}

TEST_CASE("closing a rainbow triangle") {
  const std::vector<ColoredEdge> e{{0, 1, 0}, {1, 2, 1}, {0, 2, 2}};
  const ColoredGraph g(3, e);
  const CycleOutcome out = close_rainbow_odd_cycle(g, {0, 1}, {}, LemmaMode::BestEffort);
  REQUIRE(out.path.status == LemmaStatus::Found);
  CHECK(out.cycle == std::vector<Vertex>{0, 2, 1});
  REQUIRE(out.edges.size() == 3);
  std::set<Color> colors;
  for (EdgeId id : out.edges) colors.insert(*g.color(id));
  CHECK(colors.size() == 3);
}

TEST_CASE("complete blow-up of C5 yields a rainbow C5") {
  const std::size_t b = 8;
  ColoredGraph g = Pattern::cycle(5).graph();
  for (Vertex v = 0; v < 5; ++v) g = blow_up(g, 0, b);
  g = extend_coloring_greedy(g);
  // After five blow-ups of vertex 0, class j occupies j*b .. j*b+b-1 in
  // cycle order 0,1,2,3,4.
  const std::vector<Vertex> anchors{0, 2 * b, 4 * b};
  const CycleOutcome out = close_rainbow_odd_cycle(g, anchors);
  REQUIRE(out.path.status == LemmaStatus::Found);
  REQUIRE(out.cycle.size() == 5);
  std::set<Color> colors;
  for (EdgeId id : out.edges) colors.insert(*g.color(id));
  CHECK(colors.size() == 5);
  for (std::size_t i = 0; i < 5; ++i) CHECK(g.has_edge(out.cycle[i], out.cycle[(i + 1) % 5]));
  CHECK(find_rainbow_copy(g, Pattern::cycle(5)).has_value());
}

TEST_CASE("odd_cycle_lower defeats the closing search") {
  const Construction c = odd_cycle_lower(2, ClassSize::exactly(3));
  const ColoredGraph& g = c.graph;
  std::size_t tried = 0;
  for (Vertex a = 0; a < g.vertex_count(); ++a) {
    for (Vertex z = 0; z < g.vertex_count(); ++z) {
      if (a == z || !g.has_edge(a, z)) continue;
      for (Vertex m = 0; m < g.vertex_count(); ++m) {
        if (m == a || m == z) continue;
        if (common_neighbors(g, a, m).empty() || common_neighbors(g, m, z).empty()) continue;
        ++tried;
        const CycleOutcome out = close_rainbow_odd_cycle(g, {a, m, z}, {}, LemmaMode::BestEffort);
        CHECK(out.path.status != LemmaStatus::Found);
      }
    }
  }
  CHECK(tried > 0);
}
