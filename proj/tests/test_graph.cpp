#include <doctest.h>

#include <random>
#include <sstream>

#include "rainbow/cge.hpp"
#include "rainbow/errors.hpp"
#include "rainbow/graph_core.hpp"
#include "rainbow/pattern.hpp"
#include "support.hpp"

using namespace rainbow;

namespace {

ColoredGraph colored(std::size_t n, std::vector<ColoredEdge> edges) { return ColoredGraph(n, edges); }

ColoredGraph k4_matching_colored() {
  return colored(4, {{0, 1, 0}, {2, 3, 0}, {0, 2, 1}, {1, 3, 1}, {0, 3, 2}, {1, 2, 2}});
}

ColoredGraph complete_bipartite(std::size_t a, std::size_t b) {
  std::vector<Edge> e;
  for (Vertex i = 0; i < a; ++i) {
    for (Vertex j = 0; j < b; ++j) e.push_back({i, static_cast<Vertex>(a + j)});
  }
  return ColoredGraph(a + b, e);
}

}  // namespace

TEST_CASE("graph construction rejects loops, parallel edges and bad endpoints") {
  const std::vector<Edge> loop{{1, 1}};
  CHECK_THROWS_AS(ColoredGraph(3, loop), InvalidInput);
  const std::vector<Edge> twice{{0, 1}, {0, 1}};
  CHECK_THROWS_AS(ColoredGraph(3, twice), InvalidInput);
  const std::vector<Edge> outside{{0, 5}};
  CHECK_THROWS_AS(ColoredGraph(3, outside), InvalidInput);
  CHECK_THROWS_AS(make_edge(2, 2), InvalidInput);
}

TEST_CASE("edges are stored in lexicographic order") {
  const std::vector<Edge> e{{2, 3}, {0, 3}, {1, 0}};
  const ColoredGraph g(4, e);
  REQUIRE(g.edge_count() == 3);
  CHECK(g.edge(0) == Edge{0, 1});
  CHECK(g.edge(1) == Edge{0, 3});
  CHECK(g.edge(2) == Edge{2, 3});
  CHECK(g.find_edge(3, 0) == EdgeId{1});
  CHECK_FALSE(g.has_edge(1, 2));
}

TEST_CASE("validate_proper") {
  SUBCASE("alternating C4 is proper") {
    CHECK(validate_proper(colored(4, {{0, 1, 0}, {1, 2, 1}, {2, 3, 0}, {0, 3, 1}})).empty());
  }
  SUBCASE("two same-colored edges at b give one violation there") {
    const auto v = validate_proper(colored(3, {{0, 1, 0}, {1, 2, 0}}));
    REQUIRE(v.size() == 1);
    CHECK(v[0].kind == ViolationKind::RepeatedColor);
    CHECK(v[0].at == 1);
  }
  SUBCASE("K4 by perfect matchings is proper") { CHECK(is_proper(k4_matching_colored())); }
  SUBCASE("missing colors are reported, not thrown") {
    const auto v = validate_proper(colored(3, {{0, 1, 0}, {1, 2, std::nullopt}}));
    REQUIRE(v.size() == 1);
    CHECK(v[0].kind == ViolationKind::MissingColor);
  }
}

TEST_CASE("blow_up") {
  SUBCASE("edge with one end tripled is a 3-star") {
    const std::vector<Edge> e{{0, 1}};
    const ColoredGraph g = blow_up(ColoredGraph(2, e), 1, 3);
    CHECK(g.vertex_count() == 4);
    CHECK(is_star(g));
    CHECK(g.degree(0) == 3);
  }
  SUBCASE("middle of a 3-path blown up 4 times is K_{2,4}") {
    const std::vector<Edge> e{{0, 2}, {1, 2}};
    const ColoredGraph g = blow_up(ColoredGraph(3, e), 2, 4);
    CHECK(g.vertex_count() == 6);
    CHECK(g.edge_count() == 8);
    CHECK(g.degree(0) == 4);
    CHECK(g.degree(1) == 4);
    for (Vertex c = 2; c < 6; ++c) CHECK(g.degree(c) == 2);
  }
  SUBCASE("C4 with one vertex doubled has degrees 2,2,2,3,3") {
    const ColoredGraph g = blow_up(Pattern::cycle(4).graph(), 0, 2);
    CHECK(g.vertex_count() == 5);
    CHECK(g.edge_count() == 6);
    std::vector<std::size_t> deg;
    for (Vertex v = 0; v < 5; ++v) deg.push_back(g.degree(v));
    std::sort(deg.begin(), deg.end());
    CHECK(deg == std::vector<std::size_t>{2, 2, 2, 3, 3});
  }
  SUBCASE("colors at the blown vertex are dropped, others kept") {
    const ColoredGraph g = blow_up(colored(3, {{0, 1, 4}, {1, 2, 5}}), 2, 2);
    CHECK(g.color(*g.find_edge(0, 1)) == Color{4});
    CHECK_FALSE(g.color(*g.find_edge(1, 2)).has_value());
  }
  SUBCASE("errors") {
    CHECK_THROWS_AS(blow_up(ColoredGraph(2), 2, 1), InvalidInput);
    CHECK_THROWS_AS(blow_up(ColoredGraph(2), 0, 0), InvalidInput);
  }
}

TEST_CASE("blow_up keeps untouched degrees and gives clones the old degree") {
  std::mt19937 rng(7);
  for (int round = 0; round < 50; ++round) {
    const ColoredGraph g = testing::random_graph(7, 0.4, rng);
    const Vertex v = static_cast<Vertex>(round % 7);
    const ColoredGraph b = blow_up(g, v, 3);
    REQUIRE(b.vertex_count() == 9);
    for (Vertex x = 0; x < 7; ++x) {
      if (x == v) continue;
      const Vertex y = x < v ? x : x - 1;
      const std::size_t expected = g.degree(x) + (g.has_edge(x, v) ? 2 : 0);
      CHECK(b.degree(y) == expected);
    }
    for (Vertex c = 6; c < 9; ++c) CHECK(b.degree(c) == g.degree(v));
  }
}

TEST_CASE("extend_coloring_greedy") {
  SUBCASE("K4 gets a proper coloring") {
    const ColoredGraph g = extend_coloring_greedy(Pattern::clique(4).graph());
    CHECK(is_proper(g));
    CHECK(g.palette_size() <= 5);
  }
  SUBCASE("pre-assigned color 7 on the first edge of P5 survives") {
    std::vector<std::optional<Color>> c(4);
    c[0] = 7;
    const ColoredGraph g = extend_coloring_greedy(Pattern::path(5).graph().with_colors(c));
    CHECK(is_proper(g));
    CHECK(g.color(0) == Color{7});
    CHECK_FALSE(g.has_dense_palette());
  }
  SUBCASE("first_free offsets the fresh colors") {
    const ColoredGraph g = extend_coloring_greedy(Pattern::path(3).graph(), 5);
    CHECK(g.color(0) == Color{5});
    CHECK(g.color(1) == Color{6});
  }
  SUBCASE("conflicting pre-colors are rejected") {
    CHECK_THROWS_AS(extend_coloring_greedy(colored(3, {{0, 1, 0}, {1, 2, 0}})), InvalidInput);
  }
  SUBCASE("idempotent on proper total colorings") {
    const ColoredGraph k4 = k4_matching_colored();
    CHECK(extend_coloring_greedy(k4) == k4);
  }
  SUBCASE("always proper on random graphs with random proper pre-colorings") {
    std::mt19937 rng(11);
    for (int round = 0; round < 100; ++round) {
      const ColoredGraph full = extend_coloring_greedy(testing::random_graph(8, 0.5, rng));
      std::vector<std::optional<Color>> partial(full.colors().begin(), full.colors().end());
      for (auto& c : partial) {
        if (rng() % 2) c.reset();
      }
      const ColoredGraph g = extend_coloring_greedy(full.with_colors(partial));
      CHECK(is_proper(g));
      for (EdgeId e = 0; e < g.edge_count(); ++e) {
        if (partial[e]) CHECK(g.color(e) == partial[e]);
      }
    }
  }
}

TEST_CASE("common_neighbors and classify_pair") {
  const ColoredGraph k4 = Pattern::clique(4).graph();
  CHECK(common_neighbors(k4, 0, 3) == std::vector<Vertex>{1, 2});
  const ColoredGraph c6 = Pattern::cycle(6).graph();
  CHECK(common_neighbors(c6, 0, 3).empty());
  const ColoredGraph k25 = complete_bipartite(2, 5);
  CHECK(common_neighbors(k25, 0, 1).size() == 5);
  CHECK_THROWS_AS(common_neighbors(k4, 1, 1), InvalidInput);

  CHECK(classify_pair(complete_bipartite(2, 30), 0, 1, 21) == PairClass::Fat);
  CHECK(classify_pair(c6, 0, 3, 0) == PairClass::Thin);
  CHECK(classify_pair(c6, 0, 3, 100) == PairClass::Thin);
  CHECK(classify_pair(complete_bipartite(2, 11), 0, 1, 11) == PairClass::Thin);
  CHECK(classify_pair(complete_bipartite(2, 11), 0, 1, 10) == PairClass::Fat);

  std::mt19937 rng(3);
  for (int round = 0; round < 30; ++round) {
    const ColoredGraph g = testing::random_graph(9, 0.5, rng);
    for (std::size_t threshold = 0; threshold < 5; ++threshold) {
      CHECK(classify_pair(g, 1, 4, threshold) == classify_pair(g, 4, 1, threshold));
    }
  }
}

TEST_CASE("components, relabeling and bipartiteness") {
  const std::vector<Edge> e{{0, 4}, {1, 2}, {2, 3}};
  const ColoredGraph g(6, e);
  const auto comps = connected_components(g);
  REQUIRE(comps.size() == 3);
  CHECK(comps[0] == std::vector<Vertex>{0, 4});
  CHECK(comps[1] == std::vector<Vertex>{1, 2, 3});
  CHECK(comps[2] == std::vector<Vertex>{5});
  CHECK(is_bipartite(Pattern::cycle(6).graph()));
  CHECK_FALSE(is_bipartite(Pattern::cycle(5).graph()));
  const std::vector<Vertex> perm{5, 4, 3, 2, 1, 0};
  const ColoredGraph r = relabel(g, perm);
  CHECK(r.has_edge(5, 1));
  CHECK(r.has_edge(4, 3));
}

TEST_CASE("CGE round trip and format details") {
  const ColoredGraph g = colored(5, {{0, 1, 2}, {1, 4, std::nullopt}, {2, 3, 0}});
  const std::vector<std::string> comments{"family test"};
  const std::string text = to_cge(g, comments);
  CHECK(text == "5 3\n# family test\n0 1 2\n1 4 -\n2 3 0\n");
  CHECK(parse_cge(text) == g);

  CHECK(parse_cge("# leading\n\n3 1\n# mid\n0 2 7\n") == colored(3, {{0, 2, 7}}));
  CHECK_THROWS_AS(parse_cge("3 2\n0 1 0\n"), InvalidInput);
  CHECK_THROWS_AS(parse_cge("3 1\n1 0 0\n"), InvalidInput);
  CHECK_THROWS_AS(parse_cge("3 1\n0 3 0\n"), InvalidInput);
  CHECK_THROWS_AS(parse_cge("3 1\n0 1 x\n"), InvalidInput);
  CHECK_THROWS_AS(parse_cge("3 1\n0 1 0\n1 2 0\n"), InvalidInput);
  CHECK_THROWS_AS(parse_cge(""), InvalidInput);

  std::ostringstream dot;
  write_dot(dot, g);
  CHECK(dot.str().find("0 -- 1 [label=\"2\"];") != std::string::npos);
}

TEST_CASE("CGE round trip on random colored graphs") {
  std::mt19937 rng(5);
  for (int round = 0; round < 50; ++round) {
    const ColoredGraph g = extend_coloring_greedy(testing::random_graph(10, 0.3, rng));
    CHECK(parse_cge(to_cge(g)) == g);
  }
}
