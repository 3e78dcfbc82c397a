#include "rainbow/pattern.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <sstream>

#include "rainbow/census.hpp"
#include "rainbow/errors.hpp"
#include "rainbow/graph_core.hpp"

namespace rainbow {

namespace {

ColoredGraph checked_pattern_graph(ColoredGraph g) {
  if (g.vertex_count() == 0) throw InvalidInput("pattern needs at least one vertex");
  if (g.vertex_count() > kMaxPatternVertices) {
    throw Unsupported("patterns are limited to " + std::to_string(kMaxPatternVertices) + " vertices");
  }
  return g.without_colors();
}

std::size_t parse_count(std::string_view s, std::string_view whole) {
  std::size_t value = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (s.empty() || ec != std::errc{} || ptr != s.data() + s.size()) {
    throw InvalidInput("cannot parse pattern '" + std::string(whole) + "'");
  }
  return value;
}

}  // namespace

Pattern::Pattern(std::size_t t, std::span<const Edge> edges, std::string name)
    : Pattern(ColoredGraph(t, edges), std::move(name)) {}

Pattern::Pattern(ColoredGraph graph, std::string name)
    : graph_(checked_pattern_graph(std::move(graph))), name_(std::move(name)) {
  aut_count_ = automorphism_count(graph_);
  if (name_.empty()) name_ = edge_list_literal(graph_);
}

Pattern Pattern::path(std::size_t k) {
  if (k < 1) throw InvalidInput("P_k needs k >= 1");
  std::vector<Edge> e;
  for (Vertex i = 0; i + 1 < k; ++i) e.push_back({i, i + 1});
  return Pattern(k, e, "P" + std::to_string(k));
}

Pattern Pattern::cycle(std::size_t l) {
  if (l < 3) throw InvalidInput("C_l needs l >= 3");
  std::vector<Edge> e;
  for (Vertex i = 0; i + 1 < l; ++i) e.push_back({i, i + 1});
  e.push_back({0, static_cast<Vertex>(l - 1)});
  return Pattern(l, e, "C" + std::to_string(l));
}

Pattern Pattern::star(std::size_t p) {
  if (p < 1) throw InvalidInput("S_p needs p >= 1");
  std::vector<Edge> e;
  for (Vertex i = 1; i <= p; ++i) e.push_back({0, i});
  return Pattern(p + 1, e, "S" + std::to_string(p));
}

Pattern Pattern::double_star(std::size_t p, std::size_t r) {
  if (p < 1 || r < 1) throw InvalidInput("S_{p,r} needs p, r >= 1");
  std::vector<Edge> e{{0, 1}};
  Vertex next = 2;
  for (std::size_t i = 0; i < p; ++i) e.push_back({0, next++});
  for (std::size_t i = 0; i < r; ++i) e.push_back({1, next++});
  return Pattern(next, e, "S" + std::to_string(p) + "." + std::to_string(r));
}

Pattern Pattern::matching(std::size_t k) {
  if (k < 1) throw InvalidInput("M_k needs k >= 1");
  std::vector<Edge> e;
  for (Vertex i = 0; i < k; ++i) e.push_back({2 * i, 2 * i + 1});
  return Pattern(2 * k, e, "M" + std::to_string(k));
}

Pattern Pattern::clique(std::size_t r) {
  if (r < 1) throw InvalidInput("K_r needs r >= 1");
  std::vector<Edge> e;
  for (Vertex i = 0; i < r; ++i) {
    for (Vertex j = i + 1; j < r; ++j) e.push_back({i, j});
  }
  return Pattern(r, e, "K" + std::to_string(r));
}

bool Pattern::is_connected() const { return connected_components(graph_).size() == 1; }

bool Pattern::is_tree() const { return rainbow::is_tree(graph_); }

Pattern parse_pattern(std::string_view text) {
  if (text.empty()) throw InvalidInput("empty pattern");
  if (text.find('-') != std::string_view::npos) {
    std::optional<std::size_t> t;
    std::string_view body = text;
    if (auto colon = text.find(':'); colon != std::string_view::npos) {
      t = parse_count(text.substr(0, colon), text);
      body = text.substr(colon + 1);
    }
    std::vector<Edge> edges;
    Vertex top = 0;
    std::size_t pos = 0;
    while (pos <= body.size()) {
      std::size_t comma = body.find(',', pos);
      if (comma == std::string_view::npos) comma = body.size();
      std::string_view item = body.substr(pos, comma - pos);
      pos = comma + 1;
      const auto dash = item.find('-');
      if (dash == std::string_view::npos) throw InvalidInput("bad edge '" + std::string(item) + "' in pattern");
      const auto a = static_cast<Vertex>(parse_count(item.substr(0, dash), text));
      const auto b = static_cast<Vertex>(parse_count(item.substr(dash + 1), text));
      edges.push_back(make_edge(a, b));
      top = std::max({top, a, b});
    }
    const std::size_t n = t.value_or(static_cast<std::size_t>(top) + 1);
    return Pattern(n, edges);
  }
  const char family = static_cast<char>(std::toupper(static_cast<unsigned char>(text.front())));
  std::string_view rest = text.substr(1);
  if (family == 'S') {
    if (auto dot = rest.find('.'); dot != std::string_view::npos) {
      return Pattern::double_star(parse_count(rest.substr(0, dot), text), parse_count(rest.substr(dot + 1), text));
    }
    return Pattern::star(parse_count(rest, text));
  }
  const std::size_t k = parse_count(rest, text);
  switch (family) {
    case 'P': return Pattern::path(k);
    case 'C': return Pattern::cycle(k);
    case 'M': return Pattern::matching(k);
    case 'K': return Pattern::clique(k);
    default: throw InvalidInput("unknown pattern family in '" + std::string(text) + "'");
  }
}

std::string edge_list_literal(const ColoredGraph& g) {
  std::ostringstream out;
  out << g.vertex_count() << ':';
  for (std::size_t i = 0; i < g.edge_count(); ++i) {
    if (i) out << ',';
    out << g.edges()[i].u << '-' << g.edges()[i].v;
  }
  return out.str();
}

bool is_tree(const ColoredGraph& g) {
  return g.vertex_count() >= 1 && g.edge_count() + 1 == g.vertex_count() &&
         connected_components(g).size() == 1;
}

bool is_star(const ColoredGraph& g) {
  if (!is_tree(g) || g.edge_count() == 0) return false;
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    if (g.degree(v) + 1 == g.vertex_count()) return true;
  }
  return false;
}

bool is_double_star(const ColoredGraph& g) {
  if (!is_tree(g) || is_star(g)) return false;
  for (const Edge& e : g.edges()) {
    bool covers = true;
    for (Vertex w = 0; w < g.vertex_count() && covers; ++w) {
      covers = w == e.u || w == e.v || g.has_edge(w, e.u) || g.has_edge(w, e.v);
    }
    if (covers) return true;
  }
  return false;
}

}  // namespace rainbow
