#include "rainbow/cge.hpp"

#include <charconv>
#include <fstream>
#include <istream>
#include <limits>
#include <ostream>
#include <sstream>
#include <vector>

#include "rainbow/errors.hpp"

namespace rainbow {

namespace {

std::vector<std::string_view> split_ws(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
    std::size_t j = i;
    while (j < line.size() && line[j] != ' ' && line[j] != '\t' && line[j] != '\r') ++j;
    if (j > i) out.push_back(line.substr(i, j - i));
    i = j;
  }
  return out;
}

std::uint64_t parse_uint(std::string_view tok, std::size_t line_no) {
  std::uint64_t value = 0;
  auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
  if (ec != std::errc{} || ptr != tok.data() + tok.size()) {
    throw InvalidInput("CGE line " + std::to_string(line_no) + ": expected a non-negative integer, got '" +
                       std::string(tok) + "'");
  }
  return value;
}

}  // namespace

ColoredGraph parse_cge(std::string_view text) {
  std::optional<std::pair<std::uint64_t, std::uint64_t>> header;
  std::vector<ColoredEdge> edges;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(pos, end - pos);
    pos = end + 1;
    ++line_no;
    auto toks = split_ws(line);
    if (toks.empty() || toks.front().front() == '#') continue;
    if (!header) {
      if (toks.size() != 2) throw InvalidInput("CGE line " + std::to_string(line_no) + ": header must be 'n m'");
      header.emplace(parse_uint(toks[0], line_no), parse_uint(toks[1], line_no));
      if (header->first > kSoftVertexLimit) {
        throw InvalidInput("CGE header: n exceeds " + std::to_string(kSoftVertexLimit));
      }
      edges.reserve(header->second);
      continue;
    }
    if (toks.size() != 3) throw InvalidInput("CGE line " + std::to_string(line_no) + ": edge must be 'u v c'");
    if (edges.size() == header->second) {
      throw InvalidInput("CGE line " + std::to_string(line_no) + ": more than m=" +
                         std::to_string(header->second) + " edges");
    }
    const auto u = parse_uint(toks[0], line_no);
    const auto v = parse_uint(toks[1], line_no);
    if (!(u < v && v < header->first)) {
      throw InvalidInput("CGE line " + std::to_string(line_no) + ": need 0 <= u < v < n");
    }
    std::optional<Color> c;
    if (toks[2] != "-") {
      const auto raw = parse_uint(toks[2], line_no);
      if (raw > std::numeric_limits<Color>::max()) {
        throw InvalidInput("CGE line " + std::to_string(line_no) + ": color id too large");
      }
      c = static_cast<Color>(raw);
    }
    edges.push_back({static_cast<Vertex>(u), static_cast<Vertex>(v), c});
  }
  if (!header) throw InvalidInput("CGE input has no 'n m' header");
  if (edges.size() != header->second) {
    throw InvalidInput("CGE declares m=" + std::to_string(header->second) + " edges but lists " +
                       std::to_string(edges.size()));
  }
  return ColoredGraph(header->first, edges);
}

ColoredGraph read_cge(std::istream& in) {
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_cge(buf.str());
}

ColoredGraph read_cge_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InvalidInput("cannot open '" + path + "'");
  return read_cge(in);
}

void write_cge(std::ostream& out, const ColoredGraph& g, std::span<const std::string> comments) {
  out << g.vertex_count() << ' ' << g.edge_count() << '\n';
  for (const std::string& c : comments) out << "# " << c << '\n';
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    const Edge& ed = g.edge(e);
    out << ed.u << ' ' << ed.v << ' ';
    if (auto c = g.color(e)) {
      out << *c;
    } else {
      out << '-';
    }
    out << '\n';
  }
}

std::string to_cge(const ColoredGraph& g, std::span<const std::string> comments) {
  std::ostringstream out;
  write_cge(out, g, comments);
  return out.str();
}

void write_dot(std::ostream& out, const ColoredGraph& g, std::string_view name) {
  out << "graph " << name << " {\n";
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    if (g.degree(v) == 0) out << "  " << v << ";\n";
  }
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    out << "  " << g.edge(e).u << " -- " << g.edge(e).v;
    if (auto c = g.color(e)) out << " [label=\"" << *c << "\"]";
    out << ";\n";
  }
  out << "}\n";
}

}  // namespace rainbow
