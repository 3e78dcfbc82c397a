#pragma once

#include <iosfwd>
#include <span>
#include <string>
#include <string_view>

#include "rainbow/colored_graph.hpp"

namespace rainbow {

// CGE text format:
//
//   n m
//   u v c      (m lines, 0 <= u < v < n, c a color id or '-' when uncolored)
//
// Lines starting with '#' are comments and may appear anywhere. Blank lines
// are ignored. The writer emits the header first, then any comment lines,
// then the edges in lexicographic order.

ColoredGraph parse_cge(std::string_view text);
ColoredGraph read_cge(std::istream& in);
ColoredGraph read_cge_file(const std::string& path);

void write_cge(std::ostream& out, const ColoredGraph& g,
               std::span<const std::string> comments = {});
std::string to_cge(const ColoredGraph& g, std::span<const std::string> comments = {});

/// Graphviz export; colored edges carry the color id as their label.
void write_dot(std::ostream& out, const ColoredGraph& g, std::string_view name = "G");

}  // namespace rainbow
