#include "rainbow/lemma.hpp"

#include <algorithm>
#include <string>

#include "rainbow/errors.hpp"
#include "rainbow/graph_core.hpp"

namespace rainbow {

namespace {

template <class T>
bool contains(const std::vector<T>& xs, T x) {
  return std::find(xs.begin(), xs.end(), x) != xs.end();
}

void validate(const ColoredGraph& g, const LemmaInstance& inst) {
  if (inst.anchors.size() < 2) throw InvalidInput("the path search needs at least two anchors");
  for (std::size_t i = 0; i < inst.anchors.size(); ++i) {
    if (inst.anchors[i] >= g.vertex_count()) {
      throw InvalidInput("anchor " + std::to_string(inst.anchors[i]) + " is out of range");
    }
    for (std::size_t j = 0; j < i; ++j) {
      if (inst.anchors[i] == inst.anchors[j]) throw InvalidInput("anchors must be pairwise distinct");
    }
  }
  if (!is_proper(g)) throw InvalidInput("the path search needs a proper total coloring");
}

template <class T>
std::size_t distinct_count(std::vector<T> xs) {
  std::sort(xs.begin(), xs.end());
  return static_cast<std::size_t>(std::unique(xs.begin(), xs.end()) - xs.begin());
}

}  // namespace

std::size_t required_common_neighbors(const LemmaInstance& inst) {
  const std::size_t k = inst.anchors.size();
  return distinct_count(inst.forbidden_vertices) + 2 * distinct_count(inst.forbidden_colors) + 5 * k - 9;
}

std::size_t forbidden_bound(const LemmaInstance& inst) { return required_common_neighbors(inst) - 1; }

PreconditionReport check_precondition(const ColoredGraph& g, const LemmaInstance& inst) {
  validate(g, inst);
  PreconditionReport report;
  report.required = required_common_neighbors(inst);
  for (std::size_t j = 0; j + 1 < inst.anchors.size(); ++j) {
    const std::size_t c = common_neighbors(g, inst.anchors[j], inst.anchors[j + 1]).size();
    report.common_counts.push_back(c);
    if (c < report.required && !report.first_short) report.first_short = j;
  }
  report.holds = !report.first_short.has_value();
  return report;
}

LemmaOutcome find_rainbow_alternating_path(const ColoredGraph& g, const LemmaInstance& inst, LemmaMode mode) {
  LemmaOutcome out;
  out.precondition = check_precondition(g, inst);
  if (!out.precondition.holds && mode == LemmaMode::Strict) {
    out.status = LemmaStatus::PreconditionViolated;
    return out;
  }
  const auto& anchors = inst.anchors;
  const auto& banned_colors = inst.forbidden_colors;
  auto color_ok = [&](EdgeId e) {
    const Color c = *g.color(e);
    return !contains(banned_colors, c) && !contains(out.colors, c);
  };
  for (std::size_t j = 0; j + 1 < anchors.size(); ++j) {
    const Vertex a = anchors[j];
    const Vertex b = anchors[j + 1];
    std::optional<Vertex> pick;
    std::optional<EdgeId> pick_a;
    std::optional<EdgeId> pick_b;
    std::size_t forbidden = 0;
    for (Vertex x : common_neighbors(g, a, b)) {
      const EdgeId ea = *g.find_edge(a, x);
      const EdgeId eb = *g.find_edge(x, b);
      const bool ok = !contains(inst.forbidden_vertices, x) && !contains(anchors, x) &&
                      !contains(out.connectors, x) && color_ok(ea) && color_ok(eb);
      if (!ok) {
        ++forbidden;
      } else if (!pick) {
        pick = x;
        pick_a = ea;
        pick_b = eb;
      }
    }
    out.max_forbidden = std::max(out.max_forbidden, forbidden);
    if (!pick) {
      out.stuck_at = j;
      out.status = LemmaStatus::NotFound;
      if (out.precondition.holds) {
        throw InternalError("greedy rainbow path got stuck at pair " + std::to_string(j) +
                            " although every pair has enough common neighbors");
      }
      return out;
    }
    out.connectors.push_back(*pick);
    out.edges.push_back(*pick_a);
    out.edges.push_back(*pick_b);
    out.colors.push_back(*g.color(*pick_a));
    out.colors.push_back(*g.color(*pick_b));
  }
  for (std::size_t j = 0; j < anchors.size(); ++j) {
    out.path.push_back(anchors[j]);
    if (j < out.connectors.size()) out.path.push_back(out.connectors[j]);
  }
  out.status = LemmaStatus::Found;
  return out;
}

CycleOutcome close_rainbow_odd_cycle(const ColoredGraph& g, const std::vector<Vertex>& anchors,
                                     const std::vector<Vertex>& forbidden_vertices, LemmaMode mode) {
  if (anchors.size() < 2) throw InvalidInput("closing a cycle needs at least two anchors");
  for (Vertex v : anchors) {
    if (v >= g.vertex_count()) throw InvalidInput("anchor " + std::to_string(v) + " is out of range");
  }
  const auto closing = g.find_edge(anchors.front(), anchors.back());
  if (!closing) throw InvalidInput("first and last anchors must be adjacent");
  if (!g.color(*closing)) throw InvalidInput("closing edge is uncolored");
  LemmaInstance inst{anchors, forbidden_vertices, {*g.color(*closing)}};
  CycleOutcome out;
  out.path = find_rainbow_alternating_path(g, inst, mode);
  if (out.path.status == LemmaStatus::Found) {
    out.cycle = out.path.path;
    out.edges = out.path.edges;
    out.edges.push_back(*closing);
  }
  return out;
}

}  // namespace rainbow
