#pragma once

#include <chrono>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "rainbow/colored_graph.hpp"
#include "rainbow/pattern.hpp"

namespace rainbow {

struct CensusOptions {
  /// Cap on search-tree nodes; exceeding it throws BudgetExhausted.
  std::optional<std::uint64_t> node_limit;
  /// Worker threads for counting (split over the first pattern vertex).
  unsigned threads = 1;
};

/// Image of a pattern in a host: vertices[i] is the image of pattern vertex
/// i, edges[j] the host edge carrying pattern edge j.
struct Embedding {
  std::vector<Vertex> vertices;
  std::vector<EdgeId> edges;
};

struct CensusReport {
  std::string pattern;
  std::uint64_t copy_count = 0;
  bool rainbow_searched = false;
  std::optional<Embedding> rainbow_witness;
  std::uint64_t nodes_explored = 0;
  std::chrono::duration<double, std::milli> elapsed{0};
};

/// Order of Aut(h) by exhaustive permutation search. Throws Unsupported for
/// more than kMaxPatternVertices vertices.
std::uint64_t automorphism_count(const ColoredGraph& h);
inline std::uint64_t automorphism_count(const Pattern& h) { return h.aut_count(); }

/// All automorphisms of h as vertex maps.
std::vector<std::vector<Vertex>> automorphisms(const ColoredGraph& h);

/// Injective edge-preserving maps from h into g (not induced).
std::uint64_t count_labeled_embeddings(const ColoredGraph& g, const ColoredGraph& h,
                                       const CensusOptions& options = {},
                                       std::uint64_t* nodes = nullptr);

/// Number of subgraphs of g isomorphic to h: labeled embeddings / |Aut(h)|.
std::uint64_t count_copies(const ColoredGraph& g, const Pattern& h, const CensusOptions& options = {});

/// A copy of h whose edges carry pairwise distinct colors. g must be totally
/// colored (InvalidInput otherwise).
std::optional<Embedding> find_rainbow_copy(const ColoredGraph& g, const Pattern& h,
                                           const CensusOptions& options = {},
                                           std::uint64_t* nodes = nullptr);

/// Visitor returns false to abort the enumeration.
using CopyVisitor = std::function<bool(const Embedding&)>;

struct EnumerationResult {
  std::uint64_t visited = 0;
  bool aborted = false;
};

/// Visits every copy of h in g exactly once, in a deterministic order. The
/// representative embedding of a copy is the lexicographically smallest
/// vertex image among its |Aut(h)| labelings.
EnumerationResult enumerate_copies(const ColoredGraph& g, const Pattern& h, const CopyVisitor& visit,
                                   const CensusOptions& options = {});

/// Copy count plus, when search_rainbow is set, a rainbow witness search.
CensusReport census(const ColoredGraph& g, const Pattern& h, bool search_rainbow,
                    const CensusOptions& options = {});

/// True when the embedding's host edges carry pairwise distinct colors.
bool is_rainbow(const ColoredGraph& g, const Embedding& e);

}  // namespace rainbow
