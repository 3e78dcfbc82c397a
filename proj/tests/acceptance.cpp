// Acceptance run: one PASS/FAIL line per criterion, with the measured values.
// A criterion listed with a known deviation still prints FAIL; the exit code
// only flags failures that are not known, or known ones that stop failing.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <iostream>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "lemma_instances.hpp"
#include "rainbow/census.hpp"
#include "rainbow/constructions.hpp"
#include "rainbow/graph_core.hpp"
#include "rainbow/lemma.hpp"
#include "rainbow/oracle.hpp"
#include "support.hpp"

using namespace rainbow;

namespace {

struct Verdict {
  bool pass = true;
  std::ostringstream detail;

  void expect(bool ok, const std::string& what) {
    if (!ok) {
      pass = false;
      detail << "  mismatch: " << what << '\n';
    }
  }
  void note(const std::string& what) { detail << "  " << what << '\n'; }
};

struct Criterion {
  int id;
  std::string title;
  std::function<void(Verdict&)> run;
  std::optional<std::string> known_deviation;
};

std::uint64_t power(std::uint64_t b, unsigned e) {
  std::uint64_t r = 1;
  while (e--) r *= b;
  return r;
}

// Witness of an extremal run: proper, no rainbow f, count equals value.
bool witness_ok(const ExtremalResult& r, const Pattern& h, const Pattern& f) {
  if (!is_proper(r.witness) || count_copies(r.witness, h) != r.value) return false;
  return r.witness.edge_count() == 0 || !find_rainbow_copy(r.witness, f).has_value();
}

void p4_exact(Verdict& v) {
  const Pattern p4 = Pattern::path(4);
  for (std::size_t n = 4; n <= 6; ++n) {
    const ExtremalResult r = exact_extremal(n, p4, p4);
    const std::uint64_t want = 12 * (n / 4);
    v.note("n=" + std::to_string(n) + " value " + std::to_string(r.value) + " expected " + std::to_string(want) +
           " hosts " + std::to_string(r.graphs_examined));
    v.expect(r.status == ExtremalStatus::Exact, "search incomplete at n=" + std::to_string(n));
    v.expect(r.value == want, "value at n=" + std::to_string(n));
    v.expect(witness_ok(r, p4, p4), "witness at n=" + std::to_string(n));
  }
}

void recognizer(Verdict& v) {
  const Pattern p4 = Pattern::path(4);
  std::size_t graphs = 0;
  std::size_t disagreements = 0;
  for (std::size_t n = 1; n <= 6; ++n) {
    for (const ColoredGraph& g : enumerate_graphs(n)) {
      ++graphs;
      const P4Verdict fast = p4_characterize(g);
      const ColorabilityResult slow = rainbow_free_colorable(g, p4);
      v.expect(slow.status != ColorabilityStatus::Incomplete, "colorability search incomplete");
      if (fast.colorable != (slow.status == ColorabilityStatus::Colorable)) ++disagreements;
    }
  }
  v.note(std::to_string(graphs) + " graphs, " + std::to_string(disagreements) + " disagreements");
  v.expect(disagreements == 0, "recognizer disagrees with exhaustive search");
}

std::vector<Construction> soundness_matrix() {
  std::vector<Construction> out;
  for (std::size_t k : {5, 6, 7}) {
    for (std::size_t b = 1; b <= 3; ++b) out.push_back(path_lower(k, ClassSize::exactly(b)));
  }
  for (std::size_t b = 1; b <= 2; ++b) out.push_back(odd_cycle_lower(2, ClassSize::exactly(b)));
  for (std::size_t b = 1; b <= 2; ++b) out.push_back(even_cycle_lower(3, ClassSize::exactly(b)));
  // Layers of 5, 7 and 13 vertices.
  for (std::size_t n : {10, 14, 26}) out.push_back(c4_lower(n));
  for (std::size_t b = 1; b <= 3; ++b) out.push_back(clique_lower(4, ClassSize::exactly(b)));
  for (const Pattern& h : {Pattern::matching(2), Pattern::matching(3), Pattern::path(4)}) {
    for (std::size_t b = 1; b <= 3; ++b) out.push_back(disjoint_components(h, ClassSize::exactly(b)));
  }
  const Pattern trees[] = {
      Pattern::path(6),
      Pattern::path(7),
      parse_pattern("0-1,1-2,0-3,3-4,0-5,5-6"),        // spider, star case
      parse_pattern("0-1,1-2,2-3,3-4,4-5,2-6,3-7"),    // leaf blow-up
      Pattern::path(5),                                // bare path
  };
  for (const Pattern& t : trees) {
    for (std::size_t b = 1; b <= 2; ++b) out.push_back(tree_lower(t, ClassSize::exactly(b)));
  }
  return out;
}

void soundness(Verdict& v) {
  const std::vector<Construction> matrix = soundness_matrix();
  std::size_t checked = 0;
  for (const Construction& c : matrix) {
    ++checked;
    const std::string tag = std::string(family_name(c.spec.family)) + " " + c.target.name() + " on " +
                            std::to_string(c.graph.vertex_count()) + " vertices";
    v.expect(is_proper(c.graph), tag + " is not proper");
    v.expect(!find_rainbow_copy(c.graph, c.target).has_value(), tag + " has a rainbow copy");
  }
  for (Family f : {Family::TreeLeafBlowup, Family::TreeStarCase, Family::TreeBarePath}) {
    bool seen = false;
    for (const Construction& c : matrix) seen = seen || c.spec.family == f;
    v.expect(seen, std::string("no tree selected ") + std::string(family_name(f)));
  }
  v.note(std::to_string(checked) + " constructions proper with no rainbow target copy");
}

void count_bounds(Verdict& v) {
  for (std::size_t k : {5, 6, 7}) {
    for (std::size_t b = 1; b <= 3; ++b) {
      const Construction c = path_lower(k, ClassSize::exactly(b));
      const std::uint64_t got = count_copies(c.graph, c.target);
      const std::uint64_t floor_bound = power(b, static_cast<unsigned>(k / 2));
      v.note("path k=" + std::to_string(k) + " b=" + std::to_string(b) + ": " + std::to_string(got) +
             " >= " + std::to_string(floor_bound));
      v.expect(got >= floor_bound, "path bound");
    }
  }
  for (std::size_t b = 1; b <= 3; ++b) {
    const Construction c = odd_cycle_lower(2, ClassSize::exactly(b));
    const std::uint64_t got = count_copies(c.graph, c.target);
    v.note("odd cycle k=2 b=" + std::to_string(b) + ": " + std::to_string(got) + " >= " +
           std::to_string(power(b, 3)));
    v.expect(got >= power(b, 3), "odd cycle bound");
  }
  for (std::size_t b = 1; b <= 3; ++b) {
    const Construction c = even_cycle_lower(3, ClassSize::exactly(b));
    const std::uint64_t got = count_copies(c.graph, c.target);
    v.note("even cycle k=3 b=" + std::to_string(b) + ": " + std::to_string(got) + " >= " +
           std::to_string(power(b, 2)));
    v.expect(got >= power(b, 2), "even cycle bound");
  }
  const Construction k4 = clique_lower(4, ClassSize::exactly(3));
  const std::uint64_t got = count_copies(k4.graph, k4.target);
  v.note("clique r=4 part size 3: " + std::to_string(got) + " == 9");
  v.expect(got == 9, "clique count");
}

void census_oracle(Verdict& v) {
  std::mt19937 rng(20240601);
  std::size_t mismatches = 0;
  for (int round = 0; round < 300; ++round) {
    const ColoredGraph g = testing::random_graph(1 + rng() % 7, 0.5, rng);
    const ColoredGraph h = testing::random_pattern(2 + rng() % 4, rng);
    if (count_copies(g, Pattern(h)) != testing::brute_count_copies(g, h)) ++mismatches;
  }
  v.note("300 hosts, " + std::to_string(mismatches) + " mismatches");
  v.expect(mismatches == 0, "census disagrees with subset enumeration");
}

void regressions(Verdict& v) {
  const Pattern p4 = Pattern::path(4);
  const std::uint64_t k4 = count_copies(Pattern::clique(4).graph(), p4);
  v.note("K4: " + std::to_string(k4) + " expected 12");
  v.expect(k4 == 12, "K4");
  for (std::size_t k = 4; k <= 8; ++k) {
    const std::uint64_t cyc = count_copies(Pattern::cycle(k).graph(), p4);
    const std::uint64_t path = count_copies(Pattern::path(k).graph(), p4);
    v.note("k=" + std::to_string(k) + ": C_k " + std::to_string(cyc) + " expected " + std::to_string(k) +
           "; P_k " + std::to_string(path) + " expected " + std::to_string(k - 2));
    v.expect(cyc == k, "C_" + std::to_string(k));
    v.expect(path == k - 2, "P_" + std::to_string(k));
  }
}

void lemma_suite(Verdict& v) {
  std::size_t found = 0;
  std::size_t valid = 0;
  std::size_t within = 0;
  std::size_t worst_slack = ~std::size_t{0};
  for (std::uint32_t seed = 0; seed < 200; ++seed) {
    const auto [g, inst] = testing::lemma_instance(seed);
    v.expect(check_precondition(g, inst).holds, "instance " + std::to_string(seed) + " misses the precondition");
    const LemmaOutcome out = find_rainbow_alternating_path(g, inst);
    if (out.status == LemmaStatus::Found) ++found;
    if (testing::path_is_valid(g, inst, out)) ++valid;
    const std::size_t k = inst.anchors.size();
    const std::size_t bound = inst.forbidden_vertices.size() + 2 * inst.forbidden_colors.size() + 5 * k - 10;
    if (out.max_forbidden <= bound) ++within;
    if (out.max_forbidden <= bound) worst_slack = std::min(worst_slack, bound - out.max_forbidden);
  }
  v.note("found " + std::to_string(found) + "/200, valid " + std::to_string(valid) + "/200, forbidden count within " +
         "bound " + std::to_string(within) + "/200, least slack " + std::to_string(worst_slack));
  v.expect(found == 200, "search failed");
  v.expect(valid == 200, "invalid path");
  v.expect(within == 200, "forbidden count above bound");
}

double slope_of(const std::string& family, std::size_t k, std::initializer_list<std::size_t> ns, Verdict& v) {
  std::vector<std::pair<double, double>> points;
  std::ostringstream row;
  for (std::size_t n : ns) {
    ConstructionRequest req;
    req.family = family;
    req.k = k;
    req.n_target = n;
    const Construction c = construct(req);
    const std::uint64_t copies = count_copies(c.graph, c.target);
    points.emplace_back(static_cast<double>(n), static_cast<double>(copies));
    row << " n=" << n << " b=" << *c.spec.b << " copies=" << copies << ';';
  }
  const ExponentFit fit = fit_exponent(points);
  char buf[64];
  std::snprintf(buf, sizeof buf, " slope %.4f residual %.4f", fit.slope, fit.residual);
  v.note(family + " k=" + std::to_string(k) + ":" + row.str() + buf);
  return fit.slope;
}

void scaling(Verdict& v) {
  const double path = slope_of("path-lower", 6, {24, 48, 96}, v);
  const double odd = slope_of("odd-cycle-lower", 2, {20, 40, 80}, v);
  v.expect(std::abs(path - 3.0) <= 0.2, "path slope outside 3.0 +- 0.2");
  v.expect(std::abs(odd - 3.0) <= 0.2, "odd cycle slope outside 3.0 +- 0.2");
}

void zero_cases(Verdict& v) {
  for (const Pattern& h : {Pattern::path(2), Pattern::path(3), Pattern::star(4), Pattern::clique(3)}) {
    const ExtremalResult r = exact_extremal(5, h, h);
    v.note(h.name() + ": " + std::to_string(r.value));
    v.expect(r.status == ExtremalStatus::Exact && r.value == 0, h.name());
    v.expect(witness_ok(r, h, h), h.name() + " witness");
  }
}

void matching_case(Verdict& v) {
  const Pattern m2 = Pattern::matching(2);
  const ExtremalResult r = exact_extremal(4, m2, m2);
  v.note("value " + std::to_string(r.value) + " on a witness with " + std::to_string(r.witness.edge_count()) +
         " edges and " + std::to_string(r.witness.palette_size()) + " colors");
  v.expect(r.status == ExtremalStatus::Exact && r.value == 3, "value");
  v.expect(witness_ok(r, m2, m2), "witness re-verification");
  v.expect(r.value == testing::brute_count_copies(r.witness, m2.graph()), "witness count by subset enumeration");
  v.expect(!testing::brute_has_rainbow(r.witness, m2.graph()), "rainbow copy by subset enumeration");
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {1, "P4 exact value for n = 4, 5, 6", p4_exact, std::nullopt},
      {2, "P4 recognizer equivalence up to 6 vertices", recognizer, std::nullopt},
      {3, "construction soundness matrix", soundness, std::nullopt},
      {4, "construction copy-count bounds", count_bounds, std::nullopt},
      {5, "census against subset enumeration", census_oracle, std::nullopt},
      {6, "P4 count regressions", regressions,
       "a path on k vertices has k - 3 subpaths on 4 vertices, so the P_k = k - 2 targets cannot hold"},
      {7, "greedy rainbow path property suite", lemma_suite, std::nullopt},
      {8, "scaling fits", scaling,
       "path-lower k=6 counts equal 4b^3 - 2b^2 - b at every measured b, with b = floor((n-2)/4); over "
       "n = 24..96 the floor and the lower-order terms pull the fitted slope above 3.2"},
      {9, "zero cases at n = 5", zero_cases, std::nullopt},
      {10, "matching M2 at n = 4", matching_case, std::nullopt},
  };

  int unexpected = 0;
  for (const Criterion& c : criteria) {
    Verdict v;
    const auto start = std::chrono::steady_clock::now();
    try {
      c.run(v);
    } catch (const std::exception& e) {
      v.expect(false, std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    char timing[32];
    std::snprintf(timing, sizeof timing, " (%.2fs)", secs);
    std::cout << (v.pass ? "PASS" : "FAIL") << " criterion " << c.id << ": " << c.title << timing;
    if (c.known_deviation) std::cout << (v.pass ? " [known deviation no longer reproduces]" : " [known deviation]");
    std::cout << '\n' << v.detail.str();
    if (c.known_deviation && !v.pass) std::cout << "  deviation: " << *c.known_deviation << '\n';
    if (v.pass == c.known_deviation.has_value()) ++unexpected;
  }
  std::cout << (unexpected == 0 ? "acceptance: no unexpected results\n" : "acceptance: unexpected results\n");
  return unexpected == 0 ? 0 : 1;
}
