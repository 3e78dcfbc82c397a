#include "cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <cmath>
#include <fstream>
#include <iomanip>
#include <ostream>
#include <sstream>

#include "rainbow/census.hpp"
#include "rainbow/cge.hpp"
#include "rainbow/constructions.hpp"
#include "rainbow/errors.hpp"
#include "rainbow/graph_core.hpp"
#include "rainbow/lemma.hpp"
#include "rainbow/oracle.hpp"
#include "rainbow/pattern.hpp"

#ifndef RAINBOW_VERSION
#define RAINBOW_VERSION "unknown"
#endif

namespace rainbow::cli {
namespace {

using json = nlohmann::ordered_json;

// Flag values and positionals as the user gave them, for the manifest.
json manifest(const CLI::App& sub) {
  json flags = json::object();
  json inputs = json::array();
  for (const CLI::Option* opt : sub.get_options()) {
    if (opt->count() == 0 || opt->get_name() == "--help") continue;
    const std::vector<std::string>& values = opt->results();
    if (opt->get_positional()) {
      for (const std::string& v : values) inputs.push_back(v);
      continue;
    }
    std::string name = opt->get_name();
    while (!name.empty() && name.front() == '-') name.erase(name.begin());
    if (values.empty() || opt->get_type_size() == 0) {
      flags[name] = true;
    } else if (values.size() == 1) {
      flags[name] = values.front();
    } else {
      flags[name] = values;
    }
  }
  return json{{"subcommand", sub.get_name()}, {"flags", flags}, {"inputs", inputs}, {"version", RAINBOW_VERSION}};
}

json embedding_json(const std::optional<Embedding>& e) {
  if (!e) return nullptr;
  return json{{"vertices", e->vertices}, {"edges", e->edges}};
}

json construction_json(const Construction& c) {
  json params = json::object();
  for (const auto& [key, value] : c.spec.params) params[key] = value;
  json out{{"family", family_name(c.spec.family)},
           {"params", params},
           {"n_target", c.spec.n_target},
           {"b", c.spec.b ? json(*c.spec.b) : json(nullptr)},
           {"target", c.target.name()},
           {"statement", c.statement},
           {"vertices", c.graph.vertex_count()},
           {"edges", c.graph.edge_count()},
           {"palette", c.graph.palette_size()}};
  return out;
}

void write_text(const std::string& path, const std::string& text) {
  std::ofstream f(path);
  if (!f) throw InvalidInput("cannot open '" + path + "' for writing");
  f << text;
  if (!f) throw InvalidInput("failed writing '" + path + "'");
}

std::vector<std::size_t> parse_list(const std::string& text, const char* what) {
  std::vector<std::size_t> out;
  if (text.empty()) return out;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    std::size_t pos = 0;
    unsigned long long v = 0;
    try {
      v = std::stoull(item, &pos);
    } catch (const std::exception&) {
      pos = 0;
    }
    if (pos == 0 || pos != item.size() || item.front() == '-') {
      throw InvalidInput(std::string("bad ") + what + " list entry '" + item + "'");
    }
    out.push_back(static_cast<std::size_t>(v));
  }
  return out;
}

template <class T>
std::vector<T> cast_list(const std::vector<std::size_t>& v) {
  return std::vector<T>(v.begin(), v.end());
}

std::string colorability_status(ColorabilityStatus s) {
  switch (s) {
    case ColorabilityStatus::Colorable: return "Colorable";
    case ColorabilityStatus::NotColorable: return "NotColorable";
    case ColorabilityStatus::Incomplete: return "Incomplete";
  }
  return "?";
}

std::string lemma_status(LemmaStatus s) {
  switch (s) {
    case LemmaStatus::Found: return "Found";
    case LemmaStatus::NotFound: return "NotFound";
    case LemmaStatus::PreconditionViolated: return "PreconditionViolated";
  }
  return "?";
}

SearchBudget make_budget(std::optional<std::uint64_t> graphs, std::optional<std::uint64_t> nodes,
                         std::optional<std::uint64_t> millis, bool no_dedupe) {
  SearchBudget b;
  b.max_graphs = graphs;
  b.max_coloring_nodes = nodes;
  if (millis) b.time_limit = std::chrono::milliseconds(*millis);
  b.dedupe = !no_dedupe;
  return b;
}

struct ConstructFlags {
  std::string family;
  std::optional<std::size_t> k;
  std::optional<std::size_t> r;
  std::optional<std::string> pattern;
  std::optional<std::string> strategy;
  std::optional<std::size_t> b;

  ConstructionRequest request(std::size_t n) const {
    ConstructionRequest req;
    req.family = family;
    req.k = k;
    req.r = r;
    req.pattern = pattern;
    req.strategy = strategy;
    req.n_target = n;
    req.b = b;
    return req;
  }
};

void add_construct_flags(CLI::App* sub, ConstructFlags& f) {
  sub->add_option("family", f.family, "path-lower, odd-cycle-lower, even-cycle-lower, c4-lower, "
                                      "disjoint-components, tree-lower, clique-lower, p4-extremal")
      ->required();
  sub->add_option("--k", f.k, "path length, or cycle half-length");
  sub->add_option("--r", f.r, "clique size");
  sub->add_option("--pattern", f.pattern, "pattern for disjoint-components and tree-lower");
  sub->add_option("--strategy", f.strategy, "tree strategy: leaf-blowup, star-case, bare-path (or A, B, C)");
  sub->add_option("--b", f.b, "fixed class size instead of fitting --n");
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Rainbow-free edge-coloring constructions, census and exact search"};
  app.name("rainbow");
  app.require_subcommand(1);
  unsigned threads = 1;
  app.add_option("--threads", threads, "worker threads for counting")->check(CLI::Range(1u, 256u));

  // construct
  ConstructFlags cf;
  std::size_t construct_n = 0;
  std::optional<std::string> construct_out;
  std::optional<std::string> construct_dot;
  CLI::App* construct = app.add_subcommand("construct", "build a rainbow-free construction as CGE");
  add_construct_flags(construct, cf);
  construct->add_option("--n", construct_n, "vertex budget")->required();
  construct->add_option("--out", construct_out, "write CGE here and print provenance JSON");
  construct->add_option("--emit-dot", construct_dot, "also write Graphviz DOT here");

  // count / rainbow-check
  std::string count_in;
  std::string count_pattern;
  std::optional<std::uint64_t> count_limit;
  CLI::App* count = app.add_subcommand("count", "count copies of a pattern in a CGE host");
  count->add_option("input", count_in, "CGE file")->required();
  count->add_option("--pattern", count_pattern, "Pk, Ck, Sp, Sp.r, Mk, Kr or an edge list")->required();
  count->add_option("--node-limit", count_limit, "search node cap");

  std::string check_in;
  std::string check_pattern;
  std::optional<std::uint64_t> check_limit;
  CLI::App* check = app.add_subcommand("rainbow-check", "look for a rainbow copy of a pattern");
  check->add_option("input", check_in, "CGE file")->required();
  check->add_option("--pattern", check_pattern, "pattern")->required();
  check->add_option("--node-limit", check_limit, "search node cap");

  // lemma
  std::string lemma_in;
  std::string anchors_text;
  std::string forbid_vertices_text;
  std::string forbid_colors_text;
  bool best_effort = false;
  bool close_cycle = false;
  CLI::App* lemma = app.add_subcommand("lemma", "greedy rainbow path through anchor vertices");
  lemma->add_option("input", lemma_in, "CGE file, totally and properly colored")->required();
  lemma->add_option("--anchors", anchors_text, "comma-separated anchor vertices")->required();
  lemma->add_option("--forbid-vertices", forbid_vertices_text, "comma-separated vertices to avoid");
  lemma->add_option("--forbid-colors", forbid_colors_text, "comma-separated colors to avoid");
  lemma->add_flag("--best-effort", best_effort, "search even when the precondition fails");
  lemma->add_flag("--close", close_cycle, "close the path into a rainbow odd cycle");

  // oracle
  std::size_t oracle_n = 0;
  std::string oracle_h;
  std::string oracle_f;
  std::optional<std::uint64_t> max_graphs;
  std::optional<std::uint64_t> max_nodes;
  std::optional<std::uint64_t> time_limit_ms;
  bool no_dedupe = false;
  CLI::App* oracle = app.add_subcommand("oracle", "exact extremal count by exhaustive search");
  oracle->set_help_flag("--help", "Print this help message and exit");
  oracle->add_option("--n", oracle_n, "host vertex count")->required();
  oracle->add_option("--h", oracle_h, "counted pattern")->required();
  oracle->add_option("--f", oracle_f, "forbidden rainbow pattern")->required();
  oracle->add_option("--max-graphs", max_graphs, "cap on hosts examined");
  oracle->add_option("--max-nodes", max_nodes, "coloring search cap per host");
  oracle->add_option("--time-limit-ms", time_limit_ms, "wall-clock cap");
  oracle->add_flag("--no-dedupe", no_dedupe, "enumerate labeled hosts");

  // colorable / characterize
  std::string colorable_in;
  std::string colorable_pattern;
  std::optional<std::uint64_t> colorable_nodes;
  std::optional<std::uint64_t> colorable_ms;
  CLI::App* colorable = app.add_subcommand("colorable", "proper coloring of a host without a rainbow pattern");
  colorable->add_option("input", colorable_in, "CGE file; colors are ignored")->required();
  colorable->add_option("--pattern", colorable_pattern, "forbidden rainbow pattern")->required();
  colorable->add_option("--max-nodes", colorable_nodes, "coloring search cap");
  colorable->add_option("--time-limit-ms", colorable_ms, "wall-clock cap");

  std::string characterize_in;
  CLI::App* characterize = app.add_subcommand("characterize", "decide rainbow-P4-free colorability by components");
  characterize->add_option("input", characterize_in, "CGE file; colors are ignored")->required();

  // scaling
  ConstructFlags sf;
  std::string scaling_ns;
  bool scaling_json = false;
  CLI::App* scaling = app.add_subcommand("scaling", "copy counts of a construction over growing n, with a fit");
  add_construct_flags(scaling, sf);
  scaling->add_option("--n", scaling_ns, "comma-separated vertex budgets")->required();
  scaling->add_flag("--json", scaling_json, "JSON instead of a table");

  std::vector<std::string> argv_store;
  argv_store.reserve(args.size() + 1);
  argv_store.emplace_back("rainbow");
  argv_store.insert(argv_store.end(), args.begin(), args.end());
  std::vector<char*> argv;
  for (std::string& s : argv_store) argv.push_back(s.data());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitInvalid;
  }

  CensusOptions census_options;
  census_options.threads = threads;

  try {
    if (*construct) {
      const Construction c = rainbow::construct(cf.request(construct_n));
      json prov = construction_json(c);
      const std::string comment = "provenance " + prov.dump();
      const std::string cge = to_cge(c.graph, std::span<const std::string>(&comment, 1));
      if (construct_dot) {
        std::ofstream dot(*construct_dot);
        if (!dot) throw InvalidInput("cannot open '" + *construct_dot + "' for writing");
        write_dot(dot, c.graph, family_name(c.spec.family));
      }
      if (construct_out) {
        write_text(*construct_out, cge);
        json report{{"manifest", manifest(*construct)}, {"provenance", prov}, {"output", *construct_out}};
        out << report.dump(2) << '\n';
      } else {
        out << cge;
      }
      return kExitOk;
    }

    if (*count) {
      const ColoredGraph g = read_cge_file(count_in);
      const Pattern h = parse_pattern(count_pattern);
      CensusOptions opts = census_options;
      opts.node_limit = count_limit;
      json report{{"manifest", manifest(*count)}, {"pattern", h.name()}};
      try {
        const CensusReport r = census(g, h, g.is_totally_colored(), opts);
        report["status"] = "Exact";
        report["copy_count"] = r.copy_count;
        report["rainbow_searched"] = r.rainbow_searched;
        report["rainbow_found"] = r.rainbow_searched ? json(r.rainbow_witness.has_value()) : json(nullptr);
        report["witness"] = embedding_json(r.rainbow_witness);
        report["nodes"] = r.nodes_explored;
      } catch (const BudgetExhausted& e) {
        report["status"] = "Incomplete";
        report["binding_cap"] = "node_limit";
        report["nodes"] = e.nodes();
        out << report.dump(2) << '\n';
        return kExitIncomplete;
      }
      out << report.dump(2) << '\n';
      return kExitOk;
    }

    if (*check) {
      const ColoredGraph g = read_cge_file(check_in);
      const Pattern h = parse_pattern(check_pattern);
      CensusOptions opts = census_options;
      opts.node_limit = check_limit;
      json report{{"manifest", manifest(*check)}, {"pattern", h.name()}};
      std::uint64_t nodes = 0;
      try {
        const auto w = find_rainbow_copy(g, h, opts, &nodes);
        report["status"] = "Exact";
        report["proper"] = is_proper(g);
        report["rainbow_found"] = w.has_value();
        report["witness"] = embedding_json(w);
        report["nodes"] = nodes;
      } catch (const BudgetExhausted& e) {
        report["status"] = "Incomplete";
        report["binding_cap"] = "node_limit";
        report["nodes"] = e.nodes();
        out << report.dump(2) << '\n';
        return kExitIncomplete;
      }
      out << report.dump(2) << '\n';
      return kExitOk;
    }

    if (*lemma) {
      const ColoredGraph g = read_cge_file(lemma_in);
      LemmaInstance inst;
      inst.anchors = cast_list<Vertex>(parse_list(anchors_text, "anchor"));
      inst.forbidden_vertices = cast_list<Vertex>(parse_list(forbid_vertices_text, "vertex"));
      inst.forbidden_colors = cast_list<Color>(parse_list(forbid_colors_text, "color"));
      const LemmaMode mode = best_effort ? LemmaMode::BestEffort : LemmaMode::Strict;
      json report{{"manifest", manifest(*lemma)}};
      LemmaOutcome path;
      if (close_cycle) {
        if (!inst.forbidden_colors.empty()) throw InvalidInput("--close picks the forbidden colors itself");
        const CycleOutcome c = close_rainbow_odd_cycle(g, inst.anchors, inst.forbidden_vertices, mode);
        path = c.path;
        report["cycle"] = c.cycle;
        report["cycle_edges"] = c.edges;
      } else {
        path = find_rainbow_alternating_path(g, inst, mode);
      }
      report["status"] = lemma_status(path.status);
      report["path"] = path.path;
      report["colors"] = path.colors;
      report["connectors"] = path.connectors;
      report["stuck_at"] = path.stuck_at ? json(*path.stuck_at) : json(nullptr);
      report["max_forbidden"] = path.max_forbidden;
      report["forbidden_bound"] = forbidden_bound(inst);
      report["precondition"] = json{{"holds", path.precondition.holds},
                                    {"required", path.precondition.required},
                                    {"common_counts", path.precondition.common_counts}};
      out << report.dump(2) << '\n';
      return kExitOk;
    }

    if (*oracle) {
      const Pattern h = parse_pattern(oracle_h);
      const Pattern f = parse_pattern(oracle_f);
      const ExtremalResult r =
          exact_extremal(oracle_n, h, f, make_budget(max_graphs, max_nodes, time_limit_ms, no_dedupe));
      const bool exact = r.status == ExtremalStatus::Exact;
      json report{{"manifest", manifest(*oracle)},
                  {"n", r.n},
                  {"h", r.h},
                  {"f", r.f},
                  {"value", r.value},
                  {"status", exact ? "Exact" : "Incomplete"},
                  {"witness_cge", to_cge(r.witness)},
                  {"binding_cap", exact ? json(nullptr) : json(r.binding_cap)},
                  {"graphs_examined", r.graphs_examined}};
      out << report.dump(2) << '\n';
      return exact ? kExitOk : kExitIncomplete;
    }

    if (*colorable) {
      const ColoredGraph g = read_cge_file(colorable_in);
      const Pattern f = parse_pattern(colorable_pattern);
      const ColorabilityResult r =
          rainbow_free_colorable(g.without_colors(), f, make_budget(std::nullopt, colorable_nodes, colorable_ms, false));
      json report{{"manifest", manifest(*colorable)},
                  {"pattern", f.name()},
                  {"status", colorability_status(r.status)},
                  {"coloring_cge", r.coloring ? json(to_cge(*r.coloring)) : json(nullptr)},
                  {"nodes", r.nodes},
                  {"binding_cap", r.binding_cap.empty() ? json(nullptr) : json(r.binding_cap)}};
      out << report.dump(2) << '\n';
      return r.status == ColorabilityStatus::Incomplete ? kExitIncomplete : kExitOk;
    }

    if (*characterize) {
      const ColoredGraph g = read_cge_file(characterize_in);
      const P4Verdict v = p4_characterize(g.without_colors());
      json report{{"manifest", manifest(*characterize)}, {"colorable", v.colorable}};
      if (v.colorable) {
        report["witness_cge"] = to_cge(*v.witness);
      } else {
        report["offending_component"] = v.offending_component;
        report["reason"] = v.reason;
      }
      out << report.dump(2) << '\n';
      return kExitOk;
    }

    if (*scaling) {
      const std::vector<std::size_t> ns = parse_list(scaling_ns, "n");
      json rows = json::array();
      std::vector<std::pair<double, double>> points;
      std::string target;
      for (std::size_t n : ns) {
        const Construction c = rainbow::construct(sf.request(n));
        const std::uint64_t copies = count_copies(c.graph, c.target, census_options);
        target = c.target.name();
        rows.push_back(json{{"n", n},
                            {"b", c.spec.b ? json(*c.spec.b) : json(nullptr)},
                            {"vertices", c.graph.vertex_count()},
                            {"edges", c.graph.edge_count()},
                            {"copies", copies}});
        points.emplace_back(static_cast<double>(n), static_cast<double>(copies));
      }
      const ExponentFit fit = fit_exponent(points);
      if (scaling_json) {
        json report{{"manifest", manifest(*scaling)},
                    {"target", target},
                    {"rows", rows},
                    {"fit", json{{"slope", fit.slope}, {"intercept", fit.intercept}, {"residual", fit.residual}}}};
        out << report.dump(2) << '\n';
      } else {
        out << "target " << target << '\n';
        out << std::setw(8) << "n" << std::setw(8) << "b" << std::setw(10) << "vertices" << std::setw(10) << "edges"
            << std::setw(14) << "copies" << '\n';
        for (const json& row : rows) {
          out << std::setw(8) << row["n"].get<std::size_t>() << std::setw(8)
              << (row["b"].is_null() ? std::string("-") : std::to_string(row["b"].get<std::size_t>()))
              << std::setw(10) << row["vertices"].get<std::size_t>() << std::setw(10)
              << row["edges"].get<std::size_t>() << std::setw(14) << row["copies"].get<std::uint64_t>() << '\n';
        }
        out << std::fixed << std::setprecision(4) << "slope " << fit.slope << " residual " << fit.residual << '\n';
      }
      return kExitOk;
    }
  } catch (const BudgetExhausted& e) {
    err << "incomplete: " << e.what() << '\n';
    return kExitIncomplete;
  } catch (const InvalidInput& e) {
    err << "error: " << e.what() << '\n';
    return kExitInvalid;
  } catch (const InternalError& e) {
    err << "internal error: " << e.what() << '\n';
    return kExitInternal;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << '\n';
    return kExitInternal;
  }
  return kExitInvalid;
}

}  // namespace rainbow::cli
