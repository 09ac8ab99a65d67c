#include "cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <stdexcept>

#include "starec/bireg.hpp"
#include "starec/bounds.hpp"
#include "starec/complete_bipartite.hpp"
#include "starec/cubic.hpp"
#include "starec/error.hpp"
#include "starec/generators.hpp"
#include "starec/graph_io.hpp"
#include "starec/search.hpp"
#include "starec/tables.hpp"
#include "starec/verify.hpp"

namespace starec::cli {

std::chrono::milliseconds parse_duration(const std::string& text) {
  std::size_t used = 0;
  double value = 0;
  try {
    value = std::stod(text, &used);
  } catch (const std::exception&) {
    throw std::invalid_argument("bad duration: " + text);
  }
  const std::string unit = text.substr(used);
  double ms = 0;
  if (unit.empty() || unit == "s") {
    ms = value * 1000;
  } else if (unit == "ms") {
    ms = value;
  } else if (unit == "m") {
    ms = value * 60'000;
  } else if (unit == "h") {
    ms = value * 3'600'000;
  } else {
    throw std::invalid_argument("bad duration unit: " + text);
  }
  if (ms < 0) throw std::invalid_argument("negative duration: " + text);
  return std::chrono::milliseconds(static_cast<std::int64_t>(ms));
}

namespace {

std::string join(const std::vector<EdgeId>& ids, char sep) {
  std::string s;
  for (std::size_t i = 0; i < ids.size(); ++i) {
    if (i) s += sep;
    s += std::to_string(ids[i]);
  }
  return s;
}

BipartitePartition partition_of(const GraphFile& f) {
  if (f.bipartite_x) {
    BipartitePartition p = BipartitePartition::prefix(f.graph.vertex_count(), *f.bipartite_x);
    p.validate(f.graph);
    return p;
  }
  auto p = infer_bipartition(f.graph);
  if (!p) throw Error(ErrorCode::NotBipartite, "graph has an odd cycle");
  return *p;
}

void emit_coloring(const EdgeColoring& c, const std::string& path, std::ostream& out) {
  if (path.empty()) {
    write_coloring(out, c);
  } else {
    write_coloring_file(path, c);
  }
}

// Renumbers vertices so that part X comes first; edge ids are kept.
GraphFile x_first(const Graph& g, const BipartitePartition& p) {
  std::vector<Vertex> id(static_cast<std::size_t>(g.vertex_count()));
  Vertex next = 0;
  for (Vertex v : p.part_x) id[static_cast<std::size_t>(v)] = next++;
  for (Vertex v : p.part_y) id[static_cast<std::size_t>(v)] = next++;
  std::vector<Edge> edges;
  for (const Edge& e : g.edges()) edges.push_back({id[static_cast<std::size_t>(e.u)], id[static_cast<std::size_t>(e.v)]});
  GraphFile f;
  f.graph = Graph(g.vertex_count(), std::move(edges));
  f.bipartite_x = static_cast<std::int32_t>(p.part_x.size());
  return f;
}

int exit_for(ErrorCode code) {
  switch (code) {
    case ErrorCode::NoTwoFactorFound:
    case ErrorCode::ThreeColoringNotFound:
    case ErrorCode::InternalCaseExhaustion:
    case ErrorCode::Infeasible:
      return kNegative;
    default:
      return kUsage;
  }
}

struct VerifyArgs {
  std::string graph, coloring, mode = "star";
};

int do_verify(const VerifyArgs& a, bool tsv, std::ostream& out) {
  const GraphFile g = read_graph_file(a.graph);
  const EdgeColoring c = read_coloring_file(a.coloring);
  if (c.size() != g.graph.edge_count()) {
    throw Error(ErrorCode::ParseError, "coloring has " + std::to_string(c.size()) + " edges, graph has " +
                                           std::to_string(g.graph.edge_count()));
  }
  std::optional<StarViolation> v;
  if (a.mode == "star") {
    v = check_star(g.graph, c);
  } else if (a.mode == "proper") {
    v = check_proper(g.graph, c);
  } else {
    v = check_strong(g.graph, c);
  }
  if (!v) {
    if (tsv) {
      out << "ok\t" << a.mode << '\t' << count_colors(c) << '\n';
    } else {
      out << "ok: " << a.mode << " coloring with " << count_colors(c) << " colors\n";
    }
    return kOk;
  }
  if (tsv) {
    out << "violation\t" << to_string(v->kind) << '\t' << join(v->edges, ',') << '\n';
  } else {
    out << "violation: " << to_string(v->kind) << " edges " << join(v->edges, ' ') << '\n';
  }
  return kNegative;
}

struct ColorArgs {
  std::string family;
  std::int32_t r = 0, d = 0, k = 0;
  std::string graph, matching, output, graph_output;
  bool stats = false;
};

int do_color(const ColorArgs& a, bool tsv, std::ostream& out, std::ostream& err) {
  GraphFile gf;
  EdgeColoring c;
  std::string note;
  const auto need = [&](bool ok, const char* what) {
    if (!ok) throw Error(ErrorCode::InvalidArgument, std::string("family ") + a.family + " needs " + what);
  };
  const auto complete = [&](std::int32_t r, std::int32_t d) {
    const CompleteBipartite k = complete_bipartite(r, d);
    gf.graph = k.graph;
    gf.bipartite_x = r;
  };

  if (a.family == "k2d") {
    need(a.d >= 1, "--d >= 1");
    complete(2, a.d);
    c = color_k2d(a.d);
  } else if (a.family == "k3d") {
    need(a.d >= 1, "--d >= 1");
    complete(3, a.d);
    c = color_k3d(a.d);
  } else if (a.family == "k4d-blocks") {
    need(a.d >= 1, "--d >= 1");
    complete(4, a.d);
    c = color_k4d_blocks(a.d);
  } else if (a.family == "krd-blocks") {
    need(a.r >= 1 && a.d >= 1, "--r and --d");
    complete(a.r, a.d);
    c = color_krd_blocks(a.r, a.d);
  } else if (a.family == "krd-best") {
    need(a.r >= 1 && a.d >= 1, "--r and --d");
    complete(a.r, a.d);
    const KrdColoring best = color_krd_best(a.r, a.d);
    c = best.coloring;
    note = std::string(to_string(best.construction));
  } else if (a.family == "fixture") {
    need(a.r >= 1 && a.d >= 1, "--r and --d");
    c = fixture(a.r, a.d);
    complete(a.r, a.d);
  } else if (a.family == "two-p5") {
    const ColoredGraph ex = example_2_3_four_colors();
    gf = x_first(ex.graph, ex.partition);
    c = ex.coloring;
  } else if (a.family == "bireg" || a.family == "bip23") {
    need(!a.graph.empty(), "--graph");
    gf = read_graph_file(a.graph);
    const BipartitePartition p = partition_of(gf);
    if (a.family == "bip23") {
      c = color_2_3(gf.graph, p);
    } else {
      need(a.k >= 1, "--k >= 1");
      if (p.max_degree_y(gf.graph) <= 2 * a.k) {
        c = color_2_even(gf.graph, p, a.k);
        note = "even";
      } else {
        c = color_2_odd(gf.graph, p, a.k);
        note = "odd";
      }
    }
  } else if (a.family == "halin") {
    need(!a.graph.empty(), "--graph");
    gf = read_graph_file(a.graph);
    if (!gf.halin_cycle) throw Error(ErrorCode::ParseError, "graph file has no halin line");
    const HalinGraph h = halin_from_graph(gf.graph, *gf.halin_cycle);
    HalinStats st;
    c = star6_color_halin(h, &st);
    if (a.stats) {
      for (std::size_t i = 0; i < kHalinSubcaseCount; ++i) {
        err << "subcase " << to_string(static_cast<HalinSubcase>(i)) << ' ' << st.subcase[i] << " complementary "
            << st.complementary[i] << '\n';
      }
      err << "base " << st.base_cases << " mirrored " << st.mirrored << " searched " << st.searched_extensions
          << '\n';
    }
  } else if (a.family == "planar-matched") {
    need(!a.graph.empty() && !a.matching.empty(), "--graph and --matching");
    gf = read_graph_file(a.graph);
    const std::vector<EdgeId> m = read_edge_list_file(a.matching);
    c = star6_color_matched_planar(gf.graph, m);
  } else {
    throw Error(ErrorCode::InvalidArgument, "unknown family " + a.family);
  }

  if (!a.graph_output.empty()) write_graph_file(a.graph_output, gf);
  const bool valid = !check_star(gf.graph, c);
  emit_coloring(c, a.output, out);
  std::ostream& summary = a.output.empty() ? err : out;
  if (tsv) {
    summary << a.family << '\t' << gf.graph.edge_count() << '\t' << count_colors(c) << '\t'
            << (valid ? "star" : "invalid") << '\n';
  } else {
    summary << a.family << ": " << gf.graph.edge_count() << " edges, " << count_colors(c) << " colors, "
            << (valid ? "star coloring" : "NOT a star coloring");
    if (!note.empty()) summary << " (" << note << ")";
    summary << '\n';
  }
  return valid ? kOk : kNegative;
}

struct ChiArgs {
  std::string graph, budget = "60s", symmetry = "colors", output;
  Color max_colors = 0;
  bool parallel = false;
};

int do_chi(const ChiArgs& a, bool tsv, std::ostream& out) {
  const GraphFile gf = read_graph_file(a.graph);
  SearchConfig cfg;
  cfg.max_colors = a.max_colors;
  cfg.time_budget = parse_duration(a.budget);
  cfg.parallel = a.parallel;
  if (a.symmetry == "none") {
    cfg.symmetry = Symmetry::None;
  } else if (a.symmetry == "orbits") {
    cfg.symmetry = Symmetry::BipartiteOrbits;
    cfg.partition = partition_of(gf);
  }
  const ChiResult r = chi_star(gf.graph, cfg);
  std::vector<EdgeId> unsat(r.unsat_certified.begin(), r.unsat_certified.end());
  if (tsv) {
    out << to_string(r.status) << '\t' << (r.status == SearchStatus::Colored ? std::to_string(r.value) : "-")
        << '\t' << join(unsat, ',') << '\t' << r.nodes_explored << '\n';
  } else {
    switch (r.status) {
      case SearchStatus::Colored: out << "chi_star = " << r.value << '\n'; break;
      case SearchStatus::Unsat: out << "no star coloring with at most " << cfg.max_colors << " colors\n"; break;
      case SearchStatus::TimedOut: out << "timed out\n"; break;
    }
    if (!unsat.empty()) out << "unsat certified for t = " << join(unsat, ' ') << '\n';
    out << "nodes " << r.nodes_explored << '\n';
  }
  if (r.status == SearchStatus::Colored && !a.output.empty()) write_coloring_file(a.output, r.witness);
  switch (r.status) {
    case SearchStatus::Colored: return kOk;
    case SearchStatus::Unsat: return kNegative;
    case SearchStatus::TimedOut: return kTimedOut;
  }
  return kOk;
}

struct BoundArgs {
  std::int32_t r = 0, d = 0;
  bool ilp = false, dump = false, solution = false;
  std::string rhs = "floor", budget;
};

int do_bound(const BoundArgs& a, bool tsv, std::ostream& out) {
  const IntersectionRhs rhs = a.rhs == "half" ? IntersectionRhs::Half : IntersectionRhs::Floor;
  const ColorSetProgram p = build_program(a.r, a.d, rhs);
  if (a.dump) out << dump_model(p);
  const auto print = [&](const char* method, const std::string& value) {
    if (tsv) {
      out << a.r << '\t' << a.d << '\t' << method << '\t' << a.rhs << '\t' << value << '\n';
    } else {
      out << value << '\n';
    }
  };
  if (!a.ilp) {
    const LpBound lp = solve_lp(p);
    print("lp", format_rational(lp.objective));
    if (a.solution) {
      for (std::size_t j = 0; j < lp.x.size(); ++j) {
        if (lp.x[j] != 0) out << "x" << p.variable_name(j) << " = " << format_rational(lp.x[j]) << '\n';
      }
    }
    return kOk;
  }
  std::optional<std::chrono::milliseconds> budget;
  if (!a.budget.empty()) budget = parse_duration(a.budget);
  const std::optional<IlpBound> ilp = solve_ilp(p, budget);
  if (!ilp) {
    if (tsv) {
      out << a.r << '\t' << a.d << "\tilp\t" << a.rhs << "\t-\n";
    } else {
      out << "timed out\n";
    }
    return kTimedOut;
  }
  print("ilp", std::to_string(ilp->objective));
  if (a.solution) {
    for (std::size_t j = 0; j < ilp->x.size(); ++j) {
      if (ilp->x[j] != 0) out << "x" << p.variable_name(j) << " = " << ilp->x[j] << '\n';
    }
  }
  return kOk;
}

int do_tables(const std::vector<std::int32_t>& which, const std::string& budget, bool tsv, std::ostream& out) {
  const auto b = parse_duration(budget);
  int rc = kOk;
  for (std::int32_t t : which) {
    const std::vector<CellReport> cells = reproduce_table(t, b);
    std::string text = format_table_report(t, cells, tsv);
    // one header for the whole tsv stream
    if (tsv && t != which.front()) text.erase(0, text.find('\n') + 1);
    out << text << std::flush;
    for (const CellReport& c : cells) {
      if (!c.upper_confirmed()) rc = kNegative;
    }
  }
  return rc;
}

int do_fixtures(bool check, bool tsv, std::ostream& out) {
  int rc = kOk;
  for (const FixtureKey& key : fixture_catalog()) {
    const CompleteBipartite k = complete_bipartite(key.r, key.d);
    const EdgeColoring c = fixture(key.r, key.d);
    const std::int32_t declared = fixture_declared_colors(key.r, key.d);
    std::string status = "-";
    if (check) {
      const bool star = !check_star(k.graph, c);
      const bool count_ok = count_colors(c) == declared;
      status = star && count_ok ? "ok" : (star ? "count-mismatch" : "not-star");
      if (status != "ok") rc = kNegative;
    }
    if (tsv) {
      out << key.r << '\t' << key.d << '\t' << declared << '\t' << count_colors(c) << '\t' << status << '\n';
    } else {
      out << "K_{" << key.r << ',' << key.d << "}: " << count_colors(c) << " colors (header " << declared << ")";
      if (check) out << ' ' << status;
      out << '\n';
    }
  }
  return rc;
}

struct GenerateArgs {
  std::string family, output;
  std::uint64_t seed = 1;
  std::int32_t n = 0, m = 0, cycle = 0, x = 0, y = 0, b = 0, max_y = 0, rungs = 0, r = 0, d = 0;
  bool with_matching = false;
};

int do_generate(const GenerateArgs& a, std::ostream& out, std::ostream& err) {
  Rng rng(a.seed);
  GraphFile gf;
  if (a.family == "halin") {
    const HalinGraph h = a.cycle == 0 ? prism_halin() : random_cubic_halin(a.cycle, rng);
    gf.graph = h.graph;
    gf.halin_cycle = h.cycle_order;
  } else if (a.family == "biregular") {
    const BipartiteInstance inst = random_biregular(a.y, a.b, rng);
    gf = x_first(inst.graph, inst.partition);
  } else if (a.family == "bipartite") {
    const BipartiteInstance inst = random_bipartite_x2(a.x, a.y, a.max_y, rng);
    gf.graph = inst.graph;
    gf.bipartite_x = a.x;
  } else if (a.family == "random") {
    gf.graph = random_graph(a.n, a.m, rng);
  } else if (a.family == "ladder") {
    gf.graph = spoked_ladder(a.rungs, rng);
  } else if (a.family == "complete") {
    gf.graph = complete_bipartite(a.r, a.d).graph;
    gf.bipartite_x = a.r;
  } else {
    throw Error(ErrorCode::InvalidArgument, "unknown family " + a.family);
  }
  if (a.output.empty()) {
    write_graph(out, gf);
  } else {
    write_graph_file(a.output, gf);
  }
  if (a.with_matching) {
    const auto pm = find_perfect_matching(gf.graph);
    if (!pm) throw Error(ErrorCode::NotPerfectMatching, "generated graph has no perfect matching");
    std::ostringstream s;
    for (EdgeId e : *pm) s << e << '\n';
    if (a.output.empty()) {
      err << s.str();
    } else {
      std::ofstream(a.output + ".matching") << s.str();
    }
  }
  return kOk;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Star edge coloring toolkit"};
  app.require_subcommand(1);
  app.fallthrough();
  bool tsv = false;
  app.add_flag("--tsv", tsv, "Tab-separated output");

  VerifyArgs va;
  auto* verify = app.add_subcommand("verify", "Check a coloring against a graph");
  verify->add_option("graph", va.graph)->required();
  verify->add_option("coloring", va.coloring)->required();
  verify->add_option("--mode", va.mode)->check(CLI::IsMember({"star", "proper", "strong"}));

  ColorArgs ca;
  auto* color = app.add_subcommand("color", "Run a constructive colorer");
  color->add_option("--family", ca.family)
      ->required()
      ->check(CLI::IsMember({"k2d", "k3d", "k4d-blocks", "krd-blocks", "krd-best", "fixture", "two-p5", "bireg",
                             "bip23", "halin", "planar-matched"}));
  color->add_option("--r", ca.r);
  color->add_option("--d", ca.d);
  color->add_option("--k", ca.k);
  color->add_option("--graph", ca.graph);
  color->add_option("--matching", ca.matching);
  color->add_option("-o,--output", ca.output, "Coloring file (default stdout)");
  color->add_option("--write-graph", ca.graph_output, "Also write the colored graph");
  color->add_flag("--stats", ca.stats, "Halin subcase counts on stderr");

  ChiArgs ha;
  auto* chi = app.add_subcommand("chi", "Exact star chromatic index");
  chi->add_option("graph", ha.graph)->required();
  chi->add_option("--max-colors", ha.max_colors);
  chi->add_option("--budget", ha.budget);
  chi->add_option("--symmetry", ha.symmetry)->check(CLI::IsMember({"none", "colors", "orbits"}));
  chi->add_flag("--parallel", ha.parallel);
  chi->add_option("-o,--output", ha.output, "Write the optimal coloring");

  BoundArgs ba;
  auto* bound = app.add_subcommand("bound", "Color-set LP/ILP lower bound for K_{r,d}");
  bound->add_option("--r", ba.r)->required();
  bound->add_option("--d", ba.d)->required();
  bound->add_flag("--ilp", ba.ilp);
  bound->add_option("--rhs", ba.rhs)->check(CLI::IsMember({"floor", "half"}));
  bound->add_flag("--dump-model", ba.dump);
  bound->add_flag("--solution", ba.solution, "Print the nonzero variables");
  bound->add_option("--budget", ba.budget, "ILP time limit");

  std::vector<std::int32_t> tables_which;
  std::string tables_budget = "10s";
  auto* tables = app.add_subcommand("tables", "Recheck the reference K_{r,d} values");
  tables->add_option("--table", tables_which)->check(CLI::Range(1, 3));
  tables->add_option("--budget", tables_budget, "Per-cell ILP and search budget");

  bool fixtures_check = false;
  auto* fixtures = app.add_subcommand("fixtures", "List the stored colorings");
  fixtures->add_flag("--check", fixtures_check);

  GenerateArgs ga;
  auto* generate = app.add_subcommand("generate", "Write a random test instance");
  generate->add_option("--family", ga.family)
      ->required()
      ->check(CLI::IsMember({"halin", "biregular", "bipartite", "random", "ladder", "complete"}));
  generate->add_option("--seed", ga.seed);
  generate->add_option("--n", ga.n);
  generate->add_option("--m", ga.m);
  generate->add_option("--cycle", ga.cycle, "Halin leaf count (0: prism)");
  generate->add_option("--x", ga.x);
  generate->add_option("--y", ga.y);
  generate->add_option("--b", ga.b);
  generate->add_option("--max-y", ga.max_y);
  generate->add_option("--rungs", ga.rungs);
  generate->add_option("--r", ga.r);
  generate->add_option("--d", ga.d);
  generate->add_option("-o,--output", ga.output);
  generate->add_flag("--matching", ga.with_matching, "Also write a perfect matching (<output>.matching)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n\n" << app.help();
    return kUsage;
  }

  try {
    if (*verify) return do_verify(va, tsv, out);
    if (*color) return do_color(ca, tsv, out, err);
    if (*chi) return do_chi(ha, tsv, out);
    if (*bound) return do_bound(ba, tsv, out);
    if (*tables) {
      if (tables_which.empty()) tables_which = {1, 2, 3};
      return do_tables(tables_which, tables_budget, tsv, out);
    }
    if (*fixtures) return do_fixtures(fixtures_check, tsv, out);
    if (*generate) return do_generate(ga, out, err);
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return exit_for(e.code());
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::ios_base::failure& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }
  return kUsage;
}

}  // namespace starec::cli
