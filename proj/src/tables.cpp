#include "starec/tables.hpp"

#include <sstream>

#include "starec/bounds.hpp"
#include "starec/complete_bipartite.hpp"
#include "starec/error.hpp"
#include "starec/search.hpp"
#include "starec/verify.hpp"

namespace starec {

std::vector<TableEntry> table_entries(std::int32_t which) {
  switch (which) {
    case 1:
      return {{4, 4, 7},   {4, 5, 10},  {4, 6, 11},  {4, 7, 13}, {4, 8, 14},
              {4, 9, 16},  {4, 10, 17}, {4, 11, 20}, {4, 12, 20}};
    case 2:
      return {{5, 5, 11}, {5, 6, 12}, {5, 7, 14}, {5, 8, 15}, {5, 9, 17}, {5, 10, 18}, {5, 11, 20}};
    case 3:
      return {{6, 6, 13}, {6, 7, 14}, {6, 8, 15}, {7, 7, 14}, {7, 8, 15}, {8, 8, 15}};
    default:
      throw Error(ErrorCode::InvalidArgument, "table must be 1, 2 or 3");
  }
}

std::string_view to_string(LowerSource s) {
  switch (s) {
    case LowerSource::Lp: return "lp";
    case LowerSource::Ilp: return "ilp";
    case LowerSource::Search: return "search";
    case LowerSource::None: return "none";
  }
  return "?";
}

std::vector<CellReport> reproduce_table(std::int32_t which, std::chrono::milliseconds budget) {
  std::vector<CellReport> out;
  for (const TableEntry& t : table_entries(which)) {
    CellReport c;
    c.entry = t;
    const CompleteBipartite k = complete_bipartite(t.r, t.d);
    const EdgeColoring f = fixture(t.r, t.d);
    c.fixture_valid = !check_star(k.graph, f);
    c.fixture_colors = count_colors(f);

    const ColorSetProgram p = build_program(t.r, t.d);
    c.lp_bound = lower_bound_chi_star(t.r, t.d, BoundMethod::Lp);
    if (c.lp_bound >= t.value) {
      c.lower_source = LowerSource::Lp;
    } else {
      if (const auto ilp = solve_ilp(p, budget)) c.ilp_bound = ilp->objective;
      if (c.ilp_bound && *c.ilp_bound >= t.value) {
        c.lower_source = LowerSource::Ilp;
      } else {
        SearchConfig cfg;
        cfg.time_budget = budget;
        cfg.symmetry = Symmetry::BipartiteOrbits;
        cfg.partition = k.partition;
        if (find_star_coloring(k.graph, t.value - 1, cfg).status == SearchStatus::Unsat) {
          c.lower_source = LowerSource::Search;
        }
      }
    }
    out.push_back(c);
  }
  return out;
}

std::string format_table_report(std::int32_t which, const std::vector<CellReport>& cells, bool tsv) {
  std::ostringstream s;
  if (tsv) {
    s << "table\tr\td\tvalue\tfixture_colors\tfixture_valid\tlp\tilp\tlower_source\tstatus\n";
  } else {
    s << "Table " << which << "\n";
    s << "   r   d  value  fixture  lp   ilp   lower   status\n";
  }
  for (const CellReport& c : cells) {
    const std::string ilp = c.ilp_bound ? std::to_string(*c.ilp_bound) : "-";
    std::string status;
    if (!c.upper_confirmed()) {
      status = "fixture mismatch";
    } else if (c.lower_confirmed()) {
      status = "confirmed";
    } else {
      status = "upper bound verified, lower bound not re-proven within budget";
    }
    if (tsv) {
      s << which << '\t' << c.entry.r << '\t' << c.entry.d << '\t' << c.entry.value << '\t' << c.fixture_colors
        << '\t' << (c.fixture_valid ? "yes" : "no") << '\t' << c.lp_bound << '\t' << ilp << '\t'
        << to_string(c.lower_source) << '\t' << status << '\n';
      continue;
    }
    char line[128];
    std::snprintf(line, sizeof line, "%4d %3d %6d %8d %3lld %5s  %-6s  ", c.entry.r, c.entry.d, c.entry.value,
                  c.fixture_colors, static_cast<long long>(c.lp_bound), ilp.c_str(),
                  std::string(to_string(c.lower_source)).c_str());
    s << line << status << '\n';
  }
  return s.str();
}

}  // namespace starec
