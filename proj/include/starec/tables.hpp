#pragma once

#include <chrono>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace starec {

struct TableEntry {
  std::int32_t r;
  std::int32_t d;
  std::int32_t value;  // known star chromatic index
};

/// Reference cells: 1 is K_{4,d} (d = 4..12), 2 is K_{5,d}
/// (d = 5..11), 3 is K_{r,d} for r = 6, 7, 8. Throws InvalidArgument otherwise.
std::vector<TableEntry> table_entries(std::int32_t which);

enum class LowerSource { Lp, Ilp, Search, None };
std::string_view to_string(LowerSource s);

struct CellReport {
  TableEntry entry;
  /// Colors used by the stored coloring, and whether it passed check_star.
  std::int32_t fixture_colors = 0;
  bool fixture_valid = false;
  std::int64_t lp_bound = 0;             // rounded-up LP optimum
  std::optional<std::int64_t> ilp_bound; // absent if the ILP ran out of budget
  LowerSource lower_source = LowerSource::None;

  bool upper_confirmed() const { return fixture_valid && fixture_colors == entry.value; }
  bool lower_confirmed() const { return lower_source != LowerSource::None; }
};

/// Checks every cell: the stored coloring for the upper bound, then the LP,
/// the ILP and finally an exhaustive search at value - 1 for the lower bound.
/// The ILP and the search each get `budget` per cell.
std::vector<CellReport> reproduce_table(std::int32_t which, std::chrono::milliseconds budget);

/// Human-readable table, or one tab-separated record per cell.
std::string format_table_report(std::int32_t which, const std::vector<CellReport>& cells, bool tsv);

}  // namespace starec
