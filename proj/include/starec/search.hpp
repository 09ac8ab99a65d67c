#pragma once

#include <chrono>
#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "starec/coloring.hpp"
#include "starec/graph.hpp"

namespace starec {

enum class Symmetry {
  None,
  ColorClasses,     // a new color may only be max-used + 1
  BipartiteOrbits,  // ColorClasses plus row/column breaking on complete bipartite inputs
};

enum class SearchStatus { Colored, Unsat, TimedOut };

std::string_view to_string(SearchStatus s);

struct SearchConfig {
  /// Upper limit for chi_star; 0 means the edge count.
  Color max_colors = 0;
  std::chrono::milliseconds time_budget{60'000};
  Symmetry symmetry = Symmetry::ColorClasses;
  bool parallel = false;
  /// Used by BipartiteOrbits; inferred when absent.
  std::optional<BipartitePartition> partition;
};

struct SearchOutcome {
  SearchStatus status = SearchStatus::Unsat;
  std::optional<EdgeColoring> coloring;
  std::uint64_t nodes_explored = 0;
};

/// Star coloring with colors 1..t, or an exhaustive Unsat, or TimedOut.
/// A returned coloring has always passed check_star.
SearchOutcome find_star_coloring(const Graph& g, Color t, const SearchConfig& cfg = {});

struct ChiResult {
  /// Colored: value is the star chromatic index. Unsat: nothing fits within
  /// cfg.max_colors. TimedOut: value is undetermined.
  SearchStatus status = SearchStatus::Unsat;
  Color value = 0;
  EdgeColoring witness;
  /// Every t proven Unsat, ascending from the max-degree start.
  std::vector<Color> unsat_certified;
  std::uint64_t nodes_explored = 0;
};

/// Ascends t from the maximum degree; the time budget covers the whole run.
ChiResult chi_star(const Graph& g, const SearchConfig& cfg = {});

}  // namespace starec
