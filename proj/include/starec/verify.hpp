#pragma once

#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "starec/coloring.hpp"
#include "starec/graph.hpp"

namespace starec {

enum class ViolationKind {
  NotProper,     // two adjacent edges share a color
  BicoloredP4,   // path on four edges using two colors
  BicoloredC4,   // cycle on four edges using two colors
  NotInduced,    // two equal-colored edges at distance < 2 (strong coloring only)
};

std::string_view to_string(ViolationKind kind);

struct StarViolation {
  ViolationKind kind;
  /// Sorted ascending. Two edges for NotProper/NotInduced, four otherwise.
  std::vector<EdgeId> edges;

  bool operator==(const StarViolation&) const = default;
};

/// nullopt iff no two adjacent edges share a color. Throws PartialColoring.
std::optional<StarViolation> check_proper(const Graph& g, const EdgeColoring& c);

/// nullopt iff c is a star edge coloring. On failure returns the witness whose
/// sorted edge-id sequence is lexicographically least (improper pairs first).
std::optional<StarViolation> check_star(const Graph& g, const EdgeColoring& c);

/// nullopt iff all equal-colored edges in scope (default: all edges) are at
/// distance >= 2 in g. Edges outside scope may be uncolored.
std::optional<StarViolation> check_strong(const Graph& g, const EdgeColoring& c,
                                          std::optional<std::span<const EdgeId>> scope = std::nullopt);

/// Same as check_star but ignores uncolored edges instead of throwing.
std::optional<StarViolation> check_star_partial(const Graph& g, const EdgeColoring& c);

}  // namespace starec
