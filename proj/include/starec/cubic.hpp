#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <string_view>

#include "starec/coloring.hpp"
#include "starec/graph.hpp"
#include "starec/halin.hpp"

namespace starec {

/// The eight extension rules of the Halin induction step.
enum class HalinSubcase : std::uint8_t {
  Case1_1,
  Case1_2_1,
  Case1_2_2,
  Case1_3,
  Case2_1_1,
  Case2_1_2,
  Case2_1_3,
  Case2_2,
};
inline constexpr std::size_t kHalinSubcaseCount = 8;

std::string_view to_string(HalinSubcase s);

struct HalinStats {
  /// Steps extended by the rule written for each subcase.
  std::array<std::uint64_t, kHalinSubcaseCount> subcase{};
  /// Steps in 1.2.1 or 1.3 whose normalization cannot be reached by
  /// relabeling (3 at x1 instead of 2 at z; 1 at z instead of at x1) and
  /// that use the complementary rule instead.
  std::array<std::uint64_t, kHalinSubcaseCount> complementary{};
  std::uint64_t base_cases = 0;
  /// Steps where the reduction frame was found on the x1 side and relabeled.
  std::uint64_t mirrored = 0;
  /// Steps where no rule applied and the new edges were completed by
  /// exhaustive search. Zero on every input seen so far.
  std::uint64_t searched_extensions = 0;

  std::uint64_t count(HalinSubcase s) const { return subcase[static_cast<std::size_t>(s)]; }
};

/// Star edge coloring of a cubic Halin graph with at most 6 colors, by
/// induction on the cycle length. Cycle length <= 5 is solved by exact
/// search. Throws InternalCaseExhaustion if an extension step fails.
EdgeColoring star6_color_halin(const HalinGraph& h, HalinStats* stats = nullptr);

/// Star 6-coloring of a subcubic graph of girth >= 7 with perfect matching m:
/// colors 1..3 on m from a proper 3-coloring of g/m, colors 4..6 on g - m.
/// Planarity is not checked; a contraction that is not 3-colorable raises
/// ThreeColoringNotFound.
/// Errors: DegreeViolation, NotPerfectMatching, GirthTooSmall, ThreeColoringNotFound.
EdgeColoring star6_color_matched_planar(const Graph& g, std::span<const EdgeId> matching);

}  // namespace starec
