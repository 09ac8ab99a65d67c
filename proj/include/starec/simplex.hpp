#pragma once

#include <chrono>
#include <cstdint>
#include <vector>

#include <gmpxx.h>

namespace starec {

using Rational = mpq_class;

enum class Sense { Le, Eq, Ge };

/// minimize cost . x  subject to  rows[i] . x (sense[i]) rhs[i],  x >= 0.
struct LinearProgram {
  std::size_t variable_count = 0;
  std::vector<std::vector<Rational>> rows;
  std::vector<Sense> senses;
  std::vector<Rational> rhs;
  std::vector<Rational> cost;

  void add_row(std::vector<Rational> coefficients, Sense sense, Rational value);
  /// Exact check of x >= 0 and every row.
  bool feasible(const std::vector<Rational>& x) const;
  Rational objective(const std::vector<Rational>& x) const;
};

enum class LpStatus { Optimal, Infeasible, Unbounded };

struct LpResult {
  LpStatus status = LpStatus::Infeasible;
  Rational objective;
  std::vector<Rational> x;
  std::uint64_t pivots = 0;
};

/// Two-phase tableau simplex over exact rationals. Dantzig pricing, falling
/// back to Bland's rule after a run of degenerate pivots.
LpResult simplex_minimize(const LinearProgram& lp);

struct IntegerResult {
  LpStatus status = LpStatus::Infeasible;
  Rational objective;
  std::vector<Rational> x;  // integral when Optimal
  std::uint64_t nodes = 0;
  /// False when the deadline cut the search short; an Optimal status then
  /// only reports the best integral point found.
  bool complete = true;
};

/// Depth-first branch and bound: branches on the lowest-index fractional
/// variable, floor side first, pruning by the rounded-up LP bound when the
/// cost vector is integral.
IntegerResult branch_and_bound_minimize(
    const LinearProgram& lp,
    std::chrono::steady_clock::time_point deadline = std::chrono::steady_clock::time_point::max());

}  // namespace starec
