#pragma once

#include <chrono>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "starec/simplex.hpp"

namespace starec {

/// Right-hand side of the pairwise-intersection rows: d/2 or floor(d/2).
/// They differ only for odd d, and only for the LP.
enum class IntersectionRhs { Half, Floor };

/// Color-set model for K_{r,d}: x_S counts colors appearing at exactly the
/// X vertices in S. Variable j corresponds to the subset with bitmask j+1
/// (bit i set iff vertex i+1 is in S).
struct ColorSetProgram {
  std::int32_t r = 0;
  std::int32_t d = 0;
  IntersectionRhs rhs_mode = IntersectionRhs::Floor;
  /// min sum x_S; rows 0..r-1: sum_{S ∋ i} x_S = d; then one row per pair {i<j}:
  /// sum_{S ⊇ {i,j}} x_S <= rhs.
  LinearProgram lp;

  std::size_t variable_count() const { return lp.variable_count; }
  std::uint32_t subset(std::size_t variable) const { return static_cast<std::uint32_t>(variable + 1); }
  /// Binary string with vertex 1 as the leftmost digit, e.g. "0011".
  std::string variable_name(std::size_t variable) const;
};

/// Throws RTooLarge for r > 10 and InvalidArgument for r < 2 or d < 1.
ColorSetProgram build_program(std::int32_t r, std::int32_t d, IntersectionRhs rhs = IntersectionRhs::Floor);

struct LpBound {
  Rational objective;
  std::vector<Rational> x;
};

LpBound solve_lp(const ColorSetProgram& p);

struct IlpBound {
  std::int64_t objective = 0;
  std::vector<std::int64_t> x;
  std::uint64_t nodes = 0;
};

/// Exact ILP optimum, or nullopt if the budget runs out first.
std::optional<IlpBound> solve_ilp(const ColorSetProgram& p,
                                  std::optional<std::chrono::milliseconds> budget = std::nullopt);

enum class BoundMethod { Lp, Ilp };

/// A lower bound on the star chromatic index of K_{r,d}: the rounded-up LP
/// optimum or the ILP optimum (no time limit).
std::int64_t lower_bound_chi_star(std::int32_t r, std::int32_t d, BoundMethod method = BoundMethod::Lp,
                                  IntersectionRhs rhs = IntersectionRhs::Floor);

/// Plain-text listing of the program, one constraint per line.
std::string dump_model(const ColorSetProgram& p);

/// p/q in lowest terms, or just p when q = 1.
std::string format_rational(const Rational& v);

}  // namespace starec
