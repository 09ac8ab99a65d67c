#include <gtest/gtest.h>

#include "starec/bounds.hpp"
#include "starec/error.hpp"
#include "starec/simplex.hpp"

using namespace starec;

TEST(Simplex, SmallLp) {
  // min x + y  s.t.  x + 2y >= 4, 3x + y >= 6
  LinearProgram lp;
  lp.variable_count = 2;
  lp.cost = {1, 1};
  lp.add_row({1, 2}, Sense::Ge, 4);
  lp.add_row({3, 1}, Sense::Ge, 6);
  const LpResult r = simplex_minimize(lp);
  ASSERT_EQ(r.status, LpStatus::Optimal);
  EXPECT_EQ(r.objective, Rational(14, 5));
  EXPECT_TRUE(lp.feasible(r.x));
}

TEST(Simplex, InfeasibleAndUnbounded) {
  LinearProgram lp;
  lp.variable_count = 1;
  lp.cost = {1};
  lp.add_row({1}, Sense::Le, 1);
  lp.add_row({1}, Sense::Ge, 2);
  EXPECT_EQ(simplex_minimize(lp).status, LpStatus::Infeasible);
  LinearProgram ub;
  ub.variable_count = 1;
  ub.cost = {-1};
  ub.add_row({1}, Sense::Ge, 0);
  EXPECT_EQ(simplex_minimize(ub).status, LpStatus::Unbounded);
}

TEST(Simplex, BranchAndBound) {
  // min -x - y  s.t. 2x + 2y <= 3: LP -3/2, integer -1
  LinearProgram lp;
  lp.variable_count = 2;
  lp.cost = {-1, -1};
  lp.add_row({2, 2}, Sense::Le, 3);
  const IntegerResult r = branch_and_bound_minimize(lp);
  ASSERT_EQ(r.status, LpStatus::Optimal);
  EXPECT_EQ(r.objective, -1);
  EXPECT_TRUE(r.complete);
}

TEST(Program, Shape) {
  const ColorSetProgram p = build_program(4, 6);
  EXPECT_EQ(p.variable_count(), 15u);
  EXPECT_EQ(p.lp.rows.size(), 4u + 6u);
  EXPECT_EQ(p.variable_name(0), "1000");
  EXPECT_EQ(p.variable_name(14), "1111");
  EXPECT_THROW(build_program(11, 4), Error);
  EXPECT_THROW(build_program(1, 4), Error);
}

TEST(Program, ReferenceSolutionFeasible) {
  for (std::int32_t d : {6, 12, 18, 24, 60}) {
    const ColorSetProgram p = build_program(4, d);
    std::vector<Rational> x(p.variable_count(), 0);
    for (const char* s : {"0011", "0101", "0111", "0110", "1001", "1010", "1011", "1100", "1101", "1110"}) {
      for (std::size_t j = 0; j < x.size(); ++j) {
        if (p.variable_name(j) == s) x[j] = Rational(d) / 6;
      }
    }
    EXPECT_TRUE(p.lp.feasible(x)) << d;
    EXPECT_EQ(p.lp.objective(x), Rational(10 * d) / 6);
  }
}

TEST(Program, LpOptima) {
  struct Row {
    int r;
    Rational per_d;
  };
  for (const Row& row : {Row{4, Rational(10) / 6}, Row{5, Rational(10) / 6}, Row{6, Rational(7) / 4},
                         Row{7, Rational(7) / 4}, Row{8, Rational(18) / 10}}) {
    for (int d : {row.r, row.r + 1, 2 * row.r, 24}) {
      // odd d: the half right-hand side reproduces the per-d rate
      const IntersectionRhs rhs = d % 2 ? IntersectionRhs::Half : IntersectionRhs::Floor;
      const LpBound b = solve_lp(build_program(row.r, d, rhs));
      EXPECT_EQ(b.objective, row.per_d * d) << row.r << "," << d;
    }
  }
}

TEST(Program, IlpTableOne) {
  const std::vector<std::pair<int, int>> want{{4, 7}, {5, 10}, {6, 10}, {7, 13}, {8, 14},
                                              {9, 16}, {10, 17}, {11, 20}, {12, 20}};
  for (auto [d, v] : want) {
    const auto r = solve_ilp(build_program(4, d));
    ASSERT_TRUE(r);
    EXPECT_EQ(r->objective, v) << d;
  }
}

TEST(Program, IlpBudget) {
  EXPECT_FALSE(solve_ilp(build_program(8, 8), std::chrono::milliseconds(1)));
}

TEST(Program, DumpMentionsEveryVariable) {
  const ColorSetProgram p = build_program(3, 4);
  const std::string s = dump_model(p);
  for (std::size_t j = 0; j < p.variable_count(); ++j) {
    EXPECT_NE(s.find("x" + p.variable_name(j)), std::string::npos);
  }
}

TEST(Program, FormatRational) {
  EXPECT_EQ(format_rational(Rational(10)), "10");
  EXPECT_EQ(format_rational(Rational(70, 6)), "35/3");
}
