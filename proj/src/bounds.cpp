#include "starec/bounds.hpp"

#include <sstream>

#include "starec/error.hpp"

namespace starec {

std::string ColorSetProgram::variable_name(std::size_t variable) const {
  const auto s = subset(variable);
  std::string name(static_cast<std::size_t>(r), '0');
  for (std::int32_t i = 0; i < r; ++i) {
    if (s & (1U << i)) name[static_cast<std::size_t>(i)] = '1';
  }
  return name;
}

ColorSetProgram build_program(std::int32_t r, std::int32_t d, IntersectionRhs rhs) {
  if (r > 10) throw Error(ErrorCode::RTooLarge, "r = " + std::to_string(r) + " exceeds 10");
  if (r < 2 || d < 1) throw Error(ErrorCode::InvalidArgument, "need r >= 2 and d >= 1");
  ColorSetProgram p;
  p.r = r;
  p.d = d;
  p.rhs_mode = rhs;
  const std::size_t n = (std::size_t{1} << r) - 1;
  p.lp.variable_count = n;
  p.lp.cost.assign(n, Rational(1));
  for (std::int32_t i = 0; i < r; ++i) {
    std::vector<Rational> row(n);
    for (std::size_t v = 0; v < n; ++v) {
      if (p.subset(v) & (1U << i)) row[v] = 1;
    }
    p.lp.add_row(std::move(row), Sense::Eq, Rational(d));
  }
  const Rational cap = rhs == IntersectionRhs::Half ? Rational(d, 2) : Rational(d / 2);
  for (std::int32_t i = 0; i < r; ++i) {
    for (std::int32_t j = i + 1; j < r; ++j) {
      const std::uint32_t both = (1U << i) | (1U << j);
      std::vector<Rational> row(n);
      for (std::size_t v = 0; v < n; ++v) {
        if ((p.subset(v) & both) == both) row[v] = 1;
      }
      p.lp.add_row(std::move(row), Sense::Le, cap);
    }
  }
  for (auto& q : p.lp.rhs) q.canonicalize();
  return p;
}

LpBound solve_lp(const ColorSetProgram& p) {
  const LpResult res = simplex_minimize(p.lp);
  if (res.status != LpStatus::Optimal) throw Error(ErrorCode::Infeasible, "color-set LP has no optimum");
  return {res.objective, res.x};
}

std::optional<IlpBound> solve_ilp(const ColorSetProgram& p, std::optional<std::chrono::milliseconds> budget) {
  auto deadline = std::chrono::steady_clock::time_point::max();
  if (budget) deadline = std::chrono::steady_clock::now() + *budget;
  const IntegerResult res = branch_and_bound_minimize(p.lp, deadline);
  if (!res.complete) return std::nullopt;
  if (res.status != LpStatus::Optimal) throw Error(ErrorCode::Infeasible, "color-set ILP has no optimum");
  IlpBound out;
  out.objective = res.objective.get_num().get_si();
  out.nodes = res.nodes;
  for (const auto& v : res.x) out.x.push_back(v.get_num().get_si());
  return out;
}

std::int64_t lower_bound_chi_star(std::int32_t r, std::int32_t d, BoundMethod method, IntersectionRhs rhs) {
  const ColorSetProgram p = build_program(r, d, rhs);
  if (method == BoundMethod::Ilp) return solve_ilp(p)->objective;
  const Rational obj = solve_lp(p).objective;
  mpz_class up;
  mpz_cdiv_q(up.get_mpz_t(), obj.get_num_mpz_t(), obj.get_den_mpz_t());
  return up.get_si();
}

std::string format_rational(const Rational& value) {
  Rational v = value;
  v.canonicalize();
  if (v.get_den() == 1) return v.get_num().get_str();
  return v.get_num().get_str() + "/" + v.get_den().get_str();
}

std::string dump_model(const ColorSetProgram& p) {
  std::ostringstream out;
  const auto& lp = p.lp;
  auto terms = [&](const std::vector<Rational>& row) {
    std::string s;
    for (std::size_t v = 0; v < lp.variable_count; ++v) {
      if (sgn(row[v]) == 0) continue;
      if (!s.empty()) s += " + ";
      s += "x" + p.variable_name(v);
    }
    return s;
  };
  out << "\\ color-set program, r = " << p.r << ", d = " << p.d << '\n';
  out << "minimize\n  " << terms(lp.cost) << '\n';
  out << "subject to\n";
  for (std::size_t i = 0; i < lp.rows.size(); ++i) {
    out << "  " << terms(lp.rows[i]) << (lp.senses[i] == Sense::Eq ? " = " : " <= ") << format_rational(lp.rhs[i])
        << '\n';
  }
  out << "bounds\n  all x >= 0\n";
  out << "general\n  all x integer\n";
  return out.str();
}

}  // namespace starec
