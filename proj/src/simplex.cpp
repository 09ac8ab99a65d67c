#include "starec/simplex.hpp"

#include <optional>

#include "starec/error.hpp"

namespace starec {

void LinearProgram::add_row(std::vector<Rational> coefficients, Sense sense, Rational value) {
  if (coefficients.size() != variable_count) throw Error(ErrorCode::InvalidArgument, "row width mismatch");
  rows.push_back(std::move(coefficients));
  senses.push_back(sense);
  rhs.push_back(std::move(value));
}

bool LinearProgram::feasible(const std::vector<Rational>& x) const {
  if (x.size() != variable_count) return false;
  for (const auto& v : x) {
    if (sgn(v) < 0) return false;
  }
  for (std::size_t i = 0; i < rows.size(); ++i) {
    Rational lhs = 0;
    for (std::size_t j = 0; j < variable_count; ++j) {
      if (sgn(rows[i][j]) != 0) lhs += rows[i][j] * x[j];
    }
    const int c = cmp(lhs, rhs[i]);
    if ((senses[i] == Sense::Le && c > 0) || (senses[i] == Sense::Ge && c < 0) || (senses[i] == Sense::Eq && c != 0)) {
      return false;
    }
  }
  return true;
}

Rational LinearProgram::objective(const std::vector<Rational>& x) const {
  Rational total = 0;
  for (std::size_t j = 0; j < variable_count; ++j) total += cost[j] * x[j];
  return total;
}

namespace {

class Tableau {
 public:
  explicit Tableau(const LinearProgram& lp) : n_(lp.variable_count) {
    const std::size_t m = lp.rows.size();
    std::vector<Sense> sense(lp.senses);
    std::size_t slacks = 0;
    std::size_t artificials = 0;
    std::vector<bool> flip(m, false);
    for (std::size_t i = 0; i < m; ++i) {
      if (sgn(lp.rhs[i]) < 0) {
        flip[i] = true;
        if (sense[i] == Sense::Le) sense[i] = Sense::Ge;
        else if (sense[i] == Sense::Ge) sense[i] = Sense::Le;
      }
      if (sense[i] != Sense::Eq) ++slacks;
      if (sense[i] != Sense::Le) ++artificials;
    }
    first_artificial_ = n_ + slacks;
    width_ = first_artificial_ + artificials;
    rows_.assign(m, std::vector<Rational>(width_ + 1));
    basis_.assign(m, 0);
    std::size_t slack = n_;
    std::size_t art = first_artificial_;
    for (std::size_t i = 0; i < m; ++i) {
      auto& row = rows_[i];
      for (std::size_t j = 0; j < n_; ++j) row[j] = flip[i] ? Rational(-lp.rows[i][j]) : lp.rows[i][j];
      row[width_] = flip[i] ? Rational(-lp.rhs[i]) : lp.rhs[i];
      if (sense[i] == Sense::Le) {
        row[slack] = 1;
        basis_[i] = slack++;
      } else {
        if (sense[i] == Sense::Ge) row[slack++] = -1;
        row[art] = 1;
        basis_[i] = art++;
      }
    }
  }

  LpStatus solve(const std::vector<Rational>& cost, std::uint64_t& pivots) {
    // Phase 1: minimize the sum of artificials.
    std::vector<Rational> phase1(width_);
    for (std::size_t j = first_artificial_; j < width_; ++j) phase1[j] = 1;
    set_objective(phase1);
    if (run(width_, pivots) != LpStatus::Optimal) throw Error(ErrorCode::Infeasible, "phase 1 unbounded");
    if (sgn(objective_value()) != 0) return LpStatus::Infeasible;
    drive_out_artificials(pivots);

    std::vector<Rational> phase2(width_);
    for (std::size_t j = 0; j < n_; ++j) phase2[j] = cost[j];
    set_objective(phase2);
    return run(first_artificial_, pivots);
  }

  std::vector<Rational> solution() const {
    std::vector<Rational> x(n_);
    for (std::size_t i = 0; i < rows_.size(); ++i) {
      if (basis_[i] < n_) x[basis_[i]] = rows_[i][width_];
    }
    return x;
  }

 private:
  void set_objective(const std::vector<Rational>& c) {
    reduced_.assign(width_ + 1, Rational(0));
    for (std::size_t j = 0; j < width_; ++j) reduced_[j] = c[j];
    for (std::size_t i = 0; i < rows_.size(); ++i) {
      const Rational& cb = c[basis_[i]];
      if (sgn(cb) == 0) continue;
      for (std::size_t j = 0; j <= width_; ++j) {
        if (sgn(rows_[i][j]) != 0) reduced_[j] -= cb * rows_[i][j];
      }
    }
  }

  // Current objective value; reduced_[width_] holds its negation.
  Rational objective_value() const { return -reduced_[width_]; }

  void pivot(std::size_t r, std::size_t c) {
    auto& prow = rows_[r];
    const Rational p = prow[c];
    for (auto& v : prow) {
      if (sgn(v) != 0) v /= p;
    }
    auto eliminate = [&](std::vector<Rational>& row) {
      const Rational f = row[c];
      if (sgn(f) == 0) return;
      for (std::size_t j = 0; j <= width_; ++j) {
        if (sgn(prow[j]) != 0) row[j] -= f * prow[j];
      }
    };
    for (std::size_t i = 0; i < rows_.size(); ++i) {
      if (i != r) eliminate(rows_[i]);
    }
    eliminate(reduced_);
    basis_[r] = c;
  }

  // Dantzig pricing; after kDegenerateLimit consecutive degenerate pivots the
  // phase switches to Bland's rule for good, which rules out cycling.
  LpStatus run(std::size_t limit, std::uint64_t& pivots) {
    constexpr int kDegenerateLimit = 50;
    int degenerate = 0;
    bool bland = false;
    while (true) {
      std::size_t enter = limit;
      for (std::size_t j = 0; j < limit; ++j) {
        if (sgn(reduced_[j]) >= 0) continue;
        if (enter == limit || (!bland && reduced_[j] < reduced_[enter])) enter = j;
        if (bland) break;
      }
      if (enter == limit) return LpStatus::Optimal;
      std::optional<std::size_t> leave;
      Rational best;
      for (std::size_t i = 0; i < rows_.size(); ++i) {
        if (sgn(rows_[i][enter]) <= 0) continue;
        Rational ratio = rows_[i][width_] / rows_[i][enter];
        if (!leave || ratio < best || (ratio == best && basis_[i] < basis_[*leave])) {
          leave = i;
          best = std::move(ratio);
        }
      }
      if (!leave) return LpStatus::Unbounded;
      degenerate = sgn(best) == 0 ? degenerate + 1 : 0;
      if (degenerate >= kDegenerateLimit) bland = true;
      pivot(*leave, enter);
      ++pivots;
    }
  }

  void drive_out_artificials(std::uint64_t& pivots) {
    for (std::size_t i = 0; i < rows_.size();) {
      if (basis_[i] < first_artificial_) {
        ++i;
        continue;
      }
      std::size_t col = first_artificial_;
      for (std::size_t j = 0; j < first_artificial_; ++j) {
        if (sgn(rows_[i][j]) != 0) {
          col = j;
          break;
        }
      }
      if (col < first_artificial_) {
        pivot(i, col);
        ++pivots;
        ++i;
      } else {
        // Redundant equality.
        rows_.erase(rows_.begin() + static_cast<std::ptrdiff_t>(i));
        basis_.erase(basis_.begin() + static_cast<std::ptrdiff_t>(i));
      }
    }
  }

  std::size_t n_;
  std::size_t first_artificial_ = 0;
  std::size_t width_ = 0;
  std::vector<std::vector<Rational>> rows_;
  std::vector<std::size_t> basis_;
  std::vector<Rational> reduced_;
};

bool is_integer(const Rational& v) { return v.get_den() == 1; }

Rational floor_of(const Rational& v) {
  mpz_class q;
  mpz_fdiv_q(q.get_mpz_t(), v.get_num_mpz_t(), v.get_den_mpz_t());
  return Rational(q);
}

Rational ceil_of(const Rational& v) {
  mpz_class q;
  mpz_cdiv_q(q.get_mpz_t(), v.get_num_mpz_t(), v.get_den_mpz_t());
  return Rational(q);
}

struct BranchState {
  bool integral_cost = true;
  std::optional<Rational> incumbent;
  std::vector<Rational> best_x;
  std::uint64_t nodes = 0;
  std::chrono::steady_clock::time_point deadline;
  bool aborted = false;
};

void branch(LinearProgram& lp, BranchState& state) {
  if (state.aborted || std::chrono::steady_clock::now() >= state.deadline) {
    state.aborted = true;
    return;
  }
  ++state.nodes;
  const LpResult relax = simplex_minimize(lp);
  if (relax.status == LpStatus::Infeasible) return;
  if (relax.status == LpStatus::Unbounded) throw Error(ErrorCode::Infeasible, "integer program is unbounded");
  const Rational bound = state.integral_cost ? ceil_of(relax.objective) : relax.objective;
  if (state.incumbent && bound >= *state.incumbent) return;

  std::size_t j = 0;
  while (j < relax.x.size() && is_integer(relax.x[j])) ++j;
  if (j == relax.x.size()) {
    state.incumbent = relax.objective;
    state.best_x = relax.x;
    return;
  }
  std::vector<Rational> unit(lp.variable_count);
  unit[j] = 1;
  lp.add_row(unit, Sense::Le, floor_of(relax.x[j]));
  branch(lp, state);
  lp.senses.back() = Sense::Ge;
  lp.rhs.back() = ceil_of(relax.x[j]);
  branch(lp, state);
  lp.rows.pop_back();
  lp.senses.pop_back();
  lp.rhs.pop_back();
}

}  // namespace

LpResult simplex_minimize(const LinearProgram& lp) {
  if (lp.cost.size() != lp.variable_count || lp.rows.size() != lp.senses.size() || lp.rows.size() != lp.rhs.size()) {
    throw Error(ErrorCode::InvalidArgument, "malformed linear program");
  }
  LpResult result;
  Tableau t(lp);
  result.status = t.solve(lp.cost, result.pivots);
  if (result.status != LpStatus::Optimal) return result;
  result.x = t.solution();
  result.objective = lp.objective(result.x);
  if (!lp.feasible(result.x)) throw Error(ErrorCode::InternalCaseExhaustion, "simplex returned an infeasible point");
  return result;
}

IntegerResult branch_and_bound_minimize(const LinearProgram& lp, std::chrono::steady_clock::time_point deadline) {
  BranchState state;
  state.deadline = deadline;
  for (const auto& c : lp.cost) state.integral_cost = state.integral_cost && is_integer(c);
  LinearProgram work = lp;
  branch(work, state);
  IntegerResult result;
  result.nodes = state.nodes;
  result.complete = !state.aborted;
  if (!state.incumbent) return result;
  result.status = LpStatus::Optimal;
  result.objective = *state.incumbent;
  result.x = state.best_x;
  if (!lp.feasible(result.x)) throw Error(ErrorCode::InternalCaseExhaustion, "branch and bound returned an infeasible point");
  return result;
}

}  // namespace starec
