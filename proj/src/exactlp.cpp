#include "eptas/exactlp.hpp"

#include <stdexcept>

#include "eptas/errors.hpp"

namespace eptas {

std::size_t LinearProgram::add_variable(Rational lo, std::optional<Rational> up, Rational cost) {
  lower.push_back(std::move(lo));
  upper.push_back(std::move(up));
  objective.push_back(std::move(cost));
  for (auto& c : constraints) c.coefficients.emplace_back(0);
  return lower.size() - 1;
}

void LinearProgram::add_constraint(std::vector<Rational> coefficients, Relation relation,
                                   Rational rhs) {
  if (coefficients.size() > num_variables()) {
    throw std::invalid_argument("constraint has more coefficients than variables");
  }
  coefficients.resize(num_variables(), Rational(0));
  constraints.push_back({std::move(coefficients), relation, std::move(rhs)});
}

namespace {

void check_well_formed(const LinearProgram& lp) {
  const std::size_t n = lp.num_variables();
  if (lp.upper.size() != n || lp.objective.size() != n) {
    throw std::invalid_argument("bound/objective vectors disagree with variable count");
  }
  for (const auto& c : lp.constraints) {
    if (c.coefficients.size() != n) {
      throw std::invalid_argument("constraint coefficient vector has wrong length");
    }
  }
}

bool satisfies(const Rational& lhs, Relation rel, const Rational& rhs) {
  switch (rel) {
    case Relation::LessEqual: return lhs <= rhs;
    case Relation::GreaterEqual: return lhs >= rhs;
    case Relation::Equal: return lhs == rhs;
  }
  return false;
}

struct Row {
  std::vector<Rational> coefficients;  // over tableau structural columns
  Relation relation;
  Rational rhs;
};

// Dense simplex tableau in standard form: rows * x = rhs, x >= 0, with a
// basic variable per row. The last entry of every row holds its rhs.
class Tableau {
 public:
  Tableau(const std::vector<Row>& rows, std::size_t structural) : structural_(structural) {
    const std::size_t m = rows.size();
    sign_.assign(m, 1);
    std::size_t slacks = 0, artificials = 0;
    std::vector<Relation> rel(m);
    for (std::size_t i = 0; i < m; ++i) {
      rel[i] = rows[i].relation;
      if (sgn(rows[i].rhs) < 0) {
        sign_[i] = -1;
        if (rel[i] == Relation::LessEqual) rel[i] = Relation::GreaterEqual;
        else if (rel[i] == Relation::GreaterEqual) rel[i] = Relation::LessEqual;
      }
      if (rel[i] != Relation::Equal) ++slacks;
      if (rel[i] != Relation::LessEqual) ++artificials;
    }
    first_artificial_ = structural_ + slacks;
    cols_ = first_artificial_ + artificials;
    rows_.assign(m, std::vector<Rational>(cols_ + 1, Rational(0)));
    basis_.assign(m, 0);
    unit_col_.assign(m, 0);

    std::size_t next_slack = structural_, next_art = first_artificial_;
    for (std::size_t i = 0; i < m; ++i) {
      auto& r = rows_[i];
      for (std::size_t k = 0; k < structural_; ++k) {
        if (sgn(rows[i].coefficients[k]) != 0) {
          r[k] = sign_[i] < 0 ? Rational(-rows[i].coefficients[k]) : rows[i].coefficients[k];
        }
      }
      r[cols_] = sign_[i] < 0 ? Rational(-rows[i].rhs) : rows[i].rhs;
      if (rel[i] == Relation::LessEqual) {
        r[next_slack] = 1;
        basis_[i] = unit_col_[i] = next_slack++;
      } else {
        if (rel[i] == Relation::GreaterEqual) r[next_slack++] = -1;
        r[next_art] = 1;
        basis_[i] = unit_col_[i] = next_art++;
      }
    }
  }

  [[nodiscard]] std::size_t num_rows() const { return rows_.size(); }
  [[nodiscard]] bool is_artificial(std::size_t col) const { return col >= first_artificial_; }

  /// Minimizes sum of artificials; returns the optimum.
  Rational phase_one() {
    reduced_.assign(cols_, Rational(0));
    objective_ = 0;
    for (std::size_t j = first_artificial_; j < cols_; ++j) reduced_[j] = 1;
    for (std::size_t i = 0; i < rows_.size(); ++i) {
      if (is_artificial(basis_[i])) {
        for (std::size_t j = 0; j < cols_; ++j) {
          if (sgn(rows_[i][j]) != 0) reduced_[j] -= rows_[i][j];
        }
        objective_ += rows_[i][cols_];
      }
    }
    iterate(cols_);
    return objective_;
  }

  /// Dual multipliers of the phase-one optimum mapped back to the caller's
  /// row signs.
  [[nodiscard]] std::vector<Rational> phase_one_duals() const {
    std::vector<Rational> y(rows_.size());
    for (std::size_t i = 0; i < rows_.size(); ++i) {
      const Rational cost = is_artificial(unit_col_[i]) ? Rational(1) : Rational(0);
      y[i] = cost - reduced_[unit_col_[i]];
      if (sign_[i] < 0) y[i] = -y[i];
    }
    return y;
  }

  void drive_out_artificials() {
    for (std::size_t i = 0; i < rows_.size(); ++i) {
      if (!is_artificial(basis_[i])) continue;
      for (std::size_t j = 0; j < first_artificial_; ++j) {
        if (sgn(rows_[i][j]) != 0) {
          pivot(i, j);
          break;
        }
      }
      // Otherwise the row is redundant; the artificial stays basic at zero.
    }
  }

  /// Returns false when unbounded.
  bool phase_two(const std::vector<Rational>& structural_cost) {
    reduced_.assign(cols_, Rational(0));
    objective_ = 0;
    for (std::size_t k = 0; k < structural_; ++k) reduced_[k] = structural_cost[k];
    for (std::size_t i = 0; i < rows_.size(); ++i) {
      const std::size_t b = basis_[i];
      if (b >= structural_ || sgn(structural_cost[b]) == 0) continue;
      const Rational cb = structural_cost[b];
      for (std::size_t j = 0; j < cols_; ++j) {
        if (sgn(rows_[i][j]) != 0) reduced_[j] -= cb * rows_[i][j];
      }
      objective_ += cb * rows_[i][cols_];
    }
    return iterate(first_artificial_);
  }

  [[nodiscard]] std::vector<Rational> structural_values() const {
    std::vector<Rational> x(structural_, Rational(0));
    for (std::size_t i = 0; i < rows_.size(); ++i) {
      if (basis_[i] < structural_) x[basis_[i]] = rows_[i][cols_];
    }
    return x;
  }

 private:
  // Bland's rule over columns [0, allowed). Returns false on unboundedness.
  bool iterate(std::size_t allowed) {
    for (;;) {
      std::size_t enter = allowed;
      for (std::size_t j = 0; j < allowed; ++j) {
        if (sgn(reduced_[j]) < 0) {
          enter = j;
          break;
        }
      }
      if (enter == allowed) return true;

      std::size_t leave = rows_.size();
      Rational best_ratio;
      for (std::size_t i = 0; i < rows_.size(); ++i) {
        if (sgn(rows_[i][enter]) <= 0) continue;
        Rational ratio = rows_[i][cols_] / rows_[i][enter];
        if (leave == rows_.size() || ratio < best_ratio ||
            (ratio == best_ratio && basis_[i] < basis_[leave])) {
          leave = i;
          best_ratio = std::move(ratio);
        }
      }
      if (leave == rows_.size()) return false;
      pivot(leave, enter);
    }
  }

  void pivot(std::size_t r, std::size_t e) {
    auto& prow = rows_[r];
    if (prow[e] != 1) {
      const Rational inv = 1 / prow[e];
      for (auto& a : prow) {
        if (sgn(a) != 0) a *= inv;
      }
    }
    std::vector<std::size_t> support;
    for (std::size_t j = 0; j <= cols_; ++j) {
      if (sgn(prow[j]) != 0) support.push_back(j);
    }
    Rational f;
    for (std::size_t i = 0; i < rows_.size(); ++i) {
      if (i == r || sgn(rows_[i][e]) == 0) continue;
      f = rows_[i][e];
      auto& row = rows_[i];
      for (std::size_t j : support) row[j] -= f * prow[j];
    }
    if (sgn(reduced_[e]) != 0) {
      f = reduced_[e];
      for (std::size_t j : support) {
        if (j < cols_) reduced_[j] -= f * prow[j];
      }
      objective_ += f * prow[cols_];
    }
    basis_[r] = e;
  }

  std::size_t structural_;
  std::size_t first_artificial_ = 0;
  std::size_t cols_ = 0;
  std::vector<std::vector<Rational>> rows_;
  std::vector<std::size_t> basis_;
  std::vector<std::size_t> unit_col_;
  std::vector<int> sign_;
  std::vector<Rational> reduced_;
  Rational objective_;
};

struct Attempt {
  LpStatus status;
  std::vector<Rational> point;
  std::vector<Rational> farkas;
};

// Solves the LP with upper-bound rows only for variables in `bounded`.
Attempt solve_relaxed(const LinearProgram& lp, const std::vector<std::size_t>& free_vars,
                      const std::vector<bool>& bounded) {
  const std::size_t n = lp.num_variables();
  std::vector<Row> rows;
  rows.reserve(lp.constraints.size() + free_vars.size());
  for (const auto& c : lp.constraints) {
    Row row{std::vector<Rational>(free_vars.size()), c.relation, c.rhs};
    for (std::size_t v = 0; v < n; ++v) {
      if (sgn(c.coefficients[v]) != 0 && sgn(lp.lower[v]) != 0) {
        row.rhs -= c.coefficients[v] * lp.lower[v];
      }
    }
    for (std::size_t k = 0; k < free_vars.size(); ++k) row.coefficients[k] = c.coefficients[free_vars[k]];
    rows.push_back(std::move(row));
  }
  for (std::size_t k = 0; k < free_vars.size(); ++k) {
    const std::size_t v = free_vars[k];
    if (!bounded[v]) continue;
    Row row{std::vector<Rational>(free_vars.size()), Relation::LessEqual, *lp.upper[v] - lp.lower[v]};
    row.coefficients[k] = 1;
    rows.push_back(std::move(row));
  }

  Tableau tab(rows, free_vars.size());
  Attempt out;
  if (sgn(tab.phase_one()) > 0) {
    auto y = tab.phase_one_duals();
    y.resize(lp.constraints.size());
    out.status = LpStatus::Infeasible;
    out.farkas = std::move(y);
    return out;
  }
  tab.drive_out_artificials();
  if (lp.sense == Sense::Minimize) {
    std::vector<Rational> cost(free_vars.size());
    for (std::size_t k = 0; k < free_vars.size(); ++k) cost[k] = lp.objective[free_vars[k]];
    if (!tab.phase_two(cost)) {
      out.status = LpStatus::Unbounded;
      return out;
    }
  }
  const auto shifted = tab.structural_values();
  out.status = LpStatus::Optimal;
  out.point = lp.lower;
  for (std::size_t k = 0; k < free_vars.size(); ++k) out.point[free_vars[k]] += shifted[k];
  return out;
}

}  // namespace

LpResult solve_lp(const LinearProgram& lp) {
  check_well_formed(lp);
  const std::size_t n = lp.num_variables();
  LpResult result;

  std::vector<std::size_t> free_vars;
  for (std::size_t v = 0; v < n; ++v) {
    if (lp.upper[v]) {
      if (*lp.upper[v] < lp.lower[v]) {
        result.status = LpStatus::Infeasible;
        return result;
      }
      if (*lp.upper[v] == lp.lower[v]) continue;  // fixed: substituted out
    }
    free_vars.push_back(v);
  }

  std::vector<bool> bounded(n, false);
  for (;;) {
    Attempt a = solve_relaxed(lp, free_vars, bounded);
    if (a.status == LpStatus::Infeasible) {
      result.status = LpStatus::Infeasible;
      result.farkas = std::move(a.farkas);
      return result;
    }
    bool added = false;
    if (a.status == LpStatus::Unbounded) {
      for (std::size_t v : free_vars) {
        if (lp.upper[v] && !bounded[v]) bounded[v] = added = true;
      }
      if (!added) {
        result.status = LpStatus::Unbounded;
        return result;
      }
      continue;
    }
    for (std::size_t v : free_vars) {
      if (lp.upper[v] && !bounded[v] && a.point[v] > *lp.upper[v]) bounded[v] = added = true;
    }
    if (added) continue;

    result.status = LpStatus::Optimal;
    result.value = 0;
    if (lp.sense == Sense::Minimize) {
      for (std::size_t v = 0; v < n; ++v) {
        if (sgn(lp.objective[v]) != 0) result.value += lp.objective[v] * a.point[v];
      }
    }
    result.point = std::move(a.point);
    return result;
  }
}

bool is_feasible_point(const LinearProgram& lp, const std::vector<Rational>& point) {
  if (point.size() != lp.num_variables()) return false;
  for (std::size_t v = 0; v < point.size(); ++v) {
    if (point[v] < lp.lower[v]) return false;
    if (lp.upper[v] && point[v] > *lp.upper[v]) return false;
  }
  for (const auto& c : lp.constraints) {
    Rational lhs(0);
    for (std::size_t v = 0; v < point.size(); ++v) {
      if (sgn(c.coefficients[v]) != 0) lhs += c.coefficients[v] * point[v];
    }
    if (!satisfies(lhs, c.relation, c.rhs)) return false;
  }
  return true;
}

bool verify_farkas(const LinearProgram& lp, const std::vector<Rational>& multipliers) {
  for (std::size_t v = 0; v < lp.num_variables(); ++v) {
    if (lp.upper[v] && *lp.upper[v] < lp.lower[v]) return true;  // empty box
  }
  if (multipliers.size() != lp.constraints.size()) return false;

  std::vector<Rational> g(lp.num_variables(), Rational(0));
  Rational yb(0);
  for (std::size_t i = 0; i < lp.constraints.size(); ++i) {
    const auto& c = lp.constraints[i];
    const Rational& y = multipliers[i];
    if (c.relation == Relation::LessEqual && sgn(y) > 0) return false;
    if (c.relation == Relation::GreaterEqual && sgn(y) < 0) return false;
    if (sgn(y) == 0) continue;
    for (std::size_t v = 0; v < g.size(); ++v) {
      if (sgn(c.coefficients[v]) != 0) g[v] += y * c.coefficients[v];
    }
    yb += y * c.rhs;
  }
  // Every feasible x has g.x >= y.b; show the box cannot reach it.
  Rational box_max(0);
  for (std::size_t v = 0; v < g.size(); ++v) {
    if (sgn(g[v]) > 0) {
      if (!lp.upper[v]) return false;
      box_max += g[v] * *lp.upper[v];
    } else if (sgn(g[v]) < 0) {
      box_max += g[v] * lp.lower[v];
    }
  }
  return box_max < yb;
}

}  // namespace eptas
