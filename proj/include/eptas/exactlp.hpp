#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "eptas/rational.hpp"

namespace eptas {

enum class Relation { LessEqual, Equal, GreaterEqual };
enum class Sense { Minimize, Feasibility };

struct Constraint {
  std::vector<Rational> coefficients;  // one per variable
  Relation relation = Relation::LessEqual;
  Rational rhs;
};

/// Dense LP over exact rationals with per-variable bounds lower <= x <= upper.
struct LinearProgram {
  std::vector<Rational> lower;
  std::vector<std::optional<Rational>> upper;
  std::vector<Rational> objective;
  Sense sense = Sense::Feasibility;
  std::vector<Constraint> constraints;

  [[nodiscard]] std::size_t num_variables() const { return lower.size(); }

  /// Returns the new variable's index. Existing constraints are widened.
  std::size_t add_variable(Rational lo = Rational(0), std::optional<Rational> up = std::nullopt,
                           Rational cost = Rational(0));
  /// Coefficients are padded with zeros up to num_variables().
  void add_constraint(std::vector<Rational> coefficients, Relation relation, Rational rhs);
};

enum class LpStatus { Optimal, Infeasible, Unbounded };

struct LpResult {
  LpStatus status = LpStatus::Infeasible;
  std::vector<Rational> point;  // Optimal only
  Rational value;               // Optimal only
  /// Infeasible only: one multiplier per constraint (<= 0 on `<=` rows, >= 0
  /// on `>=` rows, free on equalities). See verify_farkas. Empty when the
  /// variable bounds alone are contradictory.
  std::vector<Rational> farkas;
};

/// Two-phase primal simplex over exact rationals with Bland's rule. Upper
/// bounds become explicit rows lazily, only once a relaxed solution violates
/// them, so bounds implied by other constraints cost nothing.
LpResult solve_lp(const LinearProgram& lp);

/// True iff every constraint holds exactly and lower <= x <= upper.
bool is_feasible_point(const LinearProgram& lp, const std::vector<Rational>& point);

/// Checks that the multipliers y prove infeasibility: with g = A^T y, the
/// maximum of g.x over the bound box is strictly below y.b, while every
/// feasible x would satisfy g.x >= y.b.
bool verify_farkas(const LinearProgram& lp, const std::vector<Rational>& multipliers);

}  // namespace eptas
