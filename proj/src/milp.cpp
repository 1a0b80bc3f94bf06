#include "eptas/milp.hpp"

#include <stdexcept>

#include "eptas/errors.hpp"

namespace eptas {

namespace {

struct Node {
  std::vector<Rational> lower;
  std::vector<std::optional<Rational>> upper;
};

// Index of the most fractional flagged entry, or npos when all are integral.
std::size_t branching_variable(const std::vector<bool>& integral, const std::vector<Rational>& x) {
  std::size_t best = std::vector<Rational>::size_type(-1);
  Rational best_distance(0);
  for (std::size_t v = 0; v < x.size(); ++v) {
    if (!integral[v] || is_integer(x[v])) continue;
    const Rational frac = x[v] - Rational(floor(x[v]));
    Rational distance = frac < Rational(1, 2) ? frac : Rational(1 - frac);
    if (distance > best_distance) {
      best = v;
      best_distance = std::move(distance);
    }
  }
  return best;
}

}  // namespace

MilpResult solve_milp(const MilpModel& model, std::size_t node_budget) {
  const LinearProgram& base = model.base;
  if (model.integral.size() != base.num_variables()) {
    throw std::invalid_argument("integral mask length differs from variable count");
  }
  for (std::size_t v = 0; v < base.num_variables(); ++v) {
    if (model.integral[v] && !base.upper[v]) {
      throw std::invalid_argument("integral variable " + std::to_string(v) + " has no upper bound");
    }
  }

  MilpResult result;
  LinearProgram lp = base;
  std::vector<Node> stack;
  stack.push_back({base.lower, base.upper});
  // Bounds of integral variables are tightened to integers up front.
  for (std::size_t v = 0; v < base.num_variables(); ++v) {
    if (!model.integral[v]) continue;
    stack.back().lower[v] = Rational(ceil(base.lower[v]));
    stack.back().upper[v] = Rational(floor(*base.upper[v]));
  }

  while (!stack.empty()) {
    Node node = std::move(stack.back());
    stack.pop_back();
    if (result.nodes >= node_budget) throw NodeLimitExceeded(node_budget);
    ++result.nodes;

    lp.lower = node.lower;
    lp.upper = node.upper;
    LpResult relax = solve_lp(lp);
    if (relax.status == LpStatus::Infeasible) continue;
    if (relax.status == LpStatus::Unbounded) {
      // Feasibility models have no objective; with an objective, an unbounded
      // relaxation still has feasible points, so fall back to feasibility.
      lp.sense = Sense::Feasibility;
      relax = solve_lp(lp);
      lp.sense = base.sense;
    }

    const std::size_t v = branching_variable(model.integral, relax.point);
    if (v == std::size_t(-1)) {
      result.status = MilpStatus::Feasible;
      result.point = std::move(relax.point);
      return result;
    }
    Node up = node;
    up.lower[v] = Rational(ceil(relax.point[v]));
    node.upper[v] = Rational(floor(relax.point[v]));
    stack.push_back(std::move(up));
    stack.push_back(std::move(node));  // floor child popped first
  }
  return result;
}

}  // namespace eptas
