#pragma once

#include <cstddef>
#include <vector>

#include "eptas/exactlp.hpp"

namespace eptas {

struct MilpModel {
  LinearProgram base;
  std::vector<bool> integral;  // per variable; flagged ones need finite bounds
};

enum class MilpStatus { Feasible, Infeasible };

struct MilpResult {
  MilpStatus status = MilpStatus::Infeasible;
  std::vector<Rational> point;  // Feasible only; integral on flagged entries
  std::size_t nodes = 0;        // LP relaxations solved
};

inline constexpr std::size_t kDefaultNodeBudget = 1'000'000;

/// Depth-first branch-and-bound for feasibility. Branches on the most
/// fractional flagged variable (lowest index on ties), exploring the floor
/// child first. Returns the first integral leaf.
///
/// Throws NodeLimitExceeded once more than `node_budget` relaxations would be
/// solved, std::invalid_argument if a flagged variable lacks finite bounds.
MilpResult solve_milp(const MilpModel& model, std::size_t node_budget = kDefaultNodeBudget);

}  // namespace eptas
