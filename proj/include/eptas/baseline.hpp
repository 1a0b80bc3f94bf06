#pragma once

#include <cstddef>
#include <vector>

#include "eptas/instance.hpp"

namespace eptas {

struct BoundResult {
  Schedule schedule;
  Rational makespan;
};

/// Jobs by non-increasing minimum time (ties by index), each onto the machine
/// where it finishes earliest (ties by type, then index). An upper bound on
/// OPT.
BoundResult greedy_bound(const Instance& inst);

/// Diagnostics of the LP-rounding 2-approximation.
struct TwoApproxReport {
  Schedule schedule;
  Rational makespan;
  Rational threshold;      // largest processing time admitted to the LP
  Rational lp_makespan;    // optimal fractional makespan at that threshold
  std::size_t fractional_variables = 0;
  std::size_t fractional_jobs = 0;
  std::size_t machines = 0;
};

/// Lenstra-Shmoys-Tardos on individually expanded machines: for a threshold
/// tau from the sorted processing times, minimise the fractional makespan
/// using only pairs with p_ij <= tau; binary search the tau minimising
/// max(tau, LP value); round the vertex solution by matching its fractional
/// jobs to distinct machines. Makespan <= 2 OPT.
TwoApproxReport lst_two_approx_report(const Instance& inst);

inline Schedule lst_two_approx(const Instance& inst) { return lst_two_approx_report(inst).schedule; }

}  // namespace eptas
