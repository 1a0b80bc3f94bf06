#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "eptas/configurations.hpp"
#include "eptas/instance.hpp"

namespace eptas {

/// Times rounded up onto (1+eps)^x eps^2 T, or infinity above T.
struct RoundedInstance : RoundedGrid {
  Rational T_bar;  // (1 + eps) T
};

/// p > T becomes infinity; p = 0 stays 0; every other p becomes the smallest
/// grid value (1+eps)^x eps^2 T >= p, x any integer. Pre: T > 0, 0 < eps < 1.
RoundedInstance geometric_round(const Instance& inst, const Rational& T, const Rational& eps);

/// Adds the big-job and area rows to the assignment MILP:
///   sum_{j in J_t(p)} x_jt <= sum_C C_p z_Ct          for every big size p
///   sum_C size(C) z_Ct + sum_{small p} p sum_j x_jt <= m_t T_bar
ConfigurationMilp build_milp(const Instance& inst, const RoundedInstance& ri,
                             const std::vector<std::vector<Configuration>>& configs);

/// Max flow on the job/size network with sink capacities
/// ceil(sum_{j in J_t(p)} x_jt). Throws InternalError if the flow value is
/// below n.
Integralization integralize_solution(const ConfigurationMilp& milp, const MilpResult& sol,
                                     const RoundedInstance& ri);

/// Places configurations on machines, big jobs into their slots, then small
/// jobs greedily against the relaxed area bound T_bar + eps T + eps^2 T.
Schedule assemble_schedule(const Instance& inst, const IntegralAssignment& ia,
                           const RoundedInstance& ri,
                           const std::vector<std::vector<Configuration>>& configs);

/// Everything one guess T produced; kept for verification.
struct MakespanTry {
  Rational T;
  RoundedInstance rounded;
  std::vector<std::vector<Configuration>> configs;
  bool feasible = false;
  std::size_t milp_nodes = 0;
  std::vector<Rational> milp_point;
  std::int64_t flow_value = 0;
  IntegralAssignment assignment;
  Schedule schedule;
  Rational makespan;
};

MakespanTry try_makespan_detailed(const Instance& inst, const Rational& T,
                                  const EptasParams& params);

/// A schedule of makespan <= (1 + 2 eps + 2 eps^2) T, or nullopt when no
/// schedule of makespan <= T exists. Budget errors propagate.
std::optional<Schedule> try_makespan(const Instance& inst, const Rational& T,
                                     const EptasParams& params);

struct MakespanResult {
  Schedule schedule;
  Rational makespan;
  Rational accepted_T;  // smallest successful guess
  Rational lower_bound;
  Rational upper_bound;
  std::vector<MakespanTry> tries;
};

/// Dual approximation: binary search over [L, B] with L a certified lower
/// bound and B the greedy makespan, until the bracket is at most eps L wide.
/// Makespan <= (1 + 2 eps + 2 eps^2)(1 + eps) OPT.
MakespanResult solve_makespan(const Instance& inst, const EptasParams& params);

}  // namespace eptas
