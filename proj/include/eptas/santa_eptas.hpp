#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "eptas/configurations.hpp"
#include "eptas/instance.hpp"

namespace eptas {

/// Times capped at T and rounded down onto (1-eps)^x eps^2 T.
struct SantaRounded : RoundedGrid {
  Rational T_low;  // (1 - eps) T, the load every machine should reach
  Rational P;      // T_low + largest big size over all types
};

/// Caps p at T, keeps p = 0, and otherwise picks the largest grid value
/// (1-eps)^x eps^2 T <= p. Big sizes are rounded values above eps^2 T.
SantaRounded geometric_round_down(const Instance& inst, const Rational& T, const Rational& eps);

/// Configurations of size <= P, split at T_low: small ones (size <= T_low)
/// still need small jobs on top, big ones cover a machine alone.
struct SplitConfigurations {
  std::vector<Configuration> small;
  std::vector<Configuration> big;

  /// small followed by big; this is the MILP's variable order.
  [[nodiscard]] std::vector<Configuration> all() const;
};

SplitConfigurations enumerate_configurations_bounded(const std::vector<Rational>& sizes,
                                                     const Rational& T_low, const Rational& P,
                                                     std::size_t config_limit,
                                                     const std::vector<int>* caps = nullptr);

/// Assignment MILP plus
///   sum_{j in J_t(p)} x_jt >= sum_C C_p z_Ct                     for big p
///   sum_{small C} size(C) z_Ct + sum_{small p} p sum_j x_jt
///       >= (m_t - sum_{big C} z_Ct) T_low
ConfigurationMilp build_santa_milp(const Instance& inst, const SantaRounded& sr,
                                   const std::vector<SplitConfigurations>& configs);

/// Feasible flow on the job/size network whose sink edges demand
/// floor(sum_{j in J_t(p)} x_jt) with unbounded capacity. nullopt if the
/// demands cannot be met (an upstream bug for genuine MILP solutions).
std::optional<Integralization> integralize_santa(const ConfigurationMilp& milp,
                                                 const MilpResult& sol, const SantaRounded& sr);

/// Configurations to machines, big slots filled, then machines with small
/// configurations topped up towards T_low without overshooting; whatever is
/// left goes to the least-loaded machine of its type.
Schedule assemble_santa_schedule(const Instance& inst, const IntegralAssignment& ia,
                                 const SantaRounded& sr,
                                 const std::vector<SplitConfigurations>& configs);

struct SantaTry {
  Rational T;
  SantaRounded rounded;
  std::vector<SplitConfigurations> configs;
  bool feasible = false;
  std::size_t milp_nodes = 0;
  std::vector<Rational> milp_point;
  bool demands_feasible = false;
  std::int64_t flow_value = 0;
  IntegralAssignment assignment;
  Schedule schedule;
  Rational min_load;
};

SantaTry try_santa_detailed(const Instance& inst, const Rational& T, const EptasParams& params);

/// A schedule with min load >= (1 - 2 eps - 2 eps^2) T, or nullopt when no
/// schedule reaches min load T.
std::optional<Schedule> try_santa(const Instance& inst, const Rational& T,
                                  const EptasParams& params);

struct SantaResult {
  Schedule schedule;
  Rational min_load;
  Rational accepted_T;
  Rational upper_bound;
  std::vector<SantaTry> tries;
};

/// Zero-optimum check: every machine can receive its own job of positive time.
bool has_positive_optimum(const Instance& inst);

/// Walks T down the grid U (1-eps)^k from the certified bound
/// U = min_t sum_j p_tj / m_t and keeps the first success.
/// Min load >= (1 - 3 eps)(1 - eps) OPT for eps <= 1/2.
SantaResult solve_santa(const Instance& inst, const EptasParams& params);

}  // namespace eptas
