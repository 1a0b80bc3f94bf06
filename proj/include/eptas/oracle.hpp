#pragma once

#include "eptas/instance.hpp"

namespace eptas {

struct OracleResult {
  Rational value;
  Schedule witness;
};

struct OracleLimits {
  int jobs = 10;
  int machines = 5;
  /// Canonical machine order within a type: a job may only open the
  /// lowest-indexed unused machine of that type.
  bool symmetry_pruning = true;
};

/// Exact OPT by exhaustive search. Throws LimitExceeded beyond the limits.
OracleResult brute_force_makespan(const Instance& inst, const OracleLimits& limits = {});

/// Exact max-min load (empty machines count as 0).
OracleResult brute_force_min_load(const Instance& inst, const OracleLimits& limits = {});

}  // namespace eptas
