#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <vector>

#include "eptas/configurations.hpp"
#include "eptas/exactlp.hpp"
#include "eptas/instance.hpp"

namespace eptas::testing {

/// K in {1,2,3} cycling with the seed, 1..4 machines (at least one per type),
/// 1..max_jobs jobs, integer times in [1, p_max].
Instance random_small_instance(std::uint64_t seed, int max_jobs = 8, int max_machines = 4,
                               std::uint64_t p_max = 20);

/// Random LP with finite variable bounds, so the feasible set is a polytope.
LinearProgram random_bounded_lp(std::mt19937_64& rng, int max_vars = 4, int max_rows = 6);

/// Minimum of the objective over all vertices: every choice of n tight
/// hyperplanes among rows and bounds, solved exactly. nullopt if no vertex is
/// feasible. Feasibility LPs report 0.
std::optional<Rational> vertex_enumeration_min(const LinearProgram& lp);

/// Exact solution of a square system, nullopt when singular.
std::optional<std::vector<Rational>> solve_square(std::vector<std::vector<Rational>> a,
                                                  std::vector<Rational> b);

/// Every count vector in the product space [0, floor(bound / p)] (or
/// [0, caps] when given) whose size is <= bound.
std::vector<Configuration> naive_configurations(const std::vector<Rational>& sizes,
                                                const Rational& bound,
                                                const std::vector<int>* caps = nullptr);

/// Sorted copy, for order-insensitive comparisons.
std::vector<Configuration> sorted(std::vector<Configuration> configs);

}  // namespace eptas::testing
