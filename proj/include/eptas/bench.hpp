#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "eptas/configurations.hpp"
#include "eptas/rational.hpp"

namespace eptas {

struct BenchGroup {
  int types = 1;
  int jobs = 0;
  std::vector<int> multiplicities;
  std::uint64_t p_max = 1;
  int count = 1;
};

/// JSON document:
///   {"seed": 1, "epsilons": ["1/2", "1/4"], "algos": ["eptas", "santa", "greedy", "lp2"],
///    "node_budget": 1000000,
///    "groups": [{"types": 2, "jobs": 6, "mults": [1, 2], "pmax": 20, "count": 10}]}
/// Instance i of the suite (counted across groups) uses seed + i.
struct BenchSuite {
  std::uint64_t seed = 0;
  std::vector<Rational> epsilons;
  std::vector<std::string> algos;
  std::size_t node_budget = kDefaultNodeBudget;
  std::vector<BenchGroup> groups;
};

BenchSuite parse_bench_suite(std::string_view text);

struct BenchOptions {
  /// When false the wall_ms column holds "-" so reruns are byte-identical.
  bool timing = true;
};

/// Writes `instance_id,algo,epsilon,objective,oracle,ratio,wall_ms` rows.
/// Objectives, oracle values and ratios are exact rationals; "-" marks a
/// column that does not apply.
void run_bench(const BenchSuite& suite, std::ostream& csv, const BenchOptions& options = {});

}  // namespace eptas
