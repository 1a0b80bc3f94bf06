#include "eptas/bench.hpp"

#include <chrono>
#include <cstdio>
#include <optional>
#include <ostream>

#include <json.hpp>

#include "eptas/baseline.hpp"
#include "eptas/errors.hpp"
#include "eptas/instance.hpp"
#include "eptas/makespan_eptas.hpp"
#include "eptas/oracle.hpp"
#include "eptas/santa_eptas.hpp"

namespace eptas {

using nlohmann::json;

BenchSuite parse_bench_suite(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    throw ParseError(0, "", e.what());
  }
  BenchSuite suite;
  try {
    suite.seed = doc.value("seed", std::uint64_t{0});
    suite.node_budget = doc.value("node_budget", kDefaultNodeBudget);
    for (const auto& e : doc.at("epsilons")) {
      const auto eps = parse_rational(e.get<std::string>());
      if (!eps) throw ParseError(0, "epsilons", "invalid rational " + e.dump());
      suite.epsilons.push_back(*eps);
    }
    for (const auto& a : doc.at("algos")) {
      const auto name = a.get<std::string>();
      if (name != "eptas" && name != "santa" && name != "greedy" && name != "lp2") {
        throw ParseError(0, "algos", "unknown algorithm " + name);
      }
      suite.algos.push_back(name);
    }
    for (const auto& g : doc.at("groups")) {
      BenchGroup group;
      group.types = g.at("types").get<int>();
      group.jobs = g.at("jobs").get<int>();
      group.multiplicities = g.at("mults").get<std::vector<int>>();
      group.p_max = g.at("pmax").get<std::uint64_t>();
      group.count = g.value("count", 1);
      suite.groups.push_back(std::move(group));
    }
  } catch (const json::exception& e) {
    throw ParseError(0, "", e.what());
  }
  return suite;
}

namespace {

struct Row {
  std::string instance_id;
  std::string algo;
  std::string epsilon = "-";
  Rational objective;
  std::optional<Rational> oracle;
  double wall_ms = 0;
};

void write_row(std::ostream& csv, const Row& row, const BenchOptions& options) {
  csv << row.instance_id << ',' << row.algo << ',' << row.epsilon << ',' << to_string(row.objective)
      << ',' << (row.oracle ? to_string(*row.oracle) : "-") << ',';
  if (row.oracle && sgn(*row.oracle) != 0) {
    csv << to_string(Rational(row.objective / *row.oracle));
  } else {
    csv << '-';
  }
  csv << ',';
  if (options.timing) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.3f", row.wall_ms);
    csv << buf;
  } else {
    csv << '-';
  }
  csv << '\n';
}

template <typename Fn>
Rational timed(double& ms, Fn&& fn) {
  const auto start = std::chrono::steady_clock::now();
  Rational value = fn();
  ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return value;
}

}  // namespace

void run_bench(const BenchSuite& suite, std::ostream& csv, const BenchOptions& options) {
  csv << "instance_id,algo,epsilon,objective,oracle,ratio,wall_ms\n";
  std::uint64_t index = 0;
  for (std::size_t g = 0; g < suite.groups.size(); ++g) {
    const BenchGroup& group = suite.groups[g];
    for (int i = 0; i < group.count; ++i, ++index) {
      const Instance inst = generate_instance(group.types, group.jobs, group.multiplicities,
                                              group.p_max, suite.seed + index);
      const std::string id = "g" + std::to_string(g) + "-i" + std::to_string(i);

      std::optional<Rational> opt_makespan, opt_min_load;
      try {
        opt_makespan = brute_force_makespan(inst).value;
        opt_min_load = brute_force_min_load(inst).value;
      } catch (const LimitExceeded&) {
      }

      for (const auto& algo : suite.algos) {
        if (algo == "greedy" || algo == "lp2") {
          Row row;
          row.instance_id = id;
          row.algo = algo;
          row.oracle = opt_makespan;
          row.objective = timed(row.wall_ms, [&] {
            return algo == "greedy" ? greedy_bound(inst).makespan
                                    : lst_two_approx_report(inst).makespan;
          });
          write_row(csv, row, options);
          continue;
        }
        for (const auto& eps : suite.epsilons) {
          EptasParams params;
          params.epsilon = eps;
          params.node_budget = suite.node_budget;
          Row row;
          row.instance_id = id;
          row.algo = algo;
          row.epsilon = to_string(eps);
          if (algo == "eptas") {
            row.oracle = opt_makespan;
            row.objective = timed(row.wall_ms, [&] { return solve_makespan(inst, params).makespan; });
          } else {
            row.oracle = opt_min_load;
            row.objective = timed(row.wall_ms, [&] { return solve_santa(inst, params).min_load; });
          }
          write_row(csv, row, options);
        }
      }
    }
  }
}

}  // namespace eptas
