#include <doctest.h>

#include "eptas/errors.hpp"
#include "eptas/makespan_eptas.hpp"
#include "eptas/oracle.hpp"
#include "support.hpp"

using namespace eptas;

namespace {

Instance single(std::vector<long> times, int machines) {
  std::vector<Rational> row;
  for (long p : times) row.emplace_back(p);
  return Instance({row}, {machines});
}

Instance crossed() {
  return Instance({{Rational(1), Rational(2)}, {Rational(2), Rational(1)}}, {1, 1});
}

EptasParams with_epsilon(Rational eps) {
  EptasParams params;
  params.epsilon = std::move(eps);
  return params;
}

Rational guarantee(const Rational& eps) { return (1 + 2 * eps + 2 * eps * eps) * (1 + eps); }

}  // namespace

TEST_CASE("geometric rounding") {
  const Rational half = make_rational(1, 2);
  const Instance inst({{make_rational(1, 4), make_rational(3, 10), make_rational(6, 5), Rational(0),
                        Rational(1), make_rational(1, 100)}},
                      {1});
  const RoundedInstance ri = geometric_round(inst, Rational(1), half);
  CHECK(ri.rounded[0][0] == ExtendedRational(make_rational(1, 4)));
  CHECK(ri.rounded[0][1] == ExtendedRational(make_rational(3, 8)));
  CHECK(ri.rounded[0][2].is_infinite());
  CHECK(ri.rounded[0][3] == ExtendedRational(Rational(0)));
  CHECK(ri.rounded[0][4] == ExtendedRational(make_rational(81, 64)));
  // Below the threshold the exponent goes negative: (2/3)^7 / 4.
  CHECK(ri.rounded[0][5] == ExtendedRational(make_rational(32, 2187)));
  CHECK(ri.T_bar == make_rational(3, 2));
  CHECK(ri.threshold == make_rational(1, 4));
  CHECK(ri.big_sizes[0] == std::vector<Rational>{make_rational(3, 8), make_rational(81, 64)});
  CHECK(ri.small_sizes[0] ==
        std::vector<Rational>{Rational(0), make_rational(32, 2187), make_rational(1, 4)});
  CHECK(ri.groups[0].at(make_rational(1, 4)) == std::vector<int>{0});

  CHECK_THROWS_AS(geometric_round(inst, Rational(0), half), std::invalid_argument);
  CHECK_THROWS_AS(geometric_round(inst, Rational(1), Rational(1)), std::invalid_argument);
}

TEST_CASE("rounding sandwich") {
  for (std::uint64_t seed = 1; seed <= 30; ++seed) {
    const Instance inst = eptas::testing::random_small_instance(seed);
    for (const Rational eps : {make_rational(1, 2), make_rational(1, 3), make_rational(1, 7)}) {
      const RoundedInstance ri = geometric_round(inst, Rational(11), eps);
      for (int t = 0; t < inst.num_types(); ++t) {
        for (int j = 0; j < inst.num_jobs(); ++j) {
          const Rational& p = inst.time(t, j);
          if (p > 11) {
            CHECK(ri.rounded[t][j].is_infinite());
            continue;
          }
          const Rational& q = ri.rounded[t][j].value();
          CHECK(p <= q);
          CHECK(q <= (1 + eps) * p);
        }
      }
    }
  }
}

TEST_CASE("configuration enumeration") {
  const auto none = enumerate_configurations({}, Rational(10), 100);
  REQUIRE(none.size() == 1);
  CHECK(none[0].job_count() == 0);
  CHECK(none[0].size == 0);

  const std::vector<Rational> sizes{Rational(3), Rational(5)};
  const auto configs = enumerate_configurations(sizes, Rational(10), 100);
  std::vector<std::vector<int>> counts;
  for (const auto& c : configs) counts.push_back(c.counts);
  // Largest size outermost, empty configuration first.
  CHECK(counts == std::vector<std::vector<int>>{{0, 0}, {1, 0}, {2, 0}, {3, 0}, {0, 1}, {1, 1}, {0, 2}});
  for (const auto& c : configs) CHECK(c.size == 3 * c.counts[0] + 5 * c.counts[1]);

  const std::vector<int> caps{1, 2};
  CHECK(enumerate_configurations(sizes, Rational(10), 100, &caps).size() == 5);

  CHECK_THROWS_AS(enumerate_configurations(sizes, Rational(10), 6), ConfigExplosion);
  CHECK_NOTHROW(enumerate_configurations(sizes, Rational(10), 7));

  // Big sizes exceed eps^2 T, so at most 1/eps^2 of them fit below T_bar.
  const Rational eps = make_rational(1, 2);
  const Instance inst = single({1, 1, 1, 1, 1, 1}, 1);
  const RoundedInstance ri = geometric_round(inst, Rational(4), eps);
  for (const auto& c : enumerate_configurations(ri.big_sizes[0], ri.T_bar, 1000)) {
    CHECK(c.job_count() <= 4);
  }
}

TEST_CASE("enumeration matches the naive filter") {
  std::mt19937_64 rng(8);
  for (int i = 0; i < 100; ++i) {
    std::vector<Rational> sizes;
    const int count = std::uniform_int_distribution<int>(0, 4)(rng);
    for (int s = 0; s < count; ++s) {
      sizes.push_back(make_rational(std::uniform_int_distribution<int>(2, 12)(rng), 2));
    }
    std::sort(sizes.begin(), sizes.end());
    sizes.erase(std::unique(sizes.begin(), sizes.end()), sizes.end());
    const Rational bound(std::uniform_int_distribution<int>(0, 12)(rng));
    std::vector<int> caps;
    for (std::size_t s = 0; s < sizes.size(); ++s) caps.push_back(std::uniform_int_distribution<int>(0, 3)(rng));
    CHECK(eptas::testing::sorted(enumerate_configurations(sizes, bound, 100000)) ==
          eptas::testing::sorted(eptas::testing::naive_configurations(sizes, bound)));
    CHECK(eptas::testing::sorted(enumerate_configurations(sizes, bound, 100000, &caps)) ==
          eptas::testing::sorted(eptas::testing::naive_configurations(sizes, bound, &caps)));
  }
}

TEST_CASE("MILP shape") {
  const Rational eps = make_rational(1, 4);
  const Instance empty({{}}, {2});
  const RoundedInstance r0 = geometric_round(empty, Rational(1), eps);
  std::vector<std::vector<Configuration>> c0{enumerate_configurations(r0.big_sizes[0], r0.T_bar, 100)};
  const ConfigurationMilp m0 = build_milp(empty, r0, c0);
  const MilpResult s0 = solve_milp(m0.model);
  REQUIRE(s0.status == MilpStatus::Feasible);
  CHECK(s0.point[m0.z_var[0][0]] == 2);

  // Job 1 is longer than T on every type.
  const Instance stuck({{Rational(1), Rational(9)}, {Rational(2), Rational(8)}}, {1, 1});
  const RoundedInstance r1 = geometric_round(stuck, Rational(5), eps);
  std::vector<std::vector<Configuration>> c1;
  for (int t = 0; t < 2; ++t) c1.push_back(enumerate_configurations(r1.big_sizes[t], r1.T_bar, 100));
  CHECK(solve_milp(build_milp(stuck, r1, c1).model).status == MilpStatus::Infeasible);
  CHECK_FALSE(try_makespan(stuck, Rational(5), with_epsilon(eps)));
}

TEST_CASE("a schedule within T_bar induces an integral MILP point") {
  const Rational eps = make_rational(1, 3);
  for (std::uint64_t seed = 1; seed <= 30; ++seed) {
    CAPTURE(seed);
    const Instance inst = eptas::testing::random_small_instance(seed, 6, 3);
    const OracleResult opt = brute_force_makespan(inst);
    const RoundedInstance ri = geometric_round(inst, opt.value, eps);
    std::vector<std::vector<Configuration>> configs;
    for (int t = 0; t < inst.num_types(); ++t) {
      configs.push_back(enumerate_configurations(ri.big_sizes[t], ri.T_bar, 100000));
    }
    const ConfigurationMilp milp = build_milp(inst, ri, configs);
    std::vector<Rational> point(milp.model.base.num_variables(), Rational(0));
    for (int t = 0; t < inst.num_types(); ++t) {
      for (int i = 0; i < inst.multiplicity(t); ++i) {
        std::vector<int> counts(ri.big_sizes[t].size(), 0);
        for (int j = 0; j < inst.num_jobs(); ++j) {
          const MachineId where = opt.witness.assignment[j];
          if (where.type != t || where.index != i) continue;
          const Rational& p = ri.rounded[t][j].value();
          if (ri.is_big(p)) ++counts[ri.big_index(t, p)];
        }
        const auto it = std::find_if(configs[t].begin(), configs[t].end(),
                                     [&](const Configuration& c) { return c.counts == counts; });
        REQUIRE(it != configs[t].end());
        point[milp.z_var[t][it - configs[t].begin()]] += 1;
      }
    }
    for (int j = 0; j < inst.num_jobs(); ++j) {
      point[milp.x_var[j][opt.witness.assignment[j].type]] = 1;
    }
    CHECK(is_feasible_point(milp.model.base, point));
  }
}

TEST_CASE("integralizing a split job") {
  const Rational eps = make_rational(1, 2);
  const Instance inst({{Rational(1)}, {Rational(1)}}, {1, 1});
  const RoundedInstance ri = geometric_round(inst, Rational(1), eps);
  std::vector<std::vector<Configuration>> configs;
  for (int t = 0; t < 2; ++t) configs.push_back(enumerate_configurations(ri.big_sizes[t], ri.T_bar, 100));
  const ConfigurationMilp milp = build_milp(inst, ri, configs);

  MilpResult sol;
  sol.status = MilpStatus::Feasible;
  sol.point.assign(milp.model.base.num_variables(), Rational(0));
  for (int t = 0; t < 2; ++t) {
    for (std::size_t c = 0; c < configs[t].size(); ++c) {
      if (configs[t][c].job_count() == 1) sol.point[milp.z_var[t][c]] = 1;
    }
    sol.point[milp.x_var[0][t]] = make_rational(1, 2);
  }
  REQUIRE(is_feasible_point(milp.model.base, sol.point));
  const Integralization out = integralize_solution(milp, sol, ri);
  CHECK(out.flow_value == 1);
  CHECK((out.assignment.job_type[0] == 0 || out.assignment.job_type[0] == 1));

  // Integral points come back unchanged.
  sol.point[milp.x_var[0][0]] = 0;
  sol.point[milp.x_var[0][1]] = 1;
  CHECK(integralize_solution(milp, sol, ri).assignment.job_type[0] == 1);

  MilpResult none;
  CHECK_THROWS_AS(integralize_solution(milp, none, ri), std::invalid_argument);
}

TEST_CASE("assembly on identical machines") {
  const Rational eps = make_rational(1, 4);
  const Instance inst = single({3, 3, 3, 3}, 2);
  const auto tr = try_makespan_detailed(inst, Rational(6), with_epsilon(eps));
  REQUIRE(tr.feasible);
  CHECK(tr.flow_value == 4);
  validate_schedule(inst, tr.schedule);
  CHECK(tr.makespan <= (1 + 2 * eps + 2 * eps * eps) * 6);
  CHECK(tr.makespan == evaluate_makespan(inst, tr.schedule));

  const Instance empty({{}}, {1});
  CHECK(solve_makespan(empty, with_epsilon(eps)).makespan == 0);
  CHECK(solve_makespan(empty, with_epsilon(eps)).schedule.assignment.empty());
}

TEST_CASE("try_makespan boundaries") {
  const EptasParams params = with_epsilon(make_rational(1, 3));
  const Instance inst({{Rational(4), Rational(7), Rational(2)}, {Rational(5), Rational(3), Rational(9)}},
                      {1, 2});
  // Everything fits one machine of type 0.
  CHECK(try_makespan(inst, Rational(13), params));
  // Job 1 needs at least 3.
  CHECK_FALSE(try_makespan(inst, make_rational(29, 10), params));
  CHECK_THROWS_AS(try_makespan(inst, Rational(0), params), std::invalid_argument);

  EptasParams starved = params;
  starved.node_budget = 0;
  CHECK_THROWS_AS(try_makespan(inst, Rational(13), starved), NodeLimitExceeded);

  EptasParams bad = params;
  bad.epsilon = Rational(0);
  CHECK_THROWS_AS(solve_makespan(inst, bad), std::invalid_argument);
}

TEST_CASE("end-to-end examples") {
  const Rational eps = make_rational(1, 4);
  const MakespanResult r = solve_makespan(crossed(), with_epsilon(eps));
  validate_schedule(crossed(), r.schedule);
  CHECK(r.makespan <= guarantee(eps));

  const Instance one = single({3, 1, 4, 1, 5}, 1);
  CHECK(solve_makespan(one, with_epsilon(eps)).makespan == 14);

  for (std::uint64_t seed = 100; seed < 130; ++seed) {
    CAPTURE(seed);
    const Instance inst = eptas::testing::random_small_instance(seed);
    const Rational opt = brute_force_makespan(inst).value;
    for (const Rational e : {make_rational(1, 2), make_rational(1, 5)}) {
      const MakespanResult res = solve_makespan(inst, with_epsilon(e));
      CHECK(res.makespan == evaluate_makespan(inst, res.schedule));
      CHECK(res.makespan <= guarantee(e) * opt);
      CHECK(res.lower_bound <= opt);
      CHECK(res.upper_bound >= opt);
      CHECK(res.accepted_T <= (1 + e) * opt);
    }
  }
}

TEST_CASE("uncapped enumeration gives the same verdicts") {
  EptasParams capped = with_epsilon(make_rational(1, 3));
  EptasParams uncapped = capped;
  uncapped.cap_configurations = false;
  for (std::uint64_t seed = 200; seed < 215; ++seed) {
    CAPTURE(seed);
    const Instance inst = eptas::testing::random_small_instance(seed, 6, 3);
    const Rational opt = brute_force_makespan(inst).value;
    for (const Rational T : {opt, Rational(opt * 4 / 5), Rational(opt * 9 / 10)}) {
      CHECK(try_makespan(inst, T, capped).has_value() == try_makespan(inst, T, uncapped).has_value());
    }
  }
}
