#include "eptas/makespan_eptas.hpp"

#include <algorithm>
#include <stdexcept>

#include "eptas/baseline.hpp"
#include "eptas/errors.hpp"

namespace eptas {

RoundedInstance geometric_round(const Instance& inst, const Rational& T, const Rational& eps) {
  if (sgn(T) <= 0) throw std::invalid_argument("target makespan must be positive");
  if (sgn(eps) <= 0 || eps >= 1) throw std::invalid_argument("epsilon must lie in (0, 1)");

  RoundedInstance ri;
  ri.T = T;
  ri.epsilon = eps;
  ri.threshold = eps * eps * T;
  ri.T_bar = (1 + eps) * T;
  const Rational base = 1 + eps;
  ri.rounded.assign(inst.num_types(), std::vector<ExtendedRational>(inst.num_jobs()));
  for (int t = 0; t < inst.num_types(); ++t) {
    for (int j = 0; j < inst.num_jobs(); ++j) {
      const Rational& p = inst.time(t, j);
      if (p > T) {
        ri.rounded[t][j] = ExtendedRational::infinity();
        continue;
      }
      if (sgn(p) == 0) {
        ri.rounded[t][j] = Rational(0);
        continue;
      }
      // Smallest power base^x (x may be negative) with base^x >= p / threshold.
      const Rational ratio = p / ri.threshold;
      Rational power(1);
      if (ratio <= 1) {
        while (power / base >= ratio) power /= base;
      } else {
        while (power < ratio) power *= base;
      }
      ri.rounded[t][j] = Rational(power * ri.threshold);
    }
  }
  classify_sizes(ri);
  return ri;
}

ConfigurationMilp build_milp(const Instance& inst, const RoundedInstance& ri,
                             const std::vector<std::vector<Configuration>>& configs) {
  ConfigurationMilp milp = make_assignment_milp(inst, ri, configs);
  LinearProgram& lp = milp.model.base;
  const std::size_t vars = lp.num_variables();

  for (int t = 0; t < ri.num_types(); ++t) {
    for (std::size_t b = 0; b < ri.big_sizes[t].size(); ++b) {
      std::vector<Rational> row(vars, Rational(0));
      for (int j : ri.groups[t].at(ri.big_sizes[t][b])) row[milp.x_var[j][t]] = 1;
      for (std::size_t c = 0; c < configs[t].size(); ++c) {
        row[milp.z_var[t][c]] = -configs[t][c].counts[b];
      }
      lp.add_constraint(std::move(row), Relation::LessEqual, Rational(0));
    }
  }
  for (int t = 0; t < ri.num_types(); ++t) {
    std::vector<Rational> row(vars, Rational(0));
    for (std::size_t c = 0; c < configs[t].size(); ++c) row[milp.z_var[t][c]] = configs[t][c].size;
    for (const auto& p : ri.small_sizes[t]) {
      for (int j : ri.groups[t].at(p)) row[milp.x_var[j][t]] = p;
    }
    lp.add_constraint(std::move(row), Relation::LessEqual, inst.multiplicity(t) * ri.T_bar);
  }
  return milp;
}

Integralization integralize_solution(const ConfigurationMilp& milp, const MilpResult& sol,
                                     const RoundedInstance& ri) {
  if (sol.status != MilpStatus::Feasible) throw std::invalid_argument("needs a feasible MILP solution");
  const auto mass = group_mass(ri, milp, sol.point);
  const SizeNetwork net = build_size_network(
      ri, [&](int t, const Rational& s) { return Capacity(ceil(mass[t].at(s)).get_si()); },
      [](int, const Rational&) { return std::int64_t{0}; });
  const IntegralFlow flow = max_flow_integral(net.network);
  if (flow.value != ri.num_jobs()) {
    throw InternalError("rounding network carries " + std::to_string(flow.value) + " of " +
                        std::to_string(ri.num_jobs()) + " jobs");
  }
  return {read_assignment(ri, milp, sol.point, net, flow), flow.value};
}

namespace {

// Machine -> configuration index, machines in order of configuration index.
std::vector<std::size_t> hand_out_configurations(const std::vector<long>& counts, int machines) {
  std::vector<std::size_t> config_of;
  for (std::size_t c = 0; c < counts.size(); ++c) {
    for (long k = 0; k < counts[c]; ++k) config_of.push_back(c);
  }
  if (static_cast<int>(config_of.size()) != machines) {
    throw InternalError("configuration counts do not match the machine count");
  }
  return config_of;
}

}  // namespace

Schedule assemble_schedule(const Instance& inst, const IntegralAssignment& ia,
                           const RoundedInstance& ri,
                           const std::vector<std::vector<Configuration>>& configs) {
  Schedule sched;
  sched.assignment.resize(inst.num_jobs());
  const Rational bound = ri.T_bar + ri.epsilon * ri.T + ri.threshold;

  for (int t = 0; t < inst.num_types(); ++t) {
    const int machines = inst.multiplicity(t);
    const auto config_of = hand_out_configurations(ia.config_counts[t], machines);

    std::vector<Rational> load(machines);
    std::vector<std::vector<int>> slots(ri.big_sizes[t].size());  // per size: machines, one per slot
    for (int i = 0; i < machines; ++i) {
      const Configuration& c = configs[t][config_of[i]];
      load[i] = c.size;
      for (std::size_t b = 0; b < c.counts.size(); ++b) {
        for (int k = 0; k < c.counts[b]; ++k) slots[b].push_back(i);
      }
    }
    std::vector<std::size_t> next_slot(slots.size(), 0);

    int current = 0;
    for (int j = 0; j < inst.num_jobs(); ++j) {
      if (ia.job_type[j] != t) continue;
      const Rational& p = ri.rounded[t][j].value();
      if (ri.is_big(p)) {
        const std::size_t b = ri.big_index(t, p);
        if (next_slot[b] >= slots[b].size()) {
          throw InternalError("big job " + std::to_string(j) + " has no free slot");
        }
        sched.assignment[j] = {t, slots[b][next_slot[b]++]};
        continue;
      }
      if (current >= machines) throw InternalError("small jobs exceed the available area");
      sched.assignment[j] = {t, current};
      load[current] += p;
      if (load[current] > bound) ++current;
    }
  }
  return sched;
}

MakespanTry try_makespan_detailed(const Instance& inst, const Rational& T,
                                  const EptasParams& params) {
  check_params(params);
  MakespanTry out;
  out.T = T;
  out.rounded = geometric_round(inst, T, params.epsilon);
  const RoundedInstance& ri = out.rounded;

  out.configs.resize(ri.num_types());
  for (int t = 0; t < ri.num_types(); ++t) {
    const std::vector<int> caps = group_caps(ri, t);
    out.configs[t] = enumerate_configurations(ri.big_sizes[t], ri.T_bar, params.config_limit,
                                              params.cap_configurations ? &caps : nullptr);
  }

  const ConfigurationMilp milp = build_milp(inst, ri, out.configs);
  const MilpResult sol = solve_milp(milp.model, params.node_budget);
  out.milp_nodes = sol.nodes;
  if (sol.status != MilpStatus::Feasible) return out;

  out.feasible = true;
  out.milp_point = sol.point;
  Integralization integral = integralize_solution(milp, sol, ri);
  out.flow_value = integral.flow_value;
  out.assignment = std::move(integral.assignment);
  out.schedule = assemble_schedule(inst, out.assignment, ri, out.configs);
  out.makespan = evaluate_makespan(inst, out.schedule);

  const Rational& eps = params.epsilon;
  if (out.makespan > (1 + 2 * eps + 2 * eps * eps) * T) {
    throw InternalError("assembled schedule exceeds the per-guess makespan bound");
  }
  return out;
}

std::optional<Schedule> try_makespan(const Instance& inst, const Rational& T,
                                     const EptasParams& params) {
  MakespanTry attempt = try_makespan_detailed(inst, T, params);
  if (!attempt.feasible) return std::nullopt;
  return std::move(attempt.schedule);
}

MakespanResult solve_makespan(const Instance& inst, const EptasParams& params) {
  check_params(params);
  MakespanResult result;
  const BoundResult greedy = greedy_bound(inst);

  Rational min_sum(0), longest(0);
  for (int j = 0; j < inst.num_jobs(); ++j) {
    min_sum += inst.min_time(j);
    longest = std::max(longest, inst.min_time(j));
  }
  result.lower_bound = std::max(longest, Rational(min_sum / inst.num_machines()));
  result.upper_bound = greedy.makespan;

  // Greedy already matches a lower bound, so it is optimal.
  if (result.upper_bound == result.lower_bound) {
    result.schedule = greedy.schedule;
    result.makespan = greedy.makespan;
    result.accepted_T = greedy.makespan;
    return result;
  }

  auto attempt = [&](const Rational& T) -> bool {
    result.tries.push_back(try_makespan_detailed(inst, T, params));
    const MakespanTry& last = result.tries.back();
    if (!last.feasible) return false;
    // best schedule so far, not necessarily the smallest guess
    if (result.tries.size() == 1 || last.makespan < result.makespan) {
      result.schedule = last.schedule;
      result.makespan = last.makespan;
    }
    result.accepted_T = T;
    return true;
  };

  Rational lo = result.lower_bound;
  Rational hi = result.upper_bound;
  if (!attempt(hi)) throw InternalError("guess at the greedy makespan was rejected");
  if (attempt(lo)) return result;

  const Rational gap = params.epsilon * result.lower_bound;
  while (hi - lo > gap) {
    const Rational mid = (lo + hi) / 2;
    if (attempt(mid)) {
      hi = mid;
    } else {
      lo = mid;
    }
  }
  return result;
}

}  // namespace eptas
