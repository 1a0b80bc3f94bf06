#include "eptas/santa_eptas.hpp"

#include <algorithm>
#include <stdexcept>

#include "eptas/errors.hpp"

namespace eptas {

SantaRounded geometric_round_down(const Instance& inst, const Rational& T, const Rational& eps) {
  if (sgn(T) <= 0) throw std::invalid_argument("target load must be positive");
  if (sgn(eps) <= 0 || eps >= 1) throw std::invalid_argument("epsilon must lie in (0, 1)");

  SantaRounded sr;
  sr.T = T;
  sr.epsilon = eps;
  sr.threshold = eps * eps * T;
  sr.T_low = (1 - eps) * T;
  const Rational base = 1 - eps;
  sr.rounded.assign(inst.num_types(), std::vector<ExtendedRational>(inst.num_jobs()));
  for (int t = 0; t < inst.num_types(); ++t) {
    for (int j = 0; j < inst.num_jobs(); ++j) {
      const Rational p = std::min(inst.time(t, j), T);
      if (sgn(p) == 0) {
        sr.rounded[t][j] = Rational(0);
        continue;
      }
      // Smallest x with base^x <= p / threshold; base < 1, so base^x shrinks in x.
      const Rational ratio = p / sr.threshold;
      Rational power(1);
      if (ratio >= 1) {
        while (power / base <= ratio) power /= base;
      } else {
        while (power > ratio) power *= base;
      }
      sr.rounded[t][j] = Rational(power * sr.threshold);
    }
  }
  classify_sizes(sr);

  Rational largest(0);
  for (const auto& sizes : sr.big_sizes) {
    if (!sizes.empty()) largest = std::max(largest, sizes.back());
  }
  sr.P = sr.T_low + largest;
  return sr;
}

std::vector<Configuration> SplitConfigurations::all() const {
  std::vector<Configuration> out = small;
  out.insert(out.end(), big.begin(), big.end());
  return out;
}

SplitConfigurations enumerate_configurations_bounded(const std::vector<Rational>& sizes,
                                                     const Rational& T_low, const Rational& P,
                                                     std::size_t config_limit,
                                                     const std::vector<int>* caps) {
  SplitConfigurations split;
  for (auto& c : enumerate_configurations(sizes, P, config_limit, caps)) {
    (c.size <= T_low ? split.small : split.big).push_back(std::move(c));
  }
  return split;
}

ConfigurationMilp build_santa_milp(const Instance& inst, const SantaRounded& sr,
                                   const std::vector<SplitConfigurations>& configs) {
  std::vector<std::vector<Configuration>> flat;
  for (const auto& split : configs) flat.push_back(split.all());
  ConfigurationMilp milp = make_assignment_milp(inst, sr, flat);
  LinearProgram& lp = milp.model.base;
  const std::size_t vars = lp.num_variables();

  // Every slot of a chosen configuration must be filled by a real job.
  for (int t = 0; t < sr.num_types(); ++t) {
    for (std::size_t b = 0; b < sr.big_sizes[t].size(); ++b) {
      std::vector<Rational> row(vars, Rational(0));
      for (int j : sr.groups[t].at(sr.big_sizes[t][b])) row[milp.x_var[j][t]] = 1;
      for (std::size_t c = 0; c < flat[t].size(); ++c) row[milp.z_var[t][c]] = -flat[t][c].counts[b];
      lp.add_constraint(std::move(row), Relation::GreaterEqual, Rational(0));
    }
  }
  // Machines without a big configuration are covered by small configurations
  // plus small jobs.
  for (int t = 0; t < sr.num_types(); ++t) {
    std::vector<Rational> row(vars, Rational(0));
    const std::size_t num_small = configs[t].small.size();
    for (std::size_t c = 0; c < flat[t].size(); ++c) {
      row[milp.z_var[t][c]] = c < num_small ? flat[t][c].size : sr.T_low;
    }
    for (const auto& p : sr.small_sizes[t]) {
      for (int j : sr.groups[t].at(p)) row[milp.x_var[j][t]] = p;
    }
    lp.add_constraint(std::move(row), Relation::GreaterEqual, inst.multiplicity(t) * sr.T_low);
  }
  return milp;
}

std::optional<Integralization> integralize_santa(const ConfigurationMilp& milp,
                                                 const MilpResult& sol, const SantaRounded& sr) {
  if (sol.status != MilpStatus::Feasible) throw std::invalid_argument("needs a feasible MILP solution");
  const auto mass = group_mass(sr, milp, sol.point);
  const SizeNetwork net = build_size_network(
      sr, [](int, const Rational&) { return Capacity::infinity(); },
      [&](int t, const Rational& s) { return floor(mass[t].at(s)).get_si(); });
  const auto flow = feasible_flow_with_demands(net.network);
  if (!flow) return std::nullopt;
  if (flow->value != sr.num_jobs()) {
    throw InternalError("demand network carries " + std::to_string(flow->value) + " of " +
                        std::to_string(sr.num_jobs()) + " jobs");
  }
  return Integralization{read_assignment(sr, milp, sol.point, net, *flow), flow->value};
}

Schedule assemble_santa_schedule(const Instance& inst, const IntegralAssignment& ia,
                                 const SantaRounded& sr,
                                 const std::vector<SplitConfigurations>& configs) {
  Schedule sched;
  sched.assignment.resize(inst.num_jobs());

  for (int t = 0; t < inst.num_types(); ++t) {
    const int machines = inst.multiplicity(t);
    const std::vector<Configuration> flat = configs[t].all();
    const std::size_t num_small = configs[t].small.size();

    std::vector<Rational> load(machines);
    std::vector<int> topped;  // machines holding a small configuration
    std::vector<std::vector<int>> slots(sr.big_sizes[t].size());
    int machine = 0;
    for (std::size_t c = 0; c < flat.size(); ++c) {
      for (long k = 0; k < ia.config_counts[t][c]; ++k, ++machine) {
        if (machine >= machines) throw InternalError("more configurations than machines");
        load[machine] = flat[c].size;
        if (c < num_small) topped.push_back(machine);
        for (std::size_t b = 0; b < flat[c].counts.size(); ++b) {
          for (int s = 0; s < flat[c].counts[b]; ++s) slots[b].push_back(machine);
        }
      }
    }
    if (machine != machines) throw InternalError("configuration counts do not match the machine count");

    std::vector<std::size_t> next_slot(slots.size(), 0);
    std::vector<int> leftover;
    std::size_t current = 0;
    for (int j = 0; j < inst.num_jobs(); ++j) {
      if (ia.job_type[j] != t) continue;
      const Rational& p = sr.rounded[t][j].value();
      if (sr.is_big(p)) {
        const std::size_t b = sr.big_index(t, p);
        if (next_slot[b] < slots[b].size()) {
          sched.assignment[j] = {t, slots[b][next_slot[b]++]};
        } else {
          leftover.push_back(j);
        }
        continue;
      }
      while (current < topped.size() && load[topped[current]] + p > sr.T_low) ++current;
      if (current == topped.size()) {
        leftover.push_back(j);
        continue;
      }
      sched.assignment[j] = {t, topped[current]};
      load[topped[current]] += p;
    }
    for (std::size_t b = 0; b < slots.size(); ++b) {
      if (next_slot[b] != slots[b].size()) throw InternalError("a big-job slot stayed empty");
    }
    for (int j : leftover) {
      const int target = static_cast<int>(std::min_element(load.begin(), load.end()) - load.begin());
      sched.assignment[j] = {t, target};
      load[target] += sr.rounded[t][j].value();
    }
  }
  return sched;
}

SantaTry try_santa_detailed(const Instance& inst, const Rational& T, const EptasParams& params) {
  check_params(params);
  SantaTry out;
  out.T = T;
  out.rounded = geometric_round_down(inst, T, params.epsilon);
  const SantaRounded& sr = out.rounded;

  out.configs.resize(sr.num_types());
  for (int t = 0; t < sr.num_types(); ++t) {
    const std::vector<int> caps = group_caps(sr, t);
    out.configs[t] = enumerate_configurations_bounded(sr.big_sizes[t], sr.T_low, sr.P,
                                                      params.config_limit,
                                                      params.cap_configurations ? &caps : nullptr);
  }

  const ConfigurationMilp milp = build_santa_milp(inst, sr, out.configs);
  const MilpResult sol = solve_milp(milp.model, params.node_budget);
  out.milp_nodes = sol.nodes;
  if (sol.status != MilpStatus::Feasible) return out;

  out.feasible = true;
  out.milp_point = sol.point;
  auto integral = integralize_santa(milp, sol, sr);
  if (!integral) throw InternalError("demand network of a feasible MILP solution is infeasible");
  out.demands_feasible = true;
  out.flow_value = integral->flow_value;
  out.assignment = std::move(integral->assignment);
  out.schedule = assemble_santa_schedule(inst, out.assignment, sr, out.configs);
  out.min_load = evaluate_min_load(inst, out.schedule);

  const Rational& eps = params.epsilon;
  if (out.min_load < (1 - 2 * eps - 2 * eps * eps) * T) {
    throw InternalError("assembled schedule falls below the per-guess load bound");
  }
  return out;
}

std::optional<Schedule> try_santa(const Instance& inst, const Rational& T,
                                  const EptasParams& params) {
  SantaTry attempt = try_santa_detailed(inst, T, params);
  if (!attempt.feasible) return std::nullopt;
  return std::move(attempt.schedule);
}

bool has_positive_optimum(const Instance& inst) {
  if (inst.num_machines() > inst.num_jobs()) return false;
  // source -> job (1) -> type (1 if positive there) -> sink (m_t)
  const int n = inst.num_jobs();
  const int sink = 1 + n + inst.num_types();
  FlowNetwork net(sink + 1, 0, sink);
  for (int j = 0; j < n; ++j) net.add_edge(0, 1 + j, 1);
  for (int j = 0; j < n; ++j) {
    for (int t = 0; t < inst.num_types(); ++t) {
      if (sgn(inst.time(t, j)) > 0) net.add_edge(1 + j, 1 + n + t, 1);
    }
  }
  for (int t = 0; t < inst.num_types(); ++t) net.add_edge(1 + n + t, sink, inst.multiplicity(t));
  return max_flow_integral(net).value == inst.num_machines();
}

SantaResult solve_santa(const Instance& inst, const EptasParams& params) {
  check_params(params);
  SantaResult result;
  if (!has_positive_optimum(inst)) {
    result.schedule.assignment.assign(inst.num_jobs(), MachineId{0, 0});
    result.min_load = evaluate_min_load(inst, result.schedule);
    return result;
  }

  // Some machine of every type sees at most the type's average load.
  std::optional<Rational> bound;
  std::optional<Rational> smallest_positive;
  for (int t = 0; t < inst.num_types(); ++t) {
    Rational sum(0);
    for (int j = 0; j < inst.num_jobs(); ++j) {
      const Rational& p = inst.time(t, j);
      sum += p;
      if (sgn(p) > 0 && (!smallest_positive || p < *smallest_positive)) smallest_positive = p;
    }
    Rational average = sum / inst.multiplicity(t);
    if (!bound || average < *bound) bound = std::move(average);
  }
  result.upper_bound = *bound;

  const Rational shrink = 1 - params.epsilon;
  for (Rational T = result.upper_bound;; T *= shrink) {
    result.tries.push_back(try_santa_detailed(inst, T, params));
    const SantaTry& last = result.tries.back();
    if (last.feasible) {
      result.schedule = last.schedule;
      result.min_load = last.min_load;
      result.accepted_T = T;
      return result;
    }
    // Every machine can get a positive job, so OPT >= smallest_positive.
    if (T <= *smallest_positive) throw InternalError("guess below a certified lower bound was rejected");
  }
}

}  // namespace eptas
