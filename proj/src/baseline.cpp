#include "eptas/baseline.hpp"

#include <algorithm>
#include <numeric>
#include <optional>

#include "eptas/errors.hpp"
#include "eptas/exactlp.hpp"
#include "eptas/netflow.hpp"

namespace eptas {

BoundResult greedy_bound(const Instance& inst) {
  const int n = inst.num_jobs();
  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](int a, int b) { return inst.min_time(a) > inst.min_time(b); });

  std::vector<std::vector<Rational>> load(inst.num_types());
  for (int t = 0; t < inst.num_types(); ++t) load[t].assign(inst.multiplicity(t), Rational(0));

  BoundResult out;
  out.schedule.assignment.resize(n);
  for (int j : order) {
    std::optional<Rational> best;
    MachineId where;
    for (int t = 0; t < inst.num_types(); ++t) {
      for (int i = 0; i < inst.multiplicity(t); ++i) {
        Rational finish = load[t][i] + inst.time(t, j);
        if (!best || finish < *best) {
          best = std::move(finish);
          where = {t, i};
        }
      }
    }
    load[where.type][where.index] = *best;
    out.schedule.assignment[j] = where;
  }
  out.makespan = n == 0 ? Rational(0) : evaluate_makespan(inst, out.schedule);
  return out;
}

namespace {

struct ThresholdLp {
  LinearProgram lp;
  std::vector<std::vector<int>> var;  // [machine][job], -1 if p > tau
  std::size_t makespan_var = 0;
};

ThresholdLp make_threshold_lp(const Instance& inst, const std::vector<MachineId>& machines,
                              const Rational& tau) {
  ThresholdLp out;
  out.lp.sense = Sense::Minimize;
  const int n = inst.num_jobs();
  out.var.assign(machines.size(), std::vector<int>(n, -1));
  for (std::size_t i = 0; i < machines.size(); ++i) {
    for (int j = 0; j < n; ++j) {
      if (inst.time(machines[i].type, j) <= tau) {
        out.var[i][j] = static_cast<int>(out.lp.add_variable());
      }
    }
  }
  out.makespan_var = out.lp.add_variable(Rational(0), std::nullopt, Rational(1));
  const std::size_t vars = out.lp.num_variables();
  for (int j = 0; j < n; ++j) {
    std::vector<Rational> row(vars, Rational(0));
    for (std::size_t i = 0; i < machines.size(); ++i) {
      if (out.var[i][j] >= 0) row[out.var[i][j]] = 1;
    }
    out.lp.add_constraint(std::move(row), Relation::Equal, Rational(1));
  }
  for (std::size_t i = 0; i < machines.size(); ++i) {
    std::vector<Rational> row(vars, Rational(0));
    for (int j = 0; j < n; ++j) {
      if (out.var[i][j] >= 0) row[out.var[i][j]] = inst.time(machines[i].type, j);
    }
    row[out.makespan_var] = -1;
    out.lp.add_constraint(std::move(row), Relation::LessEqual, Rational(0));
  }
  return out;
}

struct Evaluated {
  Rational tau;
  ThresholdLp model;
  LpResult result;

  [[nodiscard]] bool feasible() const { return result.status == LpStatus::Optimal; }
  // max(tau, LP makespan): a lower bound on OPT whenever tau is OPT's largest job.
  [[nodiscard]] Rational score() const { return std::max(tau, result.value); }
};

Evaluated evaluate(const Instance& inst, const std::vector<MachineId>& machines, const Rational& tau) {
  Evaluated e{tau, make_threshold_lp(inst, machines, tau), {}};
  e.result = solve_lp(e.model.lp);
  return e;
}

}  // namespace

TwoApproxReport lst_two_approx_report(const Instance& inst) {
  TwoApproxReport report;
  const int n = inst.num_jobs();
  std::vector<MachineId> machines;
  for (int t = 0; t < inst.num_types(); ++t) {
    for (int i = 0; i < inst.multiplicity(t); ++i) machines.push_back({t, i});
  }
  report.machines = machines.size();
  if (n == 0) return report;

  std::vector<Rational> taus;
  for (const auto& row : inst.processing()) taus.insert(taus.end(), row.begin(), row.end());
  std::sort(taus.begin(), taus.end());
  taus.erase(std::unique(taus.begin(), taus.end()), taus.end());

  // tau <= LP(tau) then tau > LP(tau) as tau grows; find the crossover.
  auto settled = [&](const Evaluated& e) { return e.feasible() && e.result.value <= e.tau; };
  std::size_t lo = 0, hi = taus.size();  // first settled index lies in [lo, hi]
  while (lo < hi) {
    const std::size_t mid = (lo + hi) / 2;
    if (settled(evaluate(inst, machines, taus[mid]))) hi = mid;
    else lo = mid + 1;
  }
  std::optional<Evaluated> best;
  for (std::size_t idx : {lo == 0 ? taus.size() : lo - 1, lo}) {
    if (idx >= taus.size()) continue;
    Evaluated e = evaluate(inst, machines, taus[idx]);
    if (!e.feasible()) continue;
    if (!best || e.score() < best->score()) best = std::move(e);
  }
  if (!best) {
    // No crossover: the largest threshold admits everything.
    best = evaluate(inst, machines, taus.back());
  }

  report.threshold = best->tau;
  report.lp_makespan = best->result.value;
  const auto& x = best->result.point;

  // Integral entries assign directly; fractional jobs get matched to distinct
  // machines on the support graph.
  report.schedule.assignment.resize(n);
  std::vector<int> fractional_jobs;
  for (int j = 0; j < n; ++j) {
    bool whole = false;
    for (std::size_t i = 0; i < machines.size(); ++i) {
      const int v = best->model.var[i][j];
      if (v < 0 || sgn(x[v]) == 0) continue;
      if (x[v] == 1) {
        report.schedule.assignment[j] = machines[i];
        whole = true;
      } else {
        ++report.fractional_variables;
      }
    }
    if (!whole) fractional_jobs.push_back(j);
  }
  report.fractional_jobs = fractional_jobs.size();

  const int f = static_cast<int>(fractional_jobs.size());
  const int m = static_cast<int>(machines.size());
  FlowNetwork net(2 + f + m, 0, 1 + f + m);
  std::vector<std::vector<std::pair<int, std::size_t>>> edges(f);  // (edge id, machine)
  for (int a = 0; a < f; ++a) net.add_edge(0, 1 + a, 1);
  for (int a = 0; a < f; ++a) {
    for (std::size_t i = 0; i < machines.size(); ++i) {
      const int v = best->model.var[i][fractional_jobs[a]];
      if (v >= 0 && sgn(x[v]) > 0) edges[a].push_back({net.add_edge(1 + a, 1 + f + static_cast<int>(i), 1), i});
    }
  }
  for (int i = 0; i < m; ++i) net.add_edge(1 + f + i, 1 + f + m, 1);
  const IntegralFlow flow = max_flow_integral(net);
  if (flow.value != f) throw InternalError("fractional jobs admit no machine matching");
  for (int a = 0; a < f; ++a) {
    for (const auto& [edge, i] : edges[a]) {
      if (flow.edge_flow[edge] == 1) report.schedule.assignment[fractional_jobs[a]] = machines[i];
    }
  }
  report.makespan = evaluate_makespan(inst, report.schedule);
  return report;
}

}  // namespace eptas
