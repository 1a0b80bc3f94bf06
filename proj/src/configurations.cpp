#include "eptas/configurations.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "eptas/errors.hpp"

namespace eptas {

void check_params(const EptasParams& params) {
  if (sgn(params.epsilon) <= 0 || params.epsilon >= 1) {
    throw std::invalid_argument("epsilon must lie strictly between 0 and 1");
  }
}

std::size_t RoundedGrid::big_index(int type, const Rational& size) const {
  const auto& sizes = big_sizes[type];
  const auto it = std::lower_bound(sizes.begin(), sizes.end(), size);
  if (it == sizes.end() || *it != size) throw InternalError("size is not a big size of this type");
  return static_cast<std::size_t>(it - sizes.begin());
}

void classify_sizes(RoundedGrid& grid) {
  const int k = grid.num_types();
  grid.big_sizes.assign(k, {});
  grid.small_sizes.assign(k, {});
  grid.groups.assign(k, {});
  for (int t = 0; t < k; ++t) {
    for (int j = 0; j < grid.num_jobs(); ++j) {
      const auto& p = grid.rounded[t][j];
      if (p.is_finite()) grid.groups[t][p.value()].push_back(j);
    }
    for (const auto& [size, jobs] : grid.groups[t]) {
      (grid.is_big(size) ? grid.big_sizes[t] : grid.small_sizes[t]).push_back(size);
    }
  }
}

int Configuration::job_count() const { return std::accumulate(counts.begin(), counts.end(), 0); }

namespace {

struct Enumerator {
  const std::vector<Rational>& sizes;
  const Rational& bound;
  std::size_t limit;
  const std::vector<int>* caps;
  std::vector<Configuration>& out;
  std::vector<int> counts;

  // Chooses the count of sizes[pos], then recurses to the next smaller size.
  void descend(std::ptrdiff_t pos, const Rational& used) {
    if (pos < 0) {
      if (out.size() >= limit) throw ConfigExplosion(limit);
      out.push_back({counts, used});
      return;
    }
    const auto p = static_cast<std::size_t>(pos);
    Rational load = used;
    for (int c = 0;; ++c) {
      counts[p] = c;
      descend(pos - 1, load);
      if (caps && c >= (*caps)[p]) break;
      load += sizes[p];
      if (load > bound) break;
    }
    counts[p] = 0;
  }
};

}  // namespace

std::vector<Configuration> enumerate_configurations(const std::vector<Rational>& sizes,
                                                    const Rational& bound,
                                                    std::size_t config_limit,
                                                    const std::vector<int>* caps) {
  for (const auto& s : sizes) {
    if (sgn(s) <= 0) throw std::invalid_argument("configuration sizes must be positive");
  }
  if (caps && caps->size() != sizes.size()) {
    throw std::invalid_argument("one cap per size expected");
  }
  std::vector<Configuration> out;
  if (sgn(bound) < 0) return out;
  // Recurse over positions in decreasing order of size, whatever the input order.
  std::vector<std::size_t> order(sizes.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return sizes[a] < sizes[b]; });
  std::vector<Rational> sorted;
  std::vector<int> sorted_caps;
  for (std::size_t i : order) {
    sorted.push_back(sizes[i]);
    if (caps) sorted_caps.push_back((*caps)[i]);
  }
  Enumerator e{sorted, bound, config_limit, caps ? &sorted_caps : nullptr, out,
               std::vector<int>(sizes.size(), 0)};
  e.descend(static_cast<std::ptrdiff_t>(sorted.size()) - 1, Rational(0));

  // Map counts back to the caller's size order.
  for (auto& c : out) {
    std::vector<int> counts(sizes.size());
    for (std::size_t i = 0; i < order.size(); ++i) counts[order[i]] = c.counts[i];
    c.counts = std::move(counts);
  }
  return out;
}

std::vector<int> group_caps(const RoundedGrid& grid, int type) {
  std::vector<int> caps;
  for (const auto& s : grid.big_sizes[type]) {
    caps.push_back(static_cast<int>(grid.groups[type].at(s).size()));
  }
  return caps;
}

ConfigurationMilp make_assignment_milp(const Instance& inst, const RoundedGrid& grid,
                                       const std::vector<std::vector<Configuration>>& configs) {
  const int k = grid.num_types();
  const int n = grid.num_jobs();
  ConfigurationMilp out;
  LinearProgram& lp = out.model.base;
  lp.sense = Sense::Feasibility;

  out.z_var.resize(k);
  for (int t = 0; t < k; ++t) {
    for (std::size_t c = 0; c < configs[t].size(); ++c) {
      out.z_var[t].push_back(lp.add_variable(Rational(0), Rational(inst.multiplicity(t))));
      out.model.integral.push_back(true);
    }
  }
  out.x_var.assign(n, std::vector<std::size_t>(k));
  for (int j = 0; j < n; ++j) {
    for (int t = 0; t < k; ++t) {
      const bool allowed = grid.rounded[t][j].is_finite();
      out.x_var[j][t] = lp.add_variable(Rational(0), Rational(allowed ? 1 : 0));
      out.model.integral.push_back(false);
    }
  }

  const std::size_t vars = lp.num_variables();
  // One configuration per machine.
  for (int t = 0; t < k; ++t) {
    std::vector<Rational> row(vars, Rational(0));
    for (std::size_t v : out.z_var[t]) row[v] = 1;
    lp.add_constraint(std::move(row), Relation::Equal, Rational(inst.multiplicity(t)));
  }
  // Every job fully assigned.
  for (int j = 0; j < n; ++j) {
    std::vector<Rational> row(vars, Rational(0));
    for (int t = 0; t < k; ++t) row[out.x_var[j][t]] = 1;
    lp.add_constraint(std::move(row), Relation::Equal, Rational(1));
  }
  return out;
}

std::vector<std::map<Rational, Rational>> group_mass(const RoundedGrid& grid,
                                                     const ConfigurationMilp& milp,
                                                     const std::vector<Rational>& point) {
  std::vector<std::map<Rational, Rational>> mass(grid.num_types());
  for (int t = 0; t < grid.num_types(); ++t) {
    for (const auto& [size, jobs] : grid.groups[t]) {
      Rational sum(0);
      for (int j : jobs) sum += point[milp.x_var[j][t]];
      mass[t][size] = sum;
    }
  }
  return mass;
}

IntegralAssignment read_assignment(const RoundedGrid& grid, const ConfigurationMilp& milp,
                                   const std::vector<Rational>& point, const SizeNetwork& net,
                                   const IntegralFlow& flow) {
  IntegralAssignment ia;
  ia.config_counts.resize(grid.num_types());
  for (int t = 0; t < grid.num_types(); ++t) {
    for (std::size_t v : milp.z_var[t]) {
      if (!is_integer(point[v])) throw InternalError("configuration variable is fractional");
      ia.config_counts[t].push_back(point[v].get_num().get_si());
    }
  }
  ia.job_type.assign(grid.num_jobs(), -1);
  for (int j = 0; j < grid.num_jobs(); ++j) {
    for (int t = 0; t < grid.num_types(); ++t) {
      const int e = net.job_edge[j][t];
      if (e >= 0 && flow.edge_flow[e] == 1) ia.job_type[j] = t;
    }
    if (ia.job_type[j] < 0) {
      throw InternalError("job " + std::to_string(j) + " carries no flow in the rounding network");
    }
  }
  return ia;
}

}  // namespace eptas
