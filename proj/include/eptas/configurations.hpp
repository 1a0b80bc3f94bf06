#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "eptas/instance.hpp"
#include "eptas/milp.hpp"
#include "eptas/netflow.hpp"
#include "eptas/rational.hpp"

namespace eptas {

inline constexpr std::size_t kDefaultConfigLimit = 200'000;

struct EptasParams {
  Rational epsilon = Rational(1, 4);
  std::size_t node_budget = kDefaultNodeBudget;
  std::size_t config_limit = kDefaultConfigLimit;
  /// Drop configurations holding more jobs of some size than the type has;
  /// they never help a feasible solution.
  bool cap_configurations = true;
};

/// Throws std::invalid_argument unless 0 < epsilon < 1.
void check_params(const EptasParams& params);

/// Processing times snapped to a geometric grid around the guess T.
struct RoundedGrid {
  Rational T;
  Rational epsilon;
  Rational threshold;  // epsilon^2 T; sizes above it are big
  std::vector<std::vector<ExtendedRational>> rounded;  // [type][job]
  std::vector<std::vector<Rational>> big_sizes;        // [type], ascending
  std::vector<std::vector<Rational>> small_sizes;      // [type], ascending
  std::vector<std::map<Rational, std::vector<int>>> groups;  // [type]: size -> jobs

  [[nodiscard]] int num_types() const { return static_cast<int>(rounded.size()); }
  [[nodiscard]] int num_jobs() const { return rounded.empty() ? 0 : static_cast<int>(rounded[0].size()); }
  [[nodiscard]] bool is_big(const Rational& size) const { return size > threshold; }
  /// Position of `size` in big_sizes[type].
  [[nodiscard]] std::size_t big_index(int type, const Rational& size) const;
};

/// Sorts the finite entries of `rounded` into size classes.
void classify_sizes(RoundedGrid& grid);

/// Counts of big jobs per big size, aligned with the size list it was
/// enumerated for.
struct Configuration {
  std::vector<int> counts;
  Rational size;

  [[nodiscard]] int job_count() const;
  friend bool operator==(const Configuration&, const Configuration&) = default;
};

/// All configurations with size <= bound, by depth-first recursion over the
/// sizes from largest to smallest (the largest size varies slowest). The
/// empty configuration comes first. `caps`, if given, bounds each count.
/// Throws ConfigExplosion beyond `config_limit` configurations.
std::vector<Configuration> enumerate_configurations(const std::vector<Rational>& sizes,
                                                    const Rational& bound,
                                                    std::size_t config_limit,
                                                    const std::vector<int>* caps = nullptr);

/// Per-size job counts of one type, usable as enumeration caps.
std::vector<int> group_caps(const RoundedGrid& grid, int type);

/// The configuration MILP's variables: z[t][c] integral, x[j][t] fractional.
struct ConfigurationMilp {
  MilpModel model;
  std::vector<std::vector<std::size_t>> z_var;  // [type][config]
  std::vector<std::vector<std::size_t>> x_var;  // [job][type]
};

/// Adds z and x variables plus the rows shared by both objectives: one
/// configuration per machine, and every job assigned once. x[j][t] is fixed
/// to 0 where the rounded time is infinite.
ConfigurationMilp make_assignment_milp(const Instance& inst, const RoundedGrid& grid,
                                       const std::vector<std::vector<Configuration>>& configs);

/// z̄ per (type, configuration) and the integral job -> type map.
struct IntegralAssignment {
  std::vector<std::vector<long>> config_counts;  // [type][config]
  std::vector<int> job_type;
};

struct Integralization {
  IntegralAssignment assignment;
  std::int64_t flow_value = 0;
};

/// Job/size network: source -> job (capacity 1), job -> size node of each
/// type where the rounded time is finite (capacity 1), size node -> sink.
/// Node ids: source 0, jobs 1..n, size nodes by (type, ascending size), sink
/// last. The sink edges get `sink_capacity(t, size)` and `sink_demand(t, size)`.
struct SizeNetwork {
  FlowNetwork network{2, 0, 1};
  std::vector<std::vector<int>> job_edge;  // [job][type], -1 when absent
  std::vector<std::map<Rational, int>> sink_edge;  // [type]: size -> edge id
};

template <typename CapacityFn, typename DemandFn>
SizeNetwork build_size_network(const RoundedGrid& grid, CapacityFn sink_capacity,
                               DemandFn sink_demand);

/// Fractional mass of each (type, size) group in a MILP point.
std::vector<std::map<Rational, Rational>> group_mass(const RoundedGrid& grid,
                                                     const ConfigurationMilp& milp,
                                                     const std::vector<Rational>& point);

/// Reads z̄ from the point and x̄ from the unit job -> size edges of `flow`.
/// Throws InternalError if some job is not routed.
IntegralAssignment read_assignment(const RoundedGrid& grid, const ConfigurationMilp& milp,
                                   const std::vector<Rational>& point, const SizeNetwork& net,
                                   const IntegralFlow& flow);

// ---------------------------------------------------------------------------

template <typename CapacityFn, typename DemandFn>
SizeNetwork build_size_network(const RoundedGrid& grid, CapacityFn sink_capacity,
                               DemandFn sink_demand) {
  const int n = grid.num_jobs();
  const int k = grid.num_types();
  int size_nodes = 0;
  for (const auto& g : grid.groups) size_nodes += static_cast<int>(g.size());
  const int sink = 1 + n + size_nodes;

  SizeNetwork out;
  out.network = FlowNetwork(sink + 1, 0, sink);
  out.job_edge.assign(n, std::vector<int>(k, -1));
  out.sink_edge.resize(k);

  std::vector<std::map<Rational, int>> node_of(k);
  int next = 1 + n;
  for (int t = 0; t < k; ++t) {
    for (const auto& [size, jobs] : grid.groups[t]) node_of[t][size] = next++;
  }
  for (int j = 0; j < n; ++j) out.network.add_edge(0, 1 + j, 1);
  for (int j = 0; j < n; ++j) {
    for (int t = 0; t < k; ++t) {
      const auto& p = grid.rounded[t][j];
      if (p.is_infinite()) continue;
      out.job_edge[j][t] = out.network.add_edge(1 + j, node_of[t].at(p.value()), 1);
    }
  }
  for (int t = 0; t < k; ++t) {
    for (const auto& [size, node] : node_of[t]) {
      out.sink_edge[t][size] =
          out.network.add_edge(node, sink, sink_capacity(t, size), sink_demand(t, size));
    }
  }
  return out;
}

}  // namespace eptas
