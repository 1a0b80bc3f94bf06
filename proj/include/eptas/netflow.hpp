#pragma once

#include <cstdint>
#include <optional>
#include <vector>

namespace eptas {

/// Non-negative integer capacity or a symbolic infinity.
class Capacity {
 public:
  Capacity(std::int64_t value = 0) : value_(value), infinite_(false) {}  // NOLINT(implicit)
  static Capacity infinity() {
    Capacity c;
    c.infinite_ = true;
    return c;
  }

  [[nodiscard]] bool is_infinite() const { return infinite_; }
  [[nodiscard]] std::int64_t value() const { return value_; }

  /// Remaining room above `flow`.
  [[nodiscard]] Capacity minus(std::int64_t flow) const {
    return infinite_ ? infinity() : Capacity(value_ - flow);
  }
  [[nodiscard]] bool allows(std::int64_t flow) const { return infinite_ || flow <= value_; }

 private:
  std::int64_t value_;
  bool infinite_;
};

struct FlowEdge {
  int from = 0;
  int to = 0;
  Capacity capacity;
  std::int64_t demand = 0;
};

class FlowNetwork {
 public:
  FlowNetwork(int num_nodes, int source, int sink);

  int add_node();
  /// Returns the edge id.
  int add_edge(int from, int to, Capacity capacity, std::int64_t demand = 0);

  [[nodiscard]] int num_nodes() const { return num_nodes_; }
  [[nodiscard]] int source() const { return source_; }
  [[nodiscard]] int sink() const { return sink_; }
  [[nodiscard]] const std::vector<FlowEdge>& edges() const { return edges_; }

 private:
  int num_nodes_;
  int source_;
  int sink_;
  std::vector<FlowEdge> edges_;
};

struct IntegralFlow {
  std::vector<std::int64_t> edge_flow;  // by edge id
  std::int64_t value = 0;
};

/// Edmonds-Karp: BFS augmenting paths, neighbours scanned in edge insertion
/// order. Precondition: no demands; edges out of the source are finite.
/// Throws std::invalid_argument when preconditions fail.
IntegralFlow max_flow_integral(const FlowNetwork& net);

/// Feasible flow honouring demand <= flow <= capacity, then augmented to a
/// maximum source-sink flow (whose value may be negative when demands force
/// flow back into the source). nullopt when no flow meets the demands;
/// std::invalid_argument when the maximum is unbounded.
std::optional<IntegralFlow> feasible_flow_with_demands(const FlowNetwork& net);

/// Conservation at inner nodes, demand/capacity boxes on every edge, and
/// value equal to the net outflow of the source.
bool is_valid_flow(const FlowNetwork& net, const IntegralFlow& flow);

}  // namespace eptas
