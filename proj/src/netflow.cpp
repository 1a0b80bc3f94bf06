#include "eptas/netflow.hpp"

#include <algorithm>
#include <numeric>
#include <queue>
#include <stdexcept>

namespace eptas {

FlowNetwork::FlowNetwork(int num_nodes, int source, int sink)
    : num_nodes_(num_nodes), source_(source), sink_(sink) {
  if (source < 0 || source >= num_nodes || sink < 0 || sink >= num_nodes || source == sink) {
    throw std::invalid_argument("source and sink must be distinct existing nodes");
  }
}

int FlowNetwork::add_node() { return num_nodes_++; }

int FlowNetwork::add_edge(int from, int to, Capacity capacity, std::int64_t demand) {
  if (from < 0 || from >= num_nodes_ || to < 0 || to >= num_nodes_) {
    throw std::invalid_argument("edge endpoint out of range");
  }
  if ((!capacity.is_infinite() && capacity.value() < 0) || demand < 0) {
    throw std::invalid_argument("capacities and demands must be non-negative");
  }
  edges_.push_back({from, to, capacity, demand});
  return static_cast<int>(edges_.size()) - 1;
}

namespace {

class Residual {
 public:
  explicit Residual(int nodes) : adjacency_(nodes) {}

  int add_arc(int from, int to, Capacity cap) {
    const int id = static_cast<int>(arcs_.size());
    arcs_.push_back({to, cap.is_infinite(), cap.is_infinite() ? 0 : cap.value()});
    arcs_.push_back({from, false, 0});
    adjacency_[from].push_back(id);
    adjacency_[to].push_back(id + 1);
    sorted_ = false;
    return id;
  }

  void disable(int arc) {
    for (int a : {arc, arc ^ 1}) {
      arcs_[a].infinite = false;
      arcs_[a].room = 0;
    }
  }

  [[nodiscard]] std::int64_t flow_on(int arc) const { return arcs_[arc ^ 1].room; }

  /// Repeated shortest augmenting paths from s to t. Scanning order is by
  /// neighbour id, then arc creation order.
  std::int64_t augment(int s, int t) {
    sort_adjacency();
    std::int64_t total = 0;
    const int n = static_cast<int>(adjacency_.size());
    std::vector<int> via(n);
    for (;;) {
      std::fill(via.begin(), via.end(), -1);
      std::queue<int> queue;
      queue.push(s);
      via[s] = -2;
      while (!queue.empty() && via[t] == -1) {
        const int u = queue.front();
        queue.pop();
        for (int a : adjacency_[u]) {
          const Arc& arc = arcs_[a];
          if (via[arc.to] != -1 || (!arc.infinite && arc.room == 0)) continue;
          via[arc.to] = a;
          queue.push(arc.to);
        }
      }
      if (via[t] == -1) return total;

      bool bounded = false;
      std::int64_t bottleneck = 0;
      for (int v = t; v != s; v = arcs_[via[v] ^ 1].to) {
        const Arc& arc = arcs_[via[v]];
        if (arc.infinite) continue;
        bottleneck = bounded ? std::min(bottleneck, arc.room) : arc.room;
        bounded = true;
      }
      if (!bounded) throw std::invalid_argument("infinite-capacity path from source to sink");
      for (int v = t; v != s; v = arcs_[via[v] ^ 1].to) {
        Arc& arc = arcs_[via[v]];
        if (!arc.infinite) arc.room -= bottleneck;
        Arc& back = arcs_[via[v] ^ 1];
        if (!back.infinite) back.room += bottleneck;
      }
      total += bottleneck;
    }
  }

 private:
  struct Arc {
    int to;
    bool infinite;
    std::int64_t room;
  };

  void sort_adjacency() {
    if (sorted_) return;
    for (auto& list : adjacency_) {
      std::stable_sort(list.begin(), list.end(),
                       [&](int a, int b) { return arcs_[a].to < arcs_[b].to; });
    }
    sorted_ = true;
  }

  std::vector<Arc> arcs_;
  std::vector<std::vector<int>> adjacency_;
  bool sorted_ = false;
};

std::int64_t net_outflow(const FlowNetwork& net, const std::vector<std::int64_t>& flow, int node) {
  std::int64_t out = 0;
  for (std::size_t e = 0; e < net.edges().size(); ++e) {
    if (net.edges()[e].from == node) out += flow[e];
    if (net.edges()[e].to == node) out -= flow[e];
  }
  return out;
}

}  // namespace

IntegralFlow max_flow_integral(const FlowNetwork& net) {
  Residual residual(net.num_nodes());
  std::vector<int> arc_of;
  for (const auto& e : net.edges()) {
    if (e.demand != 0) throw std::invalid_argument("max_flow_integral does not accept demands");
    if ((e.from == net.source() || e.to == net.source()) && e.capacity.is_infinite()) {
      throw std::invalid_argument("edges at the source must have finite capacity");
    }
    arc_of.push_back(residual.add_arc(e.from, e.to, e.capacity));
  }
  IntegralFlow flow;
  flow.value = residual.augment(net.source(), net.sink());
  for (int a : arc_of) flow.edge_flow.push_back(residual.flow_on(a));
  return flow;
}

std::optional<IntegralFlow> feasible_flow_with_demands(const FlowNetwork& net) {
  const int n = net.num_nodes();
  const int super_source = n, super_sink = n + 1;
  Residual residual(n + 2);
  std::vector<std::int64_t> excess(n, 0);
  std::vector<int> arc_of;
  for (const auto& e : net.edges()) {
    if (!e.capacity.allows(e.demand)) return std::nullopt;
    arc_of.push_back(residual.add_arc(e.from, e.to, e.capacity.minus(e.demand)));
    excess[e.to] += e.demand;
    excess[e.from] -= e.demand;
  }
  // Circulation arcs both ways, so flows of any net value qualify.
  const int loop = residual.add_arc(net.sink(), net.source(), Capacity::infinity());
  const int reverse_loop = residual.add_arc(net.source(), net.sink(), Capacity::infinity());
  std::int64_t required = 0;
  std::vector<int> helper_arcs;
  for (int v = 0; v < n; ++v) {
    if (excess[v] > 0) {
      helper_arcs.push_back(residual.add_arc(super_source, v, excess[v]));
      required += excess[v];
    } else if (excess[v] < 0) {
      helper_arcs.push_back(residual.add_arc(v, super_sink, -excess[v]));
    }
  }
  if (residual.augment(super_source, super_sink) < required) return std::nullopt;

  residual.disable(loop);
  residual.disable(reverse_loop);
  for (int a : helper_arcs) residual.disable(a);
  residual.augment(net.source(), net.sink());

  IntegralFlow flow;
  for (std::size_t e = 0; e < arc_of.size(); ++e) {
    flow.edge_flow.push_back(net.edges()[e].demand + residual.flow_on(arc_of[e]));
  }
  flow.value = net_outflow(net, flow.edge_flow, net.source());
  return flow;
}

bool is_valid_flow(const FlowNetwork& net, const IntegralFlow& flow) {
  if (flow.edge_flow.size() != net.edges().size()) return false;
  for (std::size_t e = 0; e < net.edges().size(); ++e) {
    const auto& edge = net.edges()[e];
    if (flow.edge_flow[e] < edge.demand || !edge.capacity.allows(flow.edge_flow[e])) return false;
  }
  for (int v = 0; v < net.num_nodes(); ++v) {
    if (v == net.source() || v == net.sink()) continue;
    if (net_outflow(net, flow.edge_flow, v) != 0) return false;
  }
  return flow.value == net_outflow(net, flow.edge_flow, net.source());
}

}  // namespace eptas
