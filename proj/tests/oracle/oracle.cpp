// Copyright 2026 The DDCCast Simulator Authors
// SPDX-License-Identifier: Apache-2.0

#include "oracle.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <stdexcept>

namespace ddccast::oracle {
namespace {

struct Search {
  const Topology& topology;
  std::span<const double> weights;
  NodeId root;
  std::vector<NodeId> members;              // non-root nodes of the candidate
  std::vector<bool> in_set;
  std::vector<EdgeIndex> parent_edge;       // per member
  double best = std::numeric_limits<double>::infinity();
  std::vector<EdgeIndex> best_edges;

  bool reaches_root() const {
    std::vector<NodeId> parent(topology.node_count(), root);
    for (std::size_t i = 0; i < members.size(); ++i)
      parent[members[i]] = topology.edge(parent_edge[i]).tail;
    for (NodeId m : members) {
      NodeId cur = m;
      for (std::size_t steps = 0; cur != root; ++steps) {
        if (steps > members.size()) return false;
        cur = parent[cur];
      }
    }
    return true;
  }

  bool improves(double cost) const {
    return cost < best || (cost == best && members.size() < best_edges.size());
  }

  void assign(std::size_t i, double cost) {
    if (!improves(cost)) return;
    if (i == members.size()) {
      if (!reaches_root()) return;
      {
        best = cost;
        best_edges = parent_edge;
      }
      return;
    }
    const NodeId node = members[i];
    for (EdgeIndex e = 0; e < topology.edge_count(); ++e) {
      const EdgeId& edge = topology.edge(e);
      if (edge.head != node || !in_set[edge.tail]) continue;
      parent_edge[i] = e;
      assign(i + 1, cost + weights[e]);
    }
  }
};

}  // namespace

SteinerOptimum brute_steiner(const Topology& topology, std::span<const double> weights,
                             NodeId root, std::span<const NodeId> terminals) {
  const std::size_t n = topology.node_count();
  if (n > kMaxSteinerNodes) throw std::length_error("brute_steiner: too many nodes");
  std::vector<bool> is_terminal(n, false);
  for (NodeId t : terminals) is_terminal[t] = true;
  std::vector<NodeId> optional;
  for (NodeId v = 0; v < n; ++v)
    if (v != root && !is_terminal[v]) optional.push_back(v);

  Search search{topology, weights, root, {}, {}, {}, std::numeric_limits<double>::infinity(), {}};
  for (std::uint32_t mask = 0; mask < (1u << optional.size()); ++mask) {
    search.in_set.assign(n, false);
    search.in_set[root] = true;
    search.members.clear();
    for (NodeId v = 0; v < n; ++v)
      if (is_terminal[v]) search.members.push_back(v);
    for (std::size_t k = 0; k < optional.size(); ++k)
      if (mask & (1u << k)) search.members.push_back(optional[k]);
    for (NodeId m : search.members) search.in_set[m] = true;
    search.parent_edge.assign(search.members.size(), 0);
    search.assign(0, 0.0);
  }
  if (search.best_edges.empty() && !terminals.empty())
    throw std::domain_error("brute_steiner: terminals unreachable");
  return {search.best, search.best_edges};
}

bool brute_feasibility(const std::vector<std::vector<double>>& alloc, double capacity,
                       double volume) {
  if (alloc.empty()) throw std::invalid_argument("brute_feasibility: empty tree");
  const std::size_t window = alloc.front().size();
  if (window > kMaxWindow) throw std::length_error("brute_feasibility: window too long");
  double total = 0.0;
  for (std::size_t k = 0; k < window; ++k) {
    double lowest = capacity;
    for (const auto& edge : alloc) lowest = std::min(lowest, capacity - edge.at(k));
    if (lowest > 0.0) total += lowest;
  }
  return total >= volume - 1e-9;
}

std::vector<Violation> verify_alap_fixpoint(const Timeline& timeline,
                                            const std::map<RequestId, Slot>& deadlines,
                                            double tolerance) {
  const auto& schedules = timeline.schedules();
  if (schedules.size() > kMaxFixpointRequests)
    throw std::length_error("verify_alap_fixpoint: too many requests");

  std::map<std::pair<EdgeIndex, Slot>, double> load;
  for (const auto& [id, s] : schedules)
    for (const auto& [slot, rate] : s.rates)
      for (EdgeIndex e : s.tree.edges) load[{e, slot}] += rate;
  auto spare_on = [&](const ForwardingTree& tree, Slot t) {
    double spare = timeline.capacity();
    for (EdgeIndex e : tree.edges) {
      auto it = load.find({e, t});
      spare = std::min(spare, timeline.capacity() - (it == load.end() ? 0.0 : it->second));
    }
    return spare;
  };

  std::vector<Violation> found;
  for (const auto& [id, s] : schedules) {
    const Slot deadline = deadlines.at(id);
    if (!s.rates.empty() && s.rates.rbegin()->first - timeline.now() > static_cast<Slot>(kMaxWindow))
      throw std::length_error("verify_alap_fixpoint: window too long");
    for (const auto& [from, rate] : s.rates) {
      for (Slot to = from + 1; to <= deadline; ++to) {
        const double movable = std::min(rate, spare_on(s.tree, to));
        if (movable > tolerance) found.push_back({id, from, to, movable});
      }
    }
  }
  return found;
}

std::vector<Violation> verify_alap_fixpoint(const Scheduler& scheduler, double tolerance) {
  std::map<RequestId, Slot> deadlines;
  for (const auto& [id, r] : scheduler.active()) deadlines[id] = r.deadline;
  return verify_alap_fixpoint(scheduler.timeline(), deadlines, tolerance);
}

}  // namespace ddccast::oracle
