// Copyright 2026 The DDCCast Simulator Authors
// SPDX-License-Identifier: Apache-2.0

#include "ddccast/tree_selection.hpp"

#include <algorithm>
#include <limits>
#include <queue>
#include <stdexcept>
#include <tuple>

namespace ddccast {

double edge_cost(EdgeIndex edge, const TransferRequest& request, const Timeline& timeline) {
  if (request.deadline < timeline.now() + 1) throw std::domain_error("expired deadline");
  return request.volume + timeline.window_load(edge, timeline.now() + 1, request.deadline);
}

std::vector<double> edge_costs(const Topology& topology, const TransferRequest& request,
                               const Timeline& timeline) {
  std::vector<double> costs(topology.edge_count());
  for (EdgeIndex e = 0; e < costs.size(); ++e) costs[e] = edge_cost(e, request, timeline);
  return costs;
}

double tree_weight(const ForwardingTree& tree, const TransferRequest& request,
                   const Timeline& timeline) {
  double sum = 0.0;
  for (EdgeIndex e : tree.edges) sum += edge_cost(e, request, timeline);
  return sum;
}

namespace {

struct Label {
  double dist = std::numeric_limits<double>::infinity();
  std::size_t hops = std::numeric_limits<std::size_t>::max();
  NodeId pred = std::numeric_limits<NodeId>::max();
  EdgeIndex via = 0;

  bool better_than(const Label& o) const {
    return std::tie(dist, hops, pred) < std::tie(o.dist, o.hops, o.pred);
  }
};

// Multi-source Dijkstra from every node already in the tree.
std::vector<Label> distances_from(const Topology& topology, std::span<const double> weights,
                                  const std::vector<bool>& in_tree) {
  std::vector<Label> label(topology.node_count());
  using Entry = std::tuple<double, std::size_t, NodeId>;
  std::priority_queue<Entry, std::vector<Entry>, std::greater<>> queue;
  for (NodeId n = 0; n < topology.node_count(); ++n) {
    if (!in_tree[n]) continue;
    label[n] = Label{0.0, 0, n, 0};
    queue.emplace(0.0, 0, n);
  }
  std::vector<bool> settled(topology.node_count(), false);
  while (!queue.empty()) {
    const auto [dist, hops, node] = queue.top();
    queue.pop();
    if (settled[node]) continue;
    settled[node] = true;
    for (const auto& arc : topology.out_arcs(node)) {
      if (settled[arc.head]) continue;
      Label cand{dist + weights[arc.edge], hops + 1, node, arc.edge};
      if (cand.better_than(label[arc.head])) {
        label[arc.head] = cand;
        queue.emplace(cand.dist, cand.hops, arc.head);
      }
    }
  }
  return label;
}

}  // namespace

ForwardingTree steiner_tree(const Topology& topology, std::span<const double> weights,
                            NodeId root, std::span<const NodeId> terminals) {
  if (weights.size() != topology.edge_count())
    throw std::invalid_argument("steiner_tree: one weight per directed edge required");
  if (root >= topology.node_count()) throw std::invalid_argument("steiner_tree: root out of range");
  if (terminals.empty()) throw std::invalid_argument("steiner_tree: no terminals");

  ForwardingTree tree;
  tree.root = root;
  tree.terminals.assign(terminals.begin(), terminals.end());
  std::sort(tree.terminals.begin(), tree.terminals.end());
  tree.terminals.erase(std::unique(tree.terminals.begin(), tree.terminals.end()),
                       tree.terminals.end());
  for (NodeId t : tree.terminals) {
    if (t >= topology.node_count()) throw std::invalid_argument("steiner_tree: terminal out of range");
    if (t == root) throw std::invalid_argument("steiner_tree: terminal equals root");
  }

  std::vector<bool> in_tree(topology.node_count(), false);
  in_tree[root] = true;
  std::vector<NodeId> pending = tree.terminals;
  while (!pending.empty()) {
    const auto label = distances_from(topology, weights, in_tree);
    auto best = pending.end();
    for (auto it = pending.begin(); it != pending.end(); ++it) {
      const Label& l = label[*it];
      if (l.hops == std::numeric_limits<std::size_t>::max()) continue;
      if (best == pending.end() ||
          std::tie(l.dist, l.hops) < std::tie(label[*best].dist, label[*best].hops))
        best = it;
    }
    if (best == pending.end())
      throw std::domain_error("steiner_tree: destination unreachable from source");

    std::vector<EdgeIndex> path;
    for (NodeId n = *best; !in_tree[n]; n = label[n].pred) path.push_back(label[n].via);
    for (auto it = path.rbegin(); it != path.rend(); ++it) {
      tree.edges.push_back(*it);
      in_tree[topology.edge(*it).head] = true;
    }
    std::erase_if(pending, [&](NodeId t) { return in_tree[t]; });
  }
  return tree;
}

ForwardingTree select_tree(const Topology& topology, const TransferRequest& request,
                           const Timeline& timeline) {
  if (request.destinations.empty()) throw std::invalid_argument("select_tree: no destinations");
  const auto costs = edge_costs(topology, request, timeline);
  return steiner_tree(topology, costs, request.source, request.destinations);
}

}  // namespace ddccast
