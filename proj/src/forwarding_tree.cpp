// Copyright 2026 The DDCCast Simulator Authors
// SPDX-License-Identifier: Apache-2.0

#include "ddccast/forwarding_tree.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace ddccast {

bool ForwardingTree::contains(EdgeIndex e) const {
  return std::find(edges.begin(), edges.end(), e) != edges.end();
}

std::string check_tree(const Topology& topology, const ForwardingTree& tree) {
  if (tree.root >= topology.node_count()) return "root out of range";
  if (tree.terminals.empty()) return "no terminals";
  if (tree.edges.empty()) return "no edges";

  std::map<NodeId, NodeId> parent;
  std::map<NodeId, int> children;
  std::set<NodeId> nodes{tree.root};
  for (EdgeIndex e : tree.edges) {
    if (e >= topology.edge_count()) return "edge index out of range";
    const EdgeId& edge = topology.edge(e);
    if (edge.head == tree.root) return "edge enters the root";
    if (!parent.emplace(edge.head, edge.tail).second)
      return "node " + topology.node_name(edge.head) + " has two parents";
    ++children[edge.tail];
    nodes.insert(edge.tail);
    nodes.insert(edge.head);
  }
  if (nodes.size() != tree.edges.size() + 1) return "edge count does not match node count";

  for (NodeId n : nodes) {
    NodeId cur = n;
    std::size_t steps = 0;
    while (cur != tree.root) {
      auto it = parent.find(cur);
      if (it == parent.end() || ++steps > nodes.size())
        return "node " + topology.node_name(n) + " is not reachable from the root";
      cur = it->second;
    }
  }
  for (NodeId t : tree.terminals) {
    if (t == tree.root) return "root listed as terminal";
    if (!nodes.contains(t)) return "terminal " + topology.node_name(t) + " not spanned";
  }
  for (NodeId n : nodes) {
    if (n == tree.root || children[n] > 0) continue;
    if (!std::binary_search(tree.terminals.begin(), tree.terminals.end(), n))
      return "dangling non-terminal leaf " + topology.node_name(n);
  }
  return {};
}

std::string describe(const Topology& topology, const ForwardingTree& tree) {
  std::string out;
  for (EdgeIndex e : tree.edges) {
    if (!out.empty()) out += ' ';
    out += topology.edge_label(e);
  }
  return out;
}

}  // namespace ddccast
