// Copyright 2026 The DDCCast Simulator Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <string>
#include <vector>

#include "ddccast/topology.hpp"

namespace ddccast {

/// Edges oriented away from `root` that reach every terminal. Edge order
/// is the order the selector attached them in.
struct ForwardingTree {
  NodeId root = 0;
  std::vector<NodeId> terminals;  // sorted
  std::vector<EdgeIndex> edges;

  std::size_t size() const { return edges.size(); }
  bool contains(EdgeIndex e) const;

  friend bool operator==(const ForwardingTree&, const ForwardingTree&) = default;
};

/// Returns a description of the first broken tree invariant, or an empty
/// string when the tree is a proper arborescence whose leaves are terminals.
std::string check_tree(const Topology& topology, const ForwardingTree& tree);

std::string describe(const Topology& topology, const ForwardingTree& tree);

}  // namespace ddccast
