// Copyright 2026 The DDCCast Simulator Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <span>
#include <vector>

#include "ddccast/forwarding_tree.hpp"
#include "ddccast/request.hpp"
#include "ddccast/timeline.hpp"
#include "ddccast/topology.hpp"

namespace ddccast {

/// Load-aware cost of putting `request` on `edge`: the request volume plus
/// everything already reserved on the edge from the next slot through the
/// request's deadline. Throws std::domain_error("expired deadline") when
/// the deadline is not in the future.
double edge_cost(EdgeIndex edge, const TransferRequest& request, const Timeline& timeline);

/// edge_cost for every directed edge of the topology, indexed by EdgeIndex.
std::vector<double> edge_costs(const Topology& topology, const TransferRequest& request,
                               const Timeline& timeline);

double tree_weight(const ForwardingTree& tree, const TransferRequest& request,
                   const Timeline& timeline);

/// Takahashi-Matsuyama shortest-path heuristic over arbitrary nonnegative
/// directed weights. Starting from {root}, repeatedly attaches the cheapest
/// unreached terminal through its cheapest path from the current tree.
///
/// Ties: lower weight, then fewer edges, then lower node id (for both the
/// path predecessor and the chosen terminal).
ForwardingTree steiner_tree(const Topology& topology, std::span<const double> weights,
                            NodeId root, std::span<const NodeId> terminals);

/// Forwarding tree for `request` under the current load. Selected once per
/// request, at arrival.
ForwardingTree select_tree(const Topology& topology, const TransferRequest& request,
                           const Timeline& timeline);

}  // namespace ddccast
