// Copyright 2026 The DDCCast Simulator Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ddccast/forwarding_tree.hpp"
#include "ddccast/types.hpp"

namespace ddccast {

enum class RequestState { kPending, kAdmitted, kRejected, kCompleted };

std::string to_string(RequestState state);

/// One point-to-multipoint transfer: `volume` (rate x slots) from `source`
/// to every node of `destinations`, delivered by the end of slot `deadline`.
struct TransferRequest {
  RequestId id = 0;
  NodeId source = 0;
  std::vector<NodeId> destinations;  // sorted, distinct
  double volume = 0.0;
  Slot deadline = 0;
  Slot arrival_slot = 0;
  RequestState state = RequestState::kPending;
  double residual = 0.0;
  std::optional<ForwardingTree> tree;
  // Set on unicast legs produced by baseline::decompose.
  std::optional<RequestId> parent;
};

/// Builds a pending request with residual = volume and sorted destinations.
TransferRequest make_request(RequestId id, NodeId source,
                             std::vector<NodeId> destinations, double volume,
                             Slot deadline, Slot arrival_slot);

/// Empty when the static request invariants hold (nonempty destinations
/// excluding the source, positive volume, deadline after arrival, nodes in
/// range); otherwise names the violated one.
std::string check_request(const TransferRequest& request, std::size_t node_count);

}  // namespace ddccast
