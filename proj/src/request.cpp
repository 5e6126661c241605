// Copyright 2026 The DDCCast Simulator Authors
// SPDX-License-Identifier: Apache-2.0

#include "ddccast/request.hpp"

#include <algorithm>
#include <cmath>

namespace ddccast {

std::string to_string(RequestState state) {
  switch (state) {
    case RequestState::kPending: return "pending";
    case RequestState::kAdmitted: return "admitted";
    case RequestState::kRejected: return "rejected";
    case RequestState::kCompleted: return "completed";
  }
  return "unknown";
}

TransferRequest make_request(RequestId id, NodeId source,
                             std::vector<NodeId> destinations, double volume,
                             Slot deadline, Slot arrival_slot) {
  std::sort(destinations.begin(), destinations.end());
  TransferRequest r;
  r.id = id;
  r.source = source;
  r.destinations = std::move(destinations);
  r.volume = volume;
  r.residual = volume;
  r.deadline = deadline;
  r.arrival_slot = arrival_slot;
  return r;
}

std::string check_request(const TransferRequest& request, std::size_t node_count) {
  if (request.source >= node_count) return "source out of range";
  if (request.destinations.empty()) return "no destinations";
  if (!std::is_sorted(request.destinations.begin(), request.destinations.end()) ||
      std::adjacent_find(request.destinations.begin(), request.destinations.end()) !=
          request.destinations.end())
    return "destinations not sorted and distinct";
  for (NodeId d : request.destinations) {
    if (d >= node_count) return "destination out of range";
    if (d == request.source) return "destination equals source";
  }
  if (!(request.volume > 0.0) || !std::isfinite(request.volume)) return "volume must be positive";
  if (request.deadline < request.arrival_slot + 1) return "deadline must be after arrival";
  if (request.residual < 0.0 || request.residual > request.volume) return "residual out of range";
  return {};
}

}  // namespace ddccast
