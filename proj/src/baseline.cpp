// Copyright 2026 The DDCCast Simulator Authors
// SPDX-License-Identifier: Apache-2.0

#include "ddccast/baseline.hpp"

#include <stdexcept>

namespace ddccast::baseline {

std::vector<TransferRequest> decompose(const TransferRequest& request, RequestId first_id) {
  std::vector<TransferRequest> legs;
  legs.reserve(request.destinations.size());
  for (NodeId destination : request.destinations) {
    TransferRequest leg = make_request(first_id + legs.size(), request.source, {destination},
                                       request.volume, request.deadline, request.arrival_slot);
    leg.parent = request.id;
    legs.push_back(std::move(leg));
  }
  return legs;
}

AdmissionDecision p2p_admit_and_allocate(TransferRequest& leg, Scheduler& scheduler) {
  if (leg.destinations.size() != 1)
    throw std::invalid_argument("p2p_admit_and_allocate: unicast leg expected");
  return scheduler.admit(leg);
}

P2pAlapScheduler::P2pAlapScheduler(const Topology& topology, Slot start)
    : scheduler_(topology, start) {}

SlotReport P2pAlapScheduler::tick(const std::vector<TransferRequest>& arrivals) {
  std::vector<TransferRequest> legs;
  for (const TransferRequest& request : arrivals) {
    for (TransferRequest& leg : decompose(request, next_leg_)) {
      leg_parents_.push_back(request.id);
      legs.push_back(std::move(leg));
    }
    next_leg_ += request.destinations.size();
  }
  return scheduler_.tick(std::move(legs));
}

}  // namespace ddccast::baseline
