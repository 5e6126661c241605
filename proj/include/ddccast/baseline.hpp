// Copyright 2026 The DDCCast Simulator Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <vector>

#include "ddccast/request.hpp"
#include "ddccast/scheduler.hpp"

namespace ddccast::baseline {

/// Splits a P2MP request into one unicast leg per destination. Legs copy
/// volume, deadline, source and arrival, get ids first_id, first_id+1, ...
/// and remember the original id in `parent`.
std::vector<TransferRequest> decompose(const TransferRequest& request, RequestId first_id);

/// Admission for a unicast leg. The forwarding "tree" degenerates to the
/// min-cost path under the same load-aware edge costs, and placement and
/// later adjustments are the scheduler's own.
AdmissionDecision p2p_admit_and_allocate(TransferRequest& leg, Scheduler& scheduler);

/// Point-to-point decomposition scheduler. Every arriving P2MP request is
/// split into independent legs, each admitted (or not) on its own.
class P2pAlapScheduler {
 public:
  explicit P2pAlapScheduler(const Topology& topology, Slot start = 0);

  /// Decomposes the arrivals in order, assigning leg ids from an internal
  /// counter starting at 0, and runs one slot.
  SlotReport tick(const std::vector<TransferRequest>& arrivals);

  const Scheduler& scheduler() const { return scheduler_; }
  /// Parent request id of every leg seen so far, indexed by leg id.
  const std::vector<RequestId>& leg_parents() const { return leg_parents_; }

 private:
  Scheduler scheduler_;
  RequestId next_leg_ = 0;
  std::vector<RequestId> leg_parents_;
};

}  // namespace ddccast::baseline
