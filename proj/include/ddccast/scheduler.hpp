// Copyright 2026 The DDCCast Simulator Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "ddccast/forwarding_tree.hpp"
#include "ddccast/request.hpp"
#include "ddccast/timeline.hpp"
#include "ddccast/topology.hpp"

namespace ddccast {

struct AdmissionDecision {
  bool accepted = false;
  std::optional<ForwardingTree> tree;
  double available = 0.0;  // total tree bandwidth before the deadline
  std::string reason;      // "capacity" or "expired" when rejected
};

enum class EventType { kDispatch, kAdmit, kReject, kComplete };

std::string to_string(EventType type);

/// One record of a slot report. `value` is the dispatched rate for
/// kDispatch and the request volume otherwise.
struct SlotEvent {
  Slot slot = 0;
  RequestId id = 0;
  EventType type = EventType::kDispatch;
  double value = 0.0;
  std::size_t tree_edges = 0;

  friend bool operator==(const SlotEvent&, const SlotEvent&) = default;
};

struct SlotReport {
  Slot slot = 0;
  std::vector<SlotEvent> events;
};

/// Writes `slot,request,event,value,tree_edges` lines (no header).
void write_records(std::ostream& out, const SlotReport& report);

/// Online deadline scheduler for P2MP transfers over fixed forwarding trees.
///
/// Each tick begins a slot: spare capacity in the starting slot is filled by
/// pulling the nearest future allocations forward, the remaining future is
/// pushed back toward deadlines, the slot is dispatched, and then the slot's
/// arrivals go through tree selection, admission and ALAP placement.
/// Admitted requests are never evicted.
class Scheduler {
 public:
  /// Hard cap on re-push passes; exceeding it throws std::logic_error.
  static constexpr int kMaxRepushPasses = 100;

  explicit Scheduler(const Topology& topology, Slot start = 0);

  const Topology& topology() const { return *topology_; }
  const Timeline& timeline() const { return timeline_; }
  Slot now() const { return timeline_.now(); }

  /// Active (admitted, not completed) requests keyed by id.
  const std::map<RequestId, TransferRequest>& active() const { return active_; }

  /// Selects a tree, checks the total tree bandwidth up to the deadline
  /// against the volume and, on success, places the request ALAP. The
  /// request's state, residual and tree are updated in place.
  AdmissionDecision admit(TransferRequest& request);

  /// The admission test on a given tree: true iff the available bandwidth
  /// summed over (now, deadline] is at least `volume` (within kEpsilon).
  bool feasible_on_tree(const ForwardingTree& tree, Slot deadline, double volume,
                        double* available = nullptr) const;

  /// Fills slots from the deadline backward, taking whatever the tree has
  /// free in each. Throws std::logic_error if the volume does not fit.
  AllocationSchedule allocate_alap(TransferRequest& request, const ForwardingTree& tree);

  /// Moves future allocations into slot now()+1 while every edge of the
  /// owner's tree has spare capacity there, nearest slots first.
  void pull_back();

  /// Slides allocations at slots >= now()+2 as late as capacity and
  /// deadlines allow, until a full pass moves nothing. Returns the number of
  /// passes.
  int repush_alap();

  /// Runs one slot. Arrivals must carry arrival_slot == now() + 1.
  SlotReport tick(std::vector<TransferRequest> arrivals);

  /// Deadline guarantee, schedule/residual agreement and timeline audit.
  std::vector<std::string> check_invariants() const;

  double admitted_volume() const { return admitted_volume_; }
  double rejected_volume() const { return rejected_volume_; }
  std::size_t admitted_count() const { return admitted_count_; }
  std::size_t rejected_count() const { return rejected_count_; }

 private:
  std::vector<RequestId> update_order() const;
  void move(RequestId id, const ForwardingTree& tree, Slot from, Slot to, double amount);

  const Topology* topology_;
  Timeline timeline_;
  std::map<RequestId, TransferRequest> active_;
  double admitted_volume_ = 0.0;
  double rejected_volume_ = 0.0;
  std::size_t admitted_count_ = 0;
  std::size_t rejected_count_ = 0;
};

}  // namespace ddccast
