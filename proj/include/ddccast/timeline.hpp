// Copyright 2026 The DDCCast Simulator Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <map>
#include <span>
#include <string>
#include <vector>

#include "ddccast/forwarding_tree.hpp"
#include "ddccast/topology.hpp"
#include "ddccast/types.hpp"

namespace ddccast {

/// Per-slot rates of one request over its fixed tree. Only future slots
/// (after the timeline's current slot) ever appear in `rates`.
struct AllocationSchedule {
  RequestId id = 0;
  ForwardingTree tree;
  std::map<Slot, double> rates;

  double total() const;
};

struct Dispatch {
  RequestId id = 0;
  double rate = 0.0;
  std::size_t tree_edges = 0;
};

struct DispatchResult {
  Slot slot = 0;
  std::vector<Dispatch> sent;           // ordered by request id
  std::vector<RequestId> completed;     // schedules that became empty
};

/// Slotted reservation calendar. alloc(e, t) is the total rate reserved on
/// directed edge e during slot t; it always equals the sum of the schedules
/// whose tree contains e.
///
/// Storage is one dense row per edge indexed by absolute slot so that the
/// window reductions in kernels.hpp can stream over it.
class Timeline {
 public:
  Timeline(std::size_t edge_count, double capacity, Slot now = 0);

  Slot now() const { return now_; }
  /// Latest slot holding any allocation, or now() when idle.
  Slot horizon() const;
  double capacity() const { return capacity_; }
  std::size_t edge_count() const { return rows_.size(); }

  double allocated(EdgeIndex edge, Slot slot) const;

  /// min over tree edges of (capacity - alloc), clamped at zero.
  double available_on_tree(const ForwardingTree& tree, Slot slot) const;

  /// Sum of available_on_tree over [first, last]. When `per_slot` is
  /// non-empty it must hold last - first + 1 entries and receives each term.
  double available_sum(const ForwardingTree& tree, Slot first, Slot last,
                       std::span<double> per_slot = {}) const;

  /// Sum of alloc(edge, t) over [first, last].
  double window_load(EdgeIndex edge, Slot first, Slot last) const;

  /// Adds `rate` on every tree edge at `slot`. Throws std::logic_error on
  /// oversubscription beyond capacity + kEpsilon or on a past slot.
  void reserve(RequestId id, const ForwardingTree& tree, Slot slot, double rate);

  /// Removes the request's whole allocation at `slot` and returns it; 0 when
  /// there was none.
  double release(RequestId id, Slot slot);

  /// Moves to the next slot and hands out what was reserved for it.
  DispatchResult advance_slot();

  const std::map<RequestId, AllocationSchedule>& schedules() const { return schedules_; }
  const AllocationSchedule* schedule(RequestId id) const;

  /// Recomputes every aggregate from the schedules; returns one message per
  /// inconsistency or capacity violation.
  std::vector<std::string> audit() const;

  /// Slot x edge matrix of allocations, fixed six-digit formatting.
  std::string dump(const Topology& topology, Slot first, Slot last) const;

 private:
  void ensure_rows(Slot slot);
  std::vector<const double*> tree_rows(const ForwardingTree& tree) const;

  std::vector<std::vector<double>> rows_;  // [edge][slot]
  std::size_t row_len_ = 0;
  std::map<RequestId, AllocationSchedule> schedules_;
  double capacity_;
  Slot now_;
};

}  // namespace ddccast
