// Copyright 2026 The DDCCast Simulator Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

// Brute-force reference checks for small instances. Nothing here calls the
// scheduler, tree selection or kernels; inputs are plain data so that the
// checks cannot inherit a bug from the code they verify.

#include <span>
#include <string>
#include <vector>

#include "ddccast/scheduler.hpp"
#include "ddccast/topology.hpp"

namespace ddccast::oracle {

inline constexpr std::size_t kMaxSteinerNodes = 8;
inline constexpr std::size_t kMaxWindow = 12;
inline constexpr std::size_t kMaxFixpointRequests = 4;

struct SteinerOptimum {
  double weight = 0.0;
  std::vector<EdgeIndex> edges;
};

/// Minimum-weight arborescence rooted at `root` spanning `terminals`, by
/// enumerating every Steiner-node subset and every parent assignment.
/// Throws std::length_error above kMaxSteinerNodes nodes.
SteinerOptimum brute_steiner(const Topology& topology, std::span<const double> weights,
                             NodeId root, std::span<const NodeId> terminals);

/// Independent admission check: `alloc[i][k]` is the load on tree edge i at
/// the k-th slot of the window. Feasible iff sum over the window of
/// min_i(capacity - alloc[i][k]) (clamped at 0) >= volume - 1e-9.
/// Throws std::length_error for windows longer than kMaxWindow.
bool brute_feasibility(const std::vector<std::vector<double>>& alloc, double capacity,
                       double volume);

struct Violation {
  RequestId id = 0;
  Slot from = 0;
  Slot to = 0;
  double volume = 0.0;
};

/// Single moves (request, slot s, later slot t <= deadline) that could shift
/// more than `tolerance` of the request's rate at s to t. Aggregates are
/// recomputed from the schedules. Empty means the state is an ALAP
/// fixpoint.
std::vector<Violation> verify_alap_fixpoint(const Scheduler& scheduler, double tolerance = 1e-7);

/// The same enumeration on a bare timeline plus deadlines.
std::vector<Violation> verify_alap_fixpoint(const Timeline& timeline,
                                            const std::map<RequestId, Slot>& deadlines,
                                            double tolerance = 1e-7);

}  // namespace ddccast::oracle
