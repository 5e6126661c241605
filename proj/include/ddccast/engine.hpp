// Copyright 2026 The DDCCast Simulator Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "ddccast/request.hpp"
#include "ddccast/scheduler.hpp"
#include "ddccast/topology.hpp"
#include "ddccast/workload.hpp"

namespace ddccast {

enum class SchedulerKind { kDdccast, kP2pAlap };

std::string to_string(SchedulerKind kind);
/// Accepts "ddccast" and "p2p-alap"; throws ConfigError("scheduler") otherwise.
SchedulerKind parse_scheduler(const std::string& name);

/// Whole-run totals. Traffic volumes count one copy per destination, so
/// a P2MP request of volume V to n datacenters offers n*V, and the
/// decomposition baseline (one leg per destination) is measured on the same
/// scale.
struct RunMetrics {
  double total_bandwidth_used = 0.0;    // sum of rate x tree edges over all slots
  double total_traffic_admitted = 0.0;
  double total_traffic_offered = 0.0;
  double completed_edge_volume = 0.0;   // sum of volume x |E_T| over completions
  std::size_t admitted_count = 0;
  std::size_t rejected_count = 0;
  std::size_t completed_count = 0;
  Slot last_slot = 0;                   // final slot including the drain phase
  std::vector<double> utilization;      // per slot, fraction of total edge capacity

  double admit_ratio() const;
  friend bool operator==(const RunMetrics&, const RunMetrics&) = default;
};

/// Called after every tick with the report and the scheduler that produced it.
using TickObserver = std::function<void(const SlotReport&, const Scheduler&)>;

/// Replays `requests` (sorted by arrival) for slots 1..total_slots, then
/// keeps ticking without arrivals until every admitted request completes.
RunMetrics run(const Topology& topology, const std::vector<TransferRequest>& requests,
               Slot total_slots, SchedulerKind kind, const TickObserver& observer = {});

/// Generates the workload of `config` and runs it.
RunMetrics run(const Topology& topology, const WorkloadConfig& config, SchedulerKind kind,
               const TickObserver& observer = {});

struct Scenario {
  double lambda = 2.0;
  std::size_t dest_count = 3;
  Slot slots = 500;
  double deadline_mean = 10.0;
  double demand_divisor = 8.0;

  /// Stable identity used for seed derivation.
  std::string key() const;
  WorkloadConfig workload(std::uint64_t seed) const;
};

/// Seed of repeat `repeat` of a scenario. Depends only on the base seed,
/// the scenario key and the repeat index.
std::uint64_t derive_seed(std::uint64_t base_seed, const Scenario& scenario, int repeat);

struct ExperimentRow {
  SchedulerKind scheduler = SchedulerKind::kDdccast;
  Scenario scenario;
  int repeats = 1;
  std::uint64_t seed = 0;  // base seed
  double total_bandwidth_used = 0.0;   // means over repeats
  double total_traffic_admitted = 0.0;
  double total_traffic_offered = 0.0;
  double admit_ratio = 0.0;            // mean admitted / mean offered
};

/// Runs every (scenario, scheduler, repeat) on up to `threads` workers (0 =
/// hardware concurrency). Both schedulers see the same workload for a given
/// scenario and repeat. Rows come out in scenario order, then scheduler
/// order, independent of completion order.
std::vector<ExperimentRow> run_experiment(const Topology& topology,
                                          const std::vector<Scenario>& sweep,
                                          const std::vector<SchedulerKind>& schedulers,
                                          int repeats, std::uint64_t base_seed,
                                          unsigned threads = 0);

}  // namespace ddccast
