// Copyright 2026 The DDCCast Simulator Authors
// SPDX-License-Identifier: Apache-2.0

#include "ddccast/engine.hpp"

#include <algorithm>
#include <atomic>
#include <cstdio>
#include <exception>
#include <mutex>
#include <stdexcept>
#include <thread>
#include <unordered_map>

#include "ddccast/baseline.hpp"
#include "ddccast/errors.hpp"

namespace ddccast {

std::string to_string(SchedulerKind kind) {
  switch (kind) {
    case SchedulerKind::kDdccast: return "ddccast";
    case SchedulerKind::kP2pAlap: return "p2p-alap";
  }
  return "unknown";
}

SchedulerKind parse_scheduler(const std::string& name) {
  if (name == "ddccast") return SchedulerKind::kDdccast;
  if (name == "p2p-alap") return SchedulerKind::kP2pAlap;
  throw ConfigError("scheduler", "unknown scheduler '" + name + "' (ddccast|p2p-alap)");
}

double RunMetrics::admit_ratio() const {
  return total_traffic_offered > 0.0 ? total_traffic_admitted / total_traffic_offered : 0.0;
}

namespace {

class Accumulator {
 public:
  Accumulator(const Topology& topology, RunMetrics& metrics)
      : slot_capacity_(static_cast<double>(topology.edge_count()) * topology.capacity()),
        metrics_(metrics) {}

  void offer(const TransferRequest& r, std::size_t copies) {
    copies_[r.id] = copies;
    metrics_.total_traffic_offered += r.volume * static_cast<double>(copies);
  }

  void record(const SlotReport& report) {
    double slot_bandwidth = 0.0;
    for (const SlotEvent& e : report.events) {
      switch (e.type) {
        case EventType::kDispatch:
          slot_bandwidth += e.value * static_cast<double>(e.tree_edges);
          break;
        case EventType::kAdmit:
          metrics_.total_traffic_admitted += e.value * static_cast<double>(copies_.at(e.id));
          ++metrics_.admitted_count;
          break;
        case EventType::kReject:
          ++metrics_.rejected_count;
          break;
        case EventType::kComplete:
          metrics_.completed_edge_volume += e.value * static_cast<double>(e.tree_edges);
          ++metrics_.completed_count;
          break;
      }
    }
    metrics_.total_bandwidth_used += slot_bandwidth;
    metrics_.utilization.push_back(slot_bandwidth / slot_capacity_);
    metrics_.last_slot = report.slot;
  }

 private:
  double slot_capacity_;
  RunMetrics& metrics_;
  std::unordered_map<RequestId, std::size_t> copies_;
};

}  // namespace

RunMetrics run(const Topology& topology, const std::vector<TransferRequest>& requests,
               Slot total_slots, SchedulerKind kind, const TickObserver& observer) {
  RunMetrics metrics;
  Accumulator acc(topology, metrics);
  auto next = requests.begin();
  auto arrivals_at = [&](Slot slot) {
    std::vector<TransferRequest> batch;
    if (next != requests.end() && next->arrival_slot < slot)
      throw std::invalid_argument("run: requests not sorted by arrival slot");
    for (; next != requests.end() && next->arrival_slot == slot; ++next) batch.push_back(*next);
    return batch;
  };

  if (kind == SchedulerKind::kDdccast) {
    Scheduler scheduler(topology);
    for (Slot slot = 1; slot <= total_slots || !scheduler.active().empty(); ++slot) {
      auto batch = slot <= total_slots ? arrivals_at(slot) : std::vector<TransferRequest>{};
      for (const auto& r : batch) acc.offer(r, r.destinations.size());
      const SlotReport report = scheduler.tick(std::move(batch));
      acc.record(report);
      if (observer) observer(report, scheduler);
    }
  } else {
    baseline::P2pAlapScheduler p2p(topology);
    RequestId next_leg = 0;
    for (Slot slot = 1; slot <= total_slots || !p2p.scheduler().active().empty(); ++slot) {
      auto batch = slot <= total_slots ? arrivals_at(slot) : std::vector<TransferRequest>{};
      for (const auto& r : batch)
        for (const auto& leg : baseline::decompose(r, next_leg)) {
          acc.offer(leg, 1);
          ++next_leg;
        }
      const SlotReport report = p2p.tick(batch);
      acc.record(report);
      if (observer) observer(report, p2p.scheduler());
    }
  }
  if (next != requests.end()) throw std::invalid_argument("run: requests arrive after the last slot");
  return metrics;
}

RunMetrics run(const Topology& topology, const WorkloadConfig& config, SchedulerKind kind,
               const TickObserver& observer) {
  return run(topology, generate_workload(config, topology.node_count()), config.total_slots, kind,
             observer);
}

std::string Scenario::key() const {
  char buf[160];
  std::snprintf(buf, sizeof buf, "lambda=%.17g;dest=%zu;slots=%lld;deadline=%.17g;divisor=%.17g",
                lambda, dest_count, static_cast<long long>(slots), deadline_mean, demand_divisor);
  return buf;
}

WorkloadConfig Scenario::workload(std::uint64_t seed) const {
  WorkloadConfig c;
  c.lambda = lambda;
  c.dest_count = dest_count;
  c.total_slots = slots;
  c.deadline_mean = deadline_mean;
  c.demand_divisor = demand_divisor;
  c.seed = seed;
  return c;
}

std::uint64_t derive_seed(std::uint64_t base_seed, const Scenario& scenario, int repeat) {
  // FNV-1a over the key, then mixed with the base seed and repeat index.
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : scenario.key()) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return mix64(mix64(base_seed ^ h) + static_cast<std::uint64_t>(repeat));
}

std::vector<ExperimentRow> run_experiment(const Topology& topology,
                                          const std::vector<Scenario>& sweep,
                                          const std::vector<SchedulerKind>& schedulers,
                                          int repeats, std::uint64_t base_seed,
                                          unsigned threads) {
  if (repeats < 1) throw ConfigError("repeats", "must be at least 1");
  if (schedulers.empty()) throw ConfigError("scheduler", "no scheduler selected");
  for (const auto& s : sweep) validate(s.workload(0), topology.node_count());

  struct Task {
    std::size_t scenario;
    int repeat;
  };
  std::vector<Task> tasks;
  for (std::size_t s = 0; s < sweep.size(); ++s)
    for (int r = 0; r < repeats; ++r) tasks.push_back({s, r});

  // results[task][scheduler]
  std::vector<std::vector<RunMetrics>> results(tasks.size());
  std::atomic<std::size_t> cursor{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  auto worker = [&] {
    for (std::size_t i; (i = cursor.fetch_add(1)) < tasks.size();) {
      try {
        const Scenario& scenario = sweep[tasks[i].scenario];
        const WorkloadConfig config =
            scenario.workload(derive_seed(base_seed, scenario, tasks[i].repeat));
        const auto requests = generate_workload(config, topology.node_count());
        for (SchedulerKind kind : schedulers)
          results[i].push_back(run(topology, requests, config.total_slots, kind));
      } catch (...) {
        std::lock_guard lock(failure_mutex);
        if (!failure) failure = std::current_exception();
      }
    }
  };

  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  threads = static_cast<unsigned>(std::min<std::size_t>(threads, std::max<std::size_t>(tasks.size(), 1)));
  {
    std::vector<std::jthread> pool;
    for (unsigned t = 1; t < threads; ++t) pool.emplace_back(worker);
    worker();
  }
  if (failure) std::rethrow_exception(failure);

  std::vector<ExperimentRow> rows;
  for (std::size_t s = 0; s < sweep.size(); ++s) {
    for (std::size_t k = 0; k < schedulers.size(); ++k) {
      ExperimentRow row;
      row.scheduler = schedulers[k];
      row.scenario = sweep[s];
      row.repeats = repeats;
      row.seed = base_seed;
      // Summed in repeat order so the mean does not depend on scheduling.
      for (std::size_t i = 0; i < tasks.size(); ++i) {
        if (tasks[i].scenario != s) continue;
        const RunMetrics& m = results[i][k];
        row.total_bandwidth_used += m.total_bandwidth_used;
        row.total_traffic_admitted += m.total_traffic_admitted;
        row.total_traffic_offered += m.total_traffic_offered;
      }
      row.total_bandwidth_used /= repeats;
      row.total_traffic_admitted /= repeats;
      row.total_traffic_offered /= repeats;
      row.admit_ratio = row.total_traffic_offered > 0.0
                            ? row.total_traffic_admitted / row.total_traffic_offered
                            : 0.0;
      rows.push_back(row);
    }
  }
  return rows;
}

}  // namespace ddccast
