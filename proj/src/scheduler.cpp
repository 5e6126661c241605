// Copyright 2026 The DDCCast Simulator Authors
// SPDX-License-Identifier: Apache-2.0

#include "ddccast/scheduler.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <ostream>
#include <stdexcept>
#include <tuple>

#include "ddccast/tree_selection.hpp"

namespace ddccast {

std::string to_string(EventType type) {
  switch (type) {
    case EventType::kDispatch: return "dispatch";
    case EventType::kAdmit: return "admit";
    case EventType::kReject: return "reject";
    case EventType::kComplete: return "complete";
  }
  return "unknown";
}

void write_records(std::ostream& out, const SlotReport& report) {
  char value[64];
  for (const SlotEvent& e : report.events) {
    std::snprintf(value, sizeof value, "%.6f", e.value);
    out << e.slot << ',' << e.id << ',' << to_string(e.type) << ',' << value << ','
        << e.tree_edges << '\n';
  }
}

Scheduler::Scheduler(const Topology& topology, Slot start)
    : topology_(&topology), timeline_(topology.edge_count(), topology.capacity(), start) {}

bool Scheduler::feasible_on_tree(const ForwardingTree& tree, Slot deadline, double volume,
                                 double* available) const {
  const double total = timeline_.available_sum(tree, now() + 1, deadline);
  if (available != nullptr) *available = total;
  return total >= volume - kEpsilon;
}

AdmissionDecision Scheduler::admit(TransferRequest& request) {
  if (request.state != RequestState::kPending)
    throw std::logic_error("admit: request " + std::to_string(request.id) + " is not pending");
  if (active_.contains(request.id))
    throw std::logic_error("admit: duplicate request id " + std::to_string(request.id));

  AdmissionDecision decision;
  if (request.deadline < now() + 1) {
    decision.reason = "expired";
  } else {
    if (auto problem = check_request(request, topology_->node_count()); !problem.empty())
      throw std::invalid_argument("admit: request " + std::to_string(request.id) + ": " + problem);
    ForwardingTree tree = select_tree(*topology_, request, timeline_);
    decision.accepted = feasible_on_tree(tree, request.deadline, request.volume, &decision.available);
    if (decision.accepted) {
      allocate_alap(request, tree);
      decision.tree = std::move(tree);
    } else {
      decision.reason = "capacity";
    }
  }

  if (decision.accepted) {
    request.state = RequestState::kAdmitted;
    request.residual = request.volume;
    request.tree = decision.tree;
    active_.emplace(request.id, request);
    admitted_volume_ += request.volume;
    ++admitted_count_;
  } else {
    request.state = RequestState::kRejected;
    rejected_volume_ += request.volume;
    ++rejected_count_;
  }
  return decision;
}

AllocationSchedule Scheduler::allocate_alap(TransferRequest& request, const ForwardingTree& tree) {
  const Slot first = now() + 1;
  const Slot last = request.deadline;
  if (last < first) throw std::logic_error("allocate_alap: deadline has passed");
  std::vector<double> avail(static_cast<std::size_t>(last - first + 1));
  const double total = timeline_.available_sum(tree, first, last, avail);
  if (total < request.volume - kEpsilon)
    throw std::logic_error("allocate_alap: request " + std::to_string(request.id) + " does not fit");

  double remaining = request.volume;
  Slot earliest = last + 1;
  for (Slot t = last; t >= first && remaining > 0.0; --t) {
    const double a = avail[static_cast<std::size_t>(t - first)];
    if (remaining <= a + kEpsilon) {
      timeline_.reserve(request.id, tree, t, remaining);
      remaining = 0.0;
    } else if (a > 0.0) {
      timeline_.reserve(request.id, tree, t, a);
      remaining -= a;
      earliest = t;
    }
  }
  if (remaining > 0.0) {
    // Summation-order leftover (bounded by kEpsilon) goes on the earliest slot.
    if (earliest > last) throw std::logic_error("allocate_alap: nothing placed");
    const double rate = timeline_.release(request.id, earliest);
    timeline_.reserve(request.id, tree, earliest, rate + remaining);
  }
  return *timeline_.schedule(request.id);
}

std::vector<RequestId> Scheduler::update_order() const {
  std::vector<std::pair<Slot, RequestId>> keyed;
  keyed.reserve(active_.size());
  for (const auto& [id, r] : active_) keyed.emplace_back(r.deadline, id);
  std::sort(keyed.begin(), keyed.end());
  std::vector<RequestId> order;
  order.reserve(keyed.size());
  for (const auto& [deadline, id] : keyed) order.push_back(id);
  return order;
}

void Scheduler::move(RequestId id, const ForwardingTree& tree, Slot from, Slot to, double amount) {
  const double rate = timeline_.release(id, from);
  if (rate - amount > 0.0) timeline_.reserve(id, tree, from, rate - amount);
  timeline_.reserve(id, tree, to, amount);
}

void Scheduler::pull_back() {
  const Slot current = now() + 1;
  for (RequestId id : update_order()) {
    const ForwardingTree& tree = *active_.at(id).tree;
    for (;;) {
      const AllocationSchedule* schedule = timeline_.schedule(id);
      if (schedule == nullptr) break;
      auto source = schedule->rates.upper_bound(current);
      if (source == schedule->rates.end()) break;
      const double spare = timeline_.available_on_tree(tree, current);
      if (spare <= kEpsilon) break;
      const double rate = source->second;
      move(id, tree, source->first, current, rate - spare <= kEpsilon ? rate : spare);
    }
  }
}

int Scheduler::repush_alap() {
  const Slot first = now() + 2;
  for (int pass = 1; pass <= kMaxRepushPasses; ++pass) {
    const auto order = update_order();
    std::vector<std::tuple<Slot, std::size_t, RequestId>> items;
    for (std::size_t rank = 0; rank < order.size(); ++rank) {
      const AllocationSchedule* schedule = timeline_.schedule(order[rank]);
      if (schedule == nullptr) continue;
      for (auto it = schedule->rates.lower_bound(first); it != schedule->rates.end(); ++it)
        items.emplace_back(it->first, rank, order[rank]);
    }
    std::sort(items.begin(), items.end());

    bool moved = false;
    std::vector<double> avail;
    for (const auto& [slot, rank, id] : items) {
      const TransferRequest& request = active_.at(id);
      if (slot >= request.deadline) continue;
      const AllocationSchedule* schedule = timeline_.schedule(id);
      auto entry = schedule->rates.find(slot);
      if (entry == schedule->rates.end()) continue;
      double remaining = entry->second;
      const ForwardingTree& tree = *request.tree;

      avail.assign(static_cast<std::size_t>(request.deadline - slot), 0.0);
      timeline_.available_sum(tree, slot + 1, request.deadline, avail);
      for (Slot t = request.deadline; t > slot && remaining > 0.0; --t) {
        const double a = avail[static_cast<std::size_t>(t - slot - 1)];
        if (a <= kEpsilon) continue;
        const double amount = remaining - a <= kEpsilon ? remaining : a;
        move(id, tree, slot, t, amount);
        remaining -= amount;
        moved = true;
      }
    }
    if (!moved) return pass;
  }
  throw std::logic_error("repush_alap: no fixpoint after " + std::to_string(kMaxRepushPasses) +
                         " passes");
}

SlotReport Scheduler::tick(std::vector<TransferRequest> arrivals) {
  SlotReport report;
  report.slot = now() + 1;
  for (const TransferRequest& r : arrivals)
    if (r.arrival_slot != report.slot)
      throw std::invalid_argument("tick: request " + std::to_string(r.id) + " arrives at slot " +
                                  std::to_string(r.arrival_slot) + ", expected " +
                                  std::to_string(report.slot));

  pull_back();
  repush_alap();
  const DispatchResult dispatched = timeline_.advance_slot();
  for (const Dispatch& d : dispatched.sent) {
    TransferRequest& r = active_.at(d.id);
    r.residual = std::max(r.residual - d.rate, 0.0);
    report.events.push_back({report.slot, d.id, EventType::kDispatch, d.rate, d.tree_edges});
  }
  for (RequestId id : dispatched.completed) {
    auto it = active_.find(id);
    it->second.state = RequestState::kCompleted;
    it->second.residual = 0.0;
    report.events.push_back({report.slot, id, EventType::kComplete, it->second.volume,
                             it->second.tree->size()});
    active_.erase(it);
  }

  for (TransferRequest& r : arrivals) {
    const AdmissionDecision decision = admit(r);
    if (decision.accepted)
      report.events.push_back({report.slot, r.id, EventType::kAdmit, r.volume, decision.tree->size()});
    else
      report.events.push_back({report.slot, r.id, EventType::kReject, r.volume, 0});
  }
  return report;
}

std::vector<std::string> Scheduler::check_invariants() const {
  std::vector<std::string> problems = timeline_.audit();
  for (const auto& [id, r] : active_) {
    const std::string who = "request " + std::to_string(id);
    if (r.state != RequestState::kAdmitted) problems.push_back(who + " active but " + to_string(r.state));
    if (!r.tree) {
      problems.push_back(who + " has no tree");
      continue;
    }
    const AllocationSchedule* schedule = timeline_.schedule(id);
    if (schedule == nullptr) {
      problems.push_back(who + " has no schedule");
      continue;
    }
    if (std::abs(schedule->total() - r.residual) > kEpsilon)
      problems.push_back(who + " schedule does not sum to its residual");
    if (!schedule->rates.empty() && (schedule->rates.begin()->first <= now() ||
                                     schedule->rates.rbegin()->first > r.deadline))
      problems.push_back(who + " scheduled outside (now, deadline]");
  }
  for (const auto& [id, s] : timeline_.schedules())
    if (!active_.contains(id)) problems.push_back("orphan schedule " + std::to_string(id));
  return problems;
}

}  // namespace ddccast
