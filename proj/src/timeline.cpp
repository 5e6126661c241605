// Copyright 2026 The DDCCast Simulator Authors
// SPDX-License-Identifier: Apache-2.0

#include "ddccast/timeline.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <stdexcept>

#include "ddccast/kernels.hpp"

namespace ddccast {
namespace {

// Aggregates that drift to this after a release are treated as empty.
constexpr double kSnapToZero = 1e-12;

std::string fixed6(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6f", v);
  return buf;
}

}  // namespace

double AllocationSchedule::total() const {
  double sum = 0.0;
  for (const auto& [slot, rate] : rates) sum += rate;
  return sum;
}

Timeline::Timeline(std::size_t edge_count, double capacity, Slot now)
    : rows_(edge_count), capacity_(capacity), now_(now) {
  if (!(capacity > 0.0)) throw std::invalid_argument("timeline: capacity must be positive");
  if (now < 0) throw std::invalid_argument("timeline: negative start slot");
}

Slot Timeline::horizon() const {
  Slot h = now_;
  for (const auto& [id, s] : schedules_)
    if (!s.rates.empty()) h = std::max(h, s.rates.rbegin()->first);
  return h;
}

double Timeline::allocated(EdgeIndex edge, Slot slot) const {
  const auto& row = rows_.at(edge);
  if (slot < 0 || static_cast<std::size_t>(slot) >= row_len_) return 0.0;
  return row[static_cast<std::size_t>(slot)];
}

double Timeline::available_on_tree(const ForwardingTree& tree, Slot slot) const {
  double peak = 0.0;
  for (EdgeIndex e : tree.edges) peak = std::max(peak, allocated(e, slot));
  return std::max(capacity_ - peak, 0.0);
}

std::vector<const double*> Timeline::tree_rows(const ForwardingTree& tree) const {
  std::vector<const double*> rows;
  rows.reserve(tree.edges.size());
  for (EdgeIndex e : tree.edges) rows.push_back(rows_.at(e).data());
  return rows;
}

double Timeline::available_sum(const ForwardingTree& tree, Slot first, Slot last,
                               std::span<double> per_slot) const {
  if (last < first) return 0.0;
  const auto count = static_cast<std::size_t>(last - first + 1);
  if (!per_slot.empty() && per_slot.size() != count)
    throw std::invalid_argument("available_sum: per_slot size mismatch");
  if (first < 0) throw std::invalid_argument("available_sum: negative slot");

  // Slots past the stored rows carry no allocation.
  const auto begin = static_cast<std::size_t>(first);
  const auto end = std::min(static_cast<std::size_t>(last) + 1, std::max(row_len_, begin));
  double sum = 0.0;
  if (end > begin) {
    const auto rows = tree_rows(tree);
    sum = kernels::tree_available(rows, begin, end, capacity_,
                                  per_slot.empty() ? per_slot : per_slot.first(end - begin));
  }
  const std::size_t beyond = count - (end - begin);
  if (!per_slot.empty())
    std::fill(per_slot.begin() + static_cast<std::ptrdiff_t>(end - begin), per_slot.end(), capacity_);
  return sum + static_cast<double>(beyond) * capacity_;
}

double Timeline::window_load(EdgeIndex edge, Slot first, Slot last) const {
  if (last < first) return 0.0;
  if (first < 0) throw std::invalid_argument("window_load: negative slot");
  const auto begin = static_cast<std::size_t>(first);
  const auto end = std::min(static_cast<std::size_t>(last) + 1, row_len_);
  if (end <= begin) return 0.0;
  const auto& row = rows_.at(edge);
  return kernels::row_sum(std::span<const double>(row.data() + begin, end - begin));
}

void Timeline::ensure_rows(Slot slot) {
  const auto need = static_cast<std::size_t>(slot) + 1;
  if (need <= row_len_) return;
  // Padding to a multiple of four keeps the vector loops free of tails.
  const std::size_t len = (std::max(need, row_len_ * 2) + 3) & ~std::size_t{3};
  for (auto& row : rows_) row.resize(len, 0.0);
  row_len_ = len;
}

void Timeline::reserve(RequestId id, const ForwardingTree& tree, Slot slot, double rate) {
  if (rate == 0.0) return;
  if (!(rate > 0.0) || !std::isfinite(rate))
    throw std::logic_error("reserve: rate must be positive");
  if (slot <= now_) throw std::logic_error("reserve: slot " + std::to_string(slot) + " is not in the future");
  if (tree.edges.empty()) throw std::logic_error("reserve: empty tree");

  auto it = schedules_.find(id);
  if (it != schedules_.end() && it->second.tree != tree)
    throw std::logic_error("reserve: request " + std::to_string(id) + " already uses a different tree");
  for (EdgeIndex e : tree.edges) {
    if (allocated(e, slot) + rate > capacity_ + kEpsilon)
      throw std::logic_error("reserve: oversubscription on edge " + std::to_string(e) +
                             " at slot " + std::to_string(slot));
  }

  ensure_rows(slot);
  for (EdgeIndex e : tree.edges) rows_.at(e)[static_cast<std::size_t>(slot)] += rate;
  if (it == schedules_.end()) it = schedules_.emplace(id, AllocationSchedule{id, tree, {}}).first;
  it->second.rates[slot] += rate;
}

double Timeline::release(RequestId id, Slot slot) {
  auto it = schedules_.find(id);
  if (it == schedules_.end()) return 0.0;
  auto& rates = it->second.rates;
  auto entry = rates.find(slot);
  if (entry == rates.end()) return 0.0;
  const double rate = entry->second;
  rates.erase(entry);
  for (EdgeIndex e : it->second.tree.edges) {
    double& cell = rows_.at(e)[static_cast<std::size_t>(slot)];
    cell -= rate;
    if (std::abs(cell) <= kSnapToZero) cell = 0.0;
  }
  if (rates.empty()) schedules_.erase(it);
  return rate;
}

DispatchResult Timeline::advance_slot() {
  ++now_;
  DispatchResult result;
  result.slot = now_;
  for (auto it = schedules_.begin(); it != schedules_.end();) {
    auto& rates = it->second.rates;
    if (auto entry = rates.find(now_); entry != rates.end()) {
      result.sent.push_back({it->first, entry->second, it->second.tree.edges.size()});
      rates.erase(entry);
    }
    if (rates.empty()) {
      result.completed.push_back(it->first);
      it = schedules_.erase(it);
      continue;
    }
    ++it;
  }
  if (static_cast<std::size_t>(now_) < row_len_)
    for (auto& row : rows_) row[static_cast<std::size_t>(now_)] = 0.0;
  return result;
}

const AllocationSchedule* Timeline::schedule(RequestId id) const {
  auto it = schedules_.find(id);
  return it == schedules_.end() ? nullptr : &it->second;
}

std::vector<std::string> Timeline::audit() const {
  std::vector<std::string> problems;
  std::vector<std::vector<double>> expected(rows_.size(), std::vector<double>(row_len_, 0.0));
  for (const auto& [id, s] : schedules_) {
    for (const auto& [slot, rate] : s.rates) {
      if (slot <= now_)
        problems.push_back("request " + std::to_string(id) + " holds past slot " + std::to_string(slot));
      if (!(rate > 0.0) || rate > capacity_ + kEpsilon)
        problems.push_back("request " + std::to_string(id) + " has rate " + fixed6(rate) +
                           " at slot " + std::to_string(slot));
      if (slot < 0 || static_cast<std::size_t>(slot) >= row_len_) {
        problems.push_back("request " + std::to_string(id) + " slot outside rows");
        continue;
      }
      for (EdgeIndex e : s.tree.edges) expected[e][static_cast<std::size_t>(slot)] += rate;
    }
  }
  for (std::size_t e = 0; e < rows_.size(); ++e) {
    for (std::size_t t = 0; t < row_len_; ++t) {
      const double have = rows_[e][t];
      if (std::abs(have - expected[e][t]) > kEpsilon)
        problems.push_back("edge " + std::to_string(e) + " slot " + std::to_string(t) +
                           ": aggregate " + fixed6(have) + " != schedules " + fixed6(expected[e][t]));
      if (have > capacity_ + kEpsilon || have < -kEpsilon)
        problems.push_back("edge " + std::to_string(e) + " slot " + std::to_string(t) +
                           ": allocation " + fixed6(have) + " outside [0, capacity]");
    }
  }
  return problems;
}

std::string Timeline::dump(const Topology& topology, Slot first, Slot last) const {
  std::string out = "slot";
  for (EdgeIndex e = 0; e < rows_.size(); ++e) out += "," + topology.edge_label(e);
  out += '\n';
  for (Slot t = first; t <= last; ++t) {
    out += std::to_string(t);
    for (EdgeIndex e = 0; e < rows_.size(); ++e) out += "," + fixed6(allocated(e, t));
    out += '\n';
  }
  return out;
}

}  // namespace ddccast
