// Copyright 2026 The DDCCast Simulator Authors
// SPDX-License-Identifier: Apache-2.0

#include "ddccast/workload.hpp"

#include <cmath>
#include <cstdio>
#include <istream>
#include <limits>
#include <ostream>
#include <sstream>
#include <string>

#include "ddccast/errors.hpp"

namespace ddccast {

void validate(const WorkloadConfig& config, std::size_t node_count) {
  if (!(config.lambda >= 0.0) || !std::isfinite(config.lambda))
    throw ConfigError("lambda", "must be a nonnegative number");
  if (config.lambda > 500.0) throw ConfigError("lambda", "must be at most 500");
  if (config.dest_count < 1) throw ConfigError("destinations", "must be at least 1");
  if (config.dest_count + 1 > node_count)
    throw ConfigError("destinations", "must be at most " + std::to_string(node_count - 1) +
                                          " on a " + std::to_string(node_count) + "-node topology");
  if (!(config.deadline_mean > 0.0) || !std::isfinite(config.deadline_mean))
    throw ConfigError("deadline_mean", "must be positive");
  if (!(config.demand_divisor > 0.0) || !std::isfinite(config.demand_divisor))
    throw ConfigError("demand_divisor", "must be positive");
  if (config.total_slots < 1) throw ConfigError("slots", "must be at least 1");
}

double Sampler::uniform01() {
  return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
}

std::uint64_t Sampler::uniform_below(std::uint64_t n) {
  // Reject the top partial bucket so every residue is equally likely.
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                              std::numeric_limits<std::uint64_t>::max() % n;
  std::uint64_t x;
  do {
    x = engine_();
  } while (x >= limit);
  return x % n;
}

double Sampler::exponential(double mean) {
  return -mean * std::log1p(-uniform01());
}

std::uint64_t Sampler::poisson(double lambda) {
  if (lambda <= 0.0) return 0;
  const double threshold = std::exp(-lambda);
  std::uint64_t k = 0;
  double product = uniform01();
  while (product > threshold) {
    ++k;
    product *= uniform01();
  }
  return k;
}

std::uint64_t mix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

std::uint64_t slot_seed(std::uint64_t run_seed, Slot slot) {
  return mix64(mix64(run_seed) ^ static_cast<std::uint64_t>(slot));
}

std::vector<TransferRequest> generate_slot_arrivals(const WorkloadConfig& config,
                                                    std::size_t node_count, Slot slot,
                                                    Sampler& rng, RequestId& next_id) {
  if (config.dest_count + 1 > node_count)
    throw ConfigError("destinations", "must be smaller than the node count");
  const std::uint64_t count = rng.poisson(config.lambda);
  std::vector<TransferRequest> out;
  out.reserve(count);
  std::vector<NodeId> pool;
  for (std::uint64_t i = 0; i < count; ++i) {
    const auto source = static_cast<NodeId>(rng.uniform_below(node_count));
    pool.clear();
    for (NodeId n = 0; n < node_count; ++n)
      if (n != source) pool.push_back(n);
    // Partial Fisher-Yates: the first dest_count entries are the sample.
    for (std::size_t k = 0; k < config.dest_count; ++k) {
      const auto pick = k + rng.uniform_below(pool.size() - k);
      std::swap(pool[k], pool[pick]);
    }
    std::vector<NodeId> destinations(pool.begin(),
                                     pool.begin() + static_cast<std::ptrdiff_t>(config.dest_count));

    const double offset_draw = rng.exponential(config.deadline_mean);
    const Slot offset = std::max<Slot>(1, static_cast<Slot>(std::ceil(offset_draw)));
    const Slot deadline = slot + offset;
    const double volume =
        std::max(kEpsilon, rng.exponential(static_cast<double>(offset) / config.demand_divisor));
    out.push_back(make_request(next_id++, source, std::move(destinations), volume, deadline, slot));
  }
  return out;
}

std::vector<TransferRequest> generate_workload(const WorkloadConfig& config,
                                               std::size_t node_count) {
  validate(config, node_count);
  std::vector<TransferRequest> all;
  RequestId next_id = 0;
  for (Slot slot = 1; slot <= config.total_slots; ++slot) {
    Sampler rng(slot_seed(config.seed, slot));
    for (auto& r : generate_slot_arrivals(config, node_count, slot, rng, next_id))
      all.push_back(std::move(r));
  }
  return all;
}

void write_trace(std::ostream& out, const Topology& topology,
                 const std::vector<TransferRequest>& requests) {
  out << "# ddccast-trace v1\n";
  out << "id,arrival,source,destinations,volume,deadline\n";
  char volume[64];
  for (const auto& r : requests) {
    out << r.id << ',' << r.arrival_slot << ',' << topology.node_name(r.source) << ',';
    for (std::size_t i = 0; i < r.destinations.size(); ++i)
      out << (i ? ";" : "") << topology.node_name(r.destinations[i]);
    std::snprintf(volume, sizeof volume, "%.17g", r.volume);
    out << ',' << volume << ',' << r.deadline << '\n';
  }
}

std::vector<TransferRequest> read_trace(std::istream& in, const Topology& topology) {
  std::vector<TransferRequest> requests;
  std::string line;
  int line_no = 0;
  bool header_seen = false;
  auto fail = [&](const std::string& what) {
    throw std::invalid_argument("trace line " + std::to_string(line_no) + ": " + what);
  };
  auto node = [&](const std::string& name) {
    auto id = topology.find_node(name);
    if (!id) fail("unknown node '" + name + "'");
    return *id;
  };
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty() || line[0] == '#') continue;
    if (!header_seen) {
      if (line != "id,arrival,source,destinations,volume,deadline") fail("unexpected header");
      header_seen = true;
      continue;
    }
    std::vector<std::string> cols;
    std::stringstream ss(line);
    for (std::string col; std::getline(ss, col, ',');) cols.push_back(col);
    if (cols.size() != 6) fail("expected 6 columns");
    std::vector<NodeId> destinations;
    std::stringstream ds(cols[3]);
    for (std::string d; std::getline(ds, d, ';');) destinations.push_back(node(d));
    TransferRequest r;
    try {
      r = make_request(std::stoull(cols[0]), node(cols[2]), std::move(destinations),
                       std::stod(cols[4]), std::stoll(cols[5]), std::stoll(cols[1]));
    } catch (const std::logic_error&) {
      fail("malformed number");
    }
    if (auto problem = check_request(r, topology.node_count()); !problem.empty()) fail(problem);
    if (!requests.empty() && r.arrival_slot < requests.back().arrival_slot)
      fail("arrivals out of order");
    requests.push_back(std::move(r));
  }
  if (!header_seen) throw std::invalid_argument("trace: missing header");
  return requests;
}

}  // namespace ddccast
