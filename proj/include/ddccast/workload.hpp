// Copyright 2026 The DDCCast Simulator Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <iosfwd>
#include <random>
#include <vector>

#include "ddccast/request.hpp"
#include "ddccast/topology.hpp"

namespace ddccast {

struct WorkloadConfig {
  double lambda = 2.0;          // mean arrivals per slot
  std::size_t dest_count = 3;   // destinations per request
  double deadline_mean = 10.0;  // mean deadline offset, slots
  double demand_divisor = 8.0;  // volume mean = window length / divisor
  Slot total_slots = 500;
  std::uint64_t seed = 0;
};

/// Throws ConfigError naming the first invalid field.
void validate(const WorkloadConfig& config, std::size_t node_count);

/// Seedable sampler with platform-independent draws: the engine is
/// std::mt19937_64 (fully specified by the standard) and every
/// distribution is written out here instead of using the
/// implementation-defined <random> distributions.
class Sampler {
 public:
  explicit Sampler(std::uint64_t seed) : engine_(seed) {}

  double uniform01();                          // [0, 1), 53 random bits
  std::uint64_t uniform_below(std::uint64_t n);  // [0, n), unbiased
  double exponential(double mean);
  std::uint64_t poisson(double lambda);        // Knuth's product method

 private:
  std::mt19937_64 engine_;
};

/// splitmix64 finalizer, used for every seed derivation.
std::uint64_t mix64(std::uint64_t x);

/// Seed of the per-slot stream of run `run_seed`.
std::uint64_t slot_seed(std::uint64_t run_seed, Slot slot);

/// Arrivals at `slot`, ids starting at `next_id` (advanced past them).
/// Count ~ Poisson(lambda); source uniform; destinations distinct and
/// uniform among the other nodes; deadline = slot + max(1, ceil(Exp(mean)));
/// volume ~ Exp((deadline - slot) / divisor), at least kEpsilon.
std::vector<TransferRequest> generate_slot_arrivals(const WorkloadConfig& config,
                                                    std::size_t node_count, Slot slot,
                                                    Sampler& rng, RequestId& next_id);

/// Every arrival of slots 1..total_slots, each slot drawn from its own
/// stream slot_seed(config.seed, slot).
std::vector<TransferRequest> generate_workload(const WorkloadConfig& config,
                                               std::size_t node_count);

/// Trace format (one request per line, volumes printed with 17 significant
/// digits so replay is exact):
///
///   # ddccast-trace v1
///   id,arrival,source,destinations,volume,deadline
///   0,1,dc03,dc01;dc07,1.2500000000000000,9
void write_trace(std::ostream& out, const Topology& topology,
                 const std::vector<TransferRequest>& requests);
std::vector<TransferRequest> read_trace(std::istream& in, const Topology& topology);

}  // namespace ddccast
