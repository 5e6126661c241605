// Copyright 2026 The DDCCast Simulator Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <string>
#include <vector>

#include "ddccast/engine.hpp"

namespace ddccast::cli {

inline constexpr const char* kVersion = "1.0.0";

/// Exit codes of the ddccast tool.
enum ExitCode : int { kOk = 0, kUsageError = 1, kRuntimeError = 2 };

/// Raw option values after flag/config-file merging.
struct Options {
  std::string topology;        // empty: $DDCCAST_TOPOLOGY or the bundled GScale file
  double lambda = 2.0;
  std::size_t destinations = 3;
  Slot slots = 500;
  int repeats = 10;
  std::uint64_t seed = 1;
  double deadline_mean = 10.0;
  double demand_divisor = 8.0;
  std::string scheduler = "both";  // ddccast | p2p-alap | both
  std::string sweep;               // destinations | lambda | none; empty = auto
  std::string format = "csv";
  std::string out;                 // empty: stdout, no sidecar
  std::string trace;
  bool replay = false;
  unsigned threads = 0;
  bool lambda_set = false;
  bool destinations_set = false;
};

/// Everything needed to produce a result table.
struct Resolved {
  Options options;
  std::filesystem::path topology_path;
  std::string sweep;  // never empty
  std::vector<Scenario> scenarios;
  std::vector<SchedulerKind> schedulers;
};

std::filesystem::path default_topology_path();

/// Applies defaults and sweep presets and validates every field against
/// `node_count`. Throws ConfigError.
Resolved resolve(const Options& options, std::size_t node_count);

inline const char* kCsvHeader =
    "scheduler,lambda,dest_count,slots,repeats,seed,total_bandwidth_used,"
    "total_traffic_admitted,total_traffic_offered,admit_ratio";

void write_csv(std::ostream& out, const std::vector<ExperimentRow>& rows);
void write_json(std::ostream& out, const std::vector<ExperimentRow>& rows);

/// Config-file text that reproduces `resolved` when passed to --config.
std::string metadata(const Resolved& resolved);

/// Full tool behaviour; `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace ddccast::cli
