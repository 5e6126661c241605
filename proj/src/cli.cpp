// Copyright 2026 The DDCCast Simulator Authors
// SPDX-License-Identifier: Apache-2.0

#include "ddccast/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "ddccast/errors.hpp"
#include "ddccast/kernels.hpp"
#include "ddccast/topology.hpp"
#include "ddccast/workload.hpp"

#ifndef DDCCAST_DEFAULT_TOPOLOGY
#define DDCCAST_DEFAULT_TOPOLOGY "data/gscale.topo"
#endif

namespace ddccast::cli {
namespace {

std::string fixed6(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6f", v);
  return buf;
}

std::string exact(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

struct Cell {
  std::string scheduler, lambda, dest_count, slots, repeats, seed, bandwidth, admitted, offered,
      ratio;
};

Cell format_row(const ExperimentRow& r) {
  return {to_string(r.scheduler),
          fixed6(r.scenario.lambda),
          std::to_string(r.scenario.dest_count),
          std::to_string(r.scenario.slots),
          std::to_string(r.repeats),
          std::to_string(r.seed),
          fixed6(r.total_bandwidth_used),
          fixed6(r.total_traffic_admitted),
          fixed6(r.total_traffic_offered),
          fixed6(r.admit_ratio)};
}

}  // namespace

std::filesystem::path default_topology_path() {
  if (const char* env = std::getenv("DDCCAST_TOPOLOGY"); env != nullptr && *env != '\0')
    return env;
  return DDCCAST_DEFAULT_TOPOLOGY;
}

Resolved resolve(const Options& options, std::size_t node_count) {
  Resolved r;
  r.options = options;
  r.topology_path = options.topology.empty() ? default_topology_path()
                                             : std::filesystem::path(options.topology);
  if (options.scheduler == "both")
    r.schedulers = {SchedulerKind::kDdccast, SchedulerKind::kP2pAlap};
  else
    r.schedulers = {parse_scheduler(options.scheduler)};
  if (options.repeats < 1) throw ConfigError("repeats", "must be at least 1");
  if (options.format != "csv" && options.format != "json")
    throw ConfigError("format", "must be csv or json");

  r.sweep = options.sweep;
  if (r.sweep.empty())
    r.sweep = (options.lambda_set || options.destinations_set || options.replay) ? "none"
                                                                                 : "destinations";
  if (options.replay) {
    if (options.trace.empty()) throw ConfigError("replay", "requires --trace");
    if (r.sweep != "none") throw ConfigError("sweep", "cannot sweep a replayed trace");
  }

  Scenario base;
  base.lambda = options.lambda;
  base.dest_count = options.destinations;
  base.slots = options.slots;
  base.deadline_mean = options.deadline_mean;
  base.demand_divisor = options.demand_divisor;
  if (r.sweep == "none") {
    r.scenarios = {base};
  } else if (r.sweep == "destinations") {
    // Destination counts 1..5 at the configured rate.
    for (std::size_t n = 1; n <= 5; ++n) {
      Scenario s = base;
      s.dest_count = n;
      r.scenarios.push_back(s);
    }
  } else if (r.sweep == "lambda") {
    for (double lambda : {0.5, 1.0, 2.0, 4.0}) {
      Scenario s = base;
      s.lambda = lambda;
      r.scenarios.push_back(s);
    }
  } else {
    throw ConfigError("sweep", "must be destinations, lambda or none");
  }
  for (const Scenario& s : r.scenarios) validate(s.workload(options.seed), node_count);
  return r;
}

void write_csv(std::ostream& out, const std::vector<ExperimentRow>& rows) {
  out << kCsvHeader << '\n';
  for (const auto& row : rows) {
    const Cell c = format_row(row);
    out << c.scheduler << ',' << c.lambda << ',' << c.dest_count << ',' << c.slots << ','
        << c.repeats << ',' << c.seed << ',' << c.bandwidth << ',' << c.admitted << ','
        << c.offered << ',' << c.ratio << '\n';
  }
}

void write_json(std::ostream& out, const std::vector<ExperimentRow>& rows) {
  // Values are the CSV's six-digit decimals, so both formats agree exactly.
  auto num = [](const std::string& s) { return std::stod(s); };
  nlohmann::ordered_json doc;
  doc["tool"] = "ddccast";
  doc["version"] = kVersion;
  doc["rows"] = nlohmann::ordered_json::array();
  for (const auto& row : rows) {
    const Cell c = format_row(row);
    nlohmann::ordered_json j;
    j["scheduler"] = c.scheduler;
    j["lambda"] = num(c.lambda);
    j["dest_count"] = row.scenario.dest_count;
    j["slots"] = row.scenario.slots;
    j["repeats"] = row.repeats;
    j["seed"] = row.seed;
    j["total_bandwidth_used"] = num(c.bandwidth);
    j["total_traffic_admitted"] = num(c.admitted);
    j["total_traffic_offered"] = num(c.offered);
    j["admit_ratio"] = num(c.ratio);
    doc["rows"].push_back(std::move(j));
  }
  out << doc.dump(2) << '\n';
}

std::string metadata(const Resolved& resolved) {
  const Options& o = resolved.options;
  std::ostringstream m;
  m << "# ddccast " << kVersion << " result metadata\n";
  m << "# regenerate with: ddccast --config <this file>\n";
  m << "topology=\"" << std::filesystem::absolute(resolved.topology_path).string() << "\"\n";
  m << "lambda=" << exact(o.lambda) << '\n';
  m << "destinations=" << o.destinations << '\n';
  m << "slots=" << o.slots << '\n';
  m << "repeats=" << o.repeats << '\n';
  m << "seed=" << o.seed << '\n';
  m << "deadline-mean=" << exact(o.deadline_mean) << '\n';
  m << "demand-divisor=" << exact(o.demand_divisor) << '\n';
  m << "scheduler=\"" << o.scheduler << "\"\n";
  m << "sweep=\"" << resolved.sweep << "\"\n";
  m << "format=\"" << o.format << "\"\n";
  if (!o.out.empty()) m << "out=\"" << o.out << "\"\n";
  if (o.replay) {
    m << "trace=\"" << std::filesystem::absolute(o.trace).string() << "\"\n";
    m << "replay=true\n";
  }
  return m.str();
}

namespace {

void print_resolved(std::ostream& err, const Resolved& r) {
  err << "# resolved configuration\n";
  std::istringstream lines(metadata(r));
  for (std::string line; std::getline(lines, line);)
    if (!line.empty() && line[0] != '#') err << "#   " << line << '\n';
  err << "#   kernels=" << kernels::active().name << '\n';
}

std::vector<ExperimentRow> replay_rows(const Resolved& r, const Topology& topology) {
  std::ifstream in(r.options.trace);
  if (!in) throw ConfigError("trace", "cannot open '" + r.options.trace + "'");
  const auto requests = read_trace(in, topology);
  const Scenario& s = r.scenarios.front();
  Slot slots = s.slots;
  if (!requests.empty() && requests.back().arrival_slot > slots)
    throw ConfigError("slots", "trace has arrivals after slot " + std::to_string(slots));
  std::vector<ExperimentRow> rows;
  for (SchedulerKind kind : r.schedulers) {
    const RunMetrics m = ddccast::run(topology, requests, slots, kind);
    ExperimentRow row;
    row.scheduler = kind;
    row.scenario = s;
    row.repeats = 1;
    row.seed = r.options.seed;
    row.total_bandwidth_used = m.total_bandwidth_used;
    row.total_traffic_admitted = m.total_traffic_admitted;
    row.total_traffic_offered = m.total_traffic_offered;
    row.admit_ratio = m.admit_ratio();
    rows.push_back(row);
  }
  return rows;
}

void write_file(const std::filesystem::path& path, const std::string& content) {
  std::ofstream file(path, std::ios::binary | std::ios::trunc);
  file << content;
  file.close();
  if (!file) throw std::runtime_error("cannot write '" + path.string() + "'");
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Deadline-aware P2MP transfer scheduling simulator", "ddccast"};
  Options o;
  app.set_config("--config", "", "Read options from a config file (same keys as the flags)");
  app.set_version_flag("--version", kVersion);
  app.add_option("--topology", o.topology, "Topology file (default: bundled GScale)");
  auto* lambda = app.add_option("--lambda", o.lambda, "Mean request arrivals per slot");
  auto* dests = app.add_option("--destinations", o.destinations, "Destinations per request");
  app.add_option("--slots", o.slots, "Slots with arrivals");
  app.add_option("--repeats", o.repeats, "Runs averaged per scenario");
  app.add_option("--seed", o.seed, "Base seed");
  app.add_option("--deadline-mean", o.deadline_mean, "Mean deadline offset in slots");
  app.add_option("--demand-divisor", o.demand_divisor, "Volume mean = window / divisor");
  app.add_option("--scheduler", o.scheduler, "ddccast, p2p-alap or both")
      ->check(CLI::IsMember({"ddccast", "p2p-alap", "both"}));
  app.add_option("--sweep", o.sweep, "destinations (1..5), lambda (0.5,1,2,4) or none")
      ->check(CLI::IsMember({"destinations", "lambda", "none"}));
  app.add_option("--format", o.format, "csv or json")->check(CLI::IsMember({"csv", "json"}));
  app.add_option("--out", o.out, "Result file; a .meta sidecar is written next to it");
  app.add_option("--trace", o.trace, "Workload trace to export (or replay with --replay)");
  app.add_flag("--replay", o.replay, "Run the workload stored in --trace");
  app.add_option("--threads", o.threads, "Worker threads (0 = all cores)");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::Success& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kUsageError;
  }
  o.lambda_set = lambda->count() > 0;
  o.destinations_set = dests->count() > 0;

  Resolved resolved;
  std::optional<Topology> topology;
  try {
    const auto path = o.topology.empty() ? default_topology_path() : std::filesystem::path(o.topology);
    if (!std::filesystem::exists(path)) throw ConfigError("topology", "no such file '" + path.string() + "'");
    try {
      topology.emplace(load_topology(path));
    } catch (const ConfigError&) {
      throw;
    } catch (const std::invalid_argument& e) {
      throw ConfigError("topology", e.what());
    }
    resolved = resolve(o, topology->node_count());
  } catch (const std::invalid_argument& e) {
    err << "ddccast: error: " << e.what() << '\n';
    return kUsageError;
  }
  print_resolved(err, resolved);

  try {
    std::vector<ExperimentRow> rows;
    if (o.replay) {
      rows = replay_rows(resolved, *topology);
    } else {
      if (!o.trace.empty()) {
        const Scenario& first = resolved.scenarios.front();
        const auto requests = generate_workload(first.workload(derive_seed(o.seed, first, 0)),
                                                topology->node_count());
        std::ostringstream trace;
        write_trace(trace, *topology, requests);
        write_file(o.trace, trace.str());
      }
      rows = run_experiment(*topology, resolved.scenarios, resolved.schedulers, o.repeats, o.seed,
                            o.threads);
    }

    std::ostringstream table;
    if (o.format == "json")
      write_json(table, rows);
    else
      write_csv(table, rows);
    if (o.out.empty()) {
      out << table.str();
    } else {
      write_file(o.out, table.str());
      write_file(o.out + ".meta", metadata(resolved));
    }
  } catch (const ConfigError& e) {
    err << "ddccast: error: " << e.what() << '\n';
    return kUsageError;
  } catch (const std::exception& e) {
    err << "ddccast: runtime failure: " << e.what() << '\n';
    return kRuntimeError;
  }
  return kOk;
}

}  // namespace ddccast::cli
