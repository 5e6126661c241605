// Copyright 2026 The DDCCast Simulator Authors
// SPDX-License-Identifier: Apache-2.0

#include "ddccast/engine.hpp"

#include <gtest/gtest.h>

#include "ddccast/errors.hpp"
#include "test_support.hpp"

namespace ddccast {
namespace {

Topology gscale() { return load_topology(DDCCAST_SOURCE_DIR "/data/gscale.topo"); }

TEST(Engine, ZeroArrivalsGiveZeroMetrics) {
  const Topology topo = gscale();
  WorkloadConfig c;
  c.lambda = 0.0;
  c.total_slots = 20;
  for (SchedulerKind kind : {SchedulerKind::kDdccast, SchedulerKind::kP2pAlap}) {
    const RunMetrics m = run(topo, c, kind);
    EXPECT_EQ(m.total_bandwidth_used, 0.0);
    EXPECT_EQ(m.total_traffic_admitted, 0.0);
    EXPECT_EQ(m.total_traffic_offered, 0.0);
    EXPECT_EQ(m.admit_ratio(), 0.0);
    EXPECT_EQ(m.last_slot, 20);
  }
}

TEST(Engine, BandwidthIsVolumeTimesTreeEdges) {
  const Topology topo = testing::line(4);
  const std::vector<TransferRequest> reqs{make_request(0, 0, {3}, 2.0, 5, 1)};
  const RunMetrics m = run(topo, reqs, 1, SchedulerKind::kDdccast);
  EXPECT_DOUBLE_EQ(m.total_bandwidth_used, 6.0);
  EXPECT_DOUBLE_EQ(m.total_traffic_admitted, 2.0);
  EXPECT_DOUBLE_EQ(m.completed_edge_volume, 6.0);
  EXPECT_EQ(m.completed_count, 1u);
  EXPECT_EQ(m.last_slot, 3);  // pulled forward into slots 2 and 3
}

TEST(Engine, CopiesCountPerDestination) {
  const Topology topo = testing::star(3);
  const std::vector<TransferRequest> reqs{make_request(0, 1, {2, 3}, 1.0, 4, 1)};
  const RunMetrics tree = run(topo, reqs, 1, SchedulerKind::kDdccast);
  const RunMetrics legs = run(topo, reqs, 1, SchedulerKind::kP2pAlap);
  EXPECT_DOUBLE_EQ(tree.total_traffic_offered, 2.0);
  EXPECT_DOUBLE_EQ(legs.total_traffic_offered, 2.0);
  EXPECT_DOUBLE_EQ(tree.total_traffic_admitted, 2.0);
  EXPECT_DOUBLE_EQ(legs.total_traffic_admitted, 2.0);
  EXPECT_DOUBLE_EQ(tree.total_bandwidth_used, 3.0);  // n1>n0 shared
  EXPECT_DOUBLE_EQ(legs.total_bandwidth_used, 4.0);
}

TEST(Engine, RunIsDeterministic) {
  const Topology topo = gscale();
  WorkloadConfig c;
  c.lambda = 2.0;
  c.dest_count = 3;
  c.total_slots = 60;
  c.seed = 17;
  EXPECT_EQ(run(topo, c, SchedulerKind::kDdccast), run(topo, c, SchedulerKind::kDdccast));
}

TEST(Engine, DrainsEveryAdmittedRequest) {
  const Topology topo = gscale();
  WorkloadConfig c;
  c.lambda = 3.0;
  c.dest_count = 2;
  c.total_slots = 80;
  c.seed = 4;
  std::size_t remaining = 1;
  const RunMetrics m = run(topo, c, SchedulerKind::kDdccast,
                           [&](const SlotReport&, const Scheduler& s) { remaining = s.active().size(); });
  EXPECT_EQ(remaining, 0u);
  EXPECT_EQ(m.completed_count, m.admitted_count);
  EXPECT_NEAR(m.total_bandwidth_used, m.completed_edge_volume, 1e-9 * static_cast<double>(m.admitted_count + 1));
  EXPECT_LE(m.total_traffic_admitted, m.total_traffic_offered);
  EXPECT_GE(m.last_slot, 80);
}

TEST(Engine, UnsortedTraceIsRejected) {
  const Topology topo = testing::line(3);
  const std::vector<TransferRequest> reqs{make_request(0, 0, {2}, 1.0, 5, 2),
                                          make_request(1, 0, {2}, 1.0, 5, 1)};
  EXPECT_THROW(run(topo, reqs, 3, SchedulerKind::kDdccast), std::invalid_argument);
}

TEST(Engine, SchedulerNames) {
  EXPECT_EQ(parse_scheduler("ddccast"), SchedulerKind::kDdccast);
  EXPECT_EQ(parse_scheduler("p2p-alap"), SchedulerKind::kP2pAlap);
  EXPECT_THROW(parse_scheduler("amoeba"), ConfigError);
  EXPECT_EQ(to_string(SchedulerKind::kP2pAlap), "p2p-alap");
}

TEST(Experiment, SeedsDependOnScenarioNotPosition) {
  Scenario a, b;
  a.dest_count = 1;
  b.dest_count = 2;
  EXPECT_NE(derive_seed(1, a, 0), derive_seed(1, b, 0));
  EXPECT_NE(derive_seed(1, a, 0), derive_seed(1, a, 1));
  EXPECT_NE(derive_seed(1, a, 0), derive_seed(2, a, 0));
  EXPECT_EQ(derive_seed(1, a, 3), derive_seed(1, a, 3));
}

TEST(Experiment, DestinationSweepShape) {
  const Topology topo = gscale();
  std::vector<Scenario> sweep;
  for (std::size_t n = 1; n <= 5; ++n) {
    Scenario s;
    s.lambda = 2.0;
    s.dest_count = n;
    s.slots = 40;
    sweep.push_back(s);
  }
  const auto rows = run_experiment(topo, sweep, {SchedulerKind::kDdccast, SchedulerKind::kP2pAlap}, 2, 5, 2);
  ASSERT_EQ(rows.size(), 10u);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    EXPECT_EQ(rows[i].scenario.dest_count, i / 2 + 1);
    EXPECT_EQ(rows[i].scheduler, i % 2 == 0 ? SchedulerKind::kDdccast : SchedulerKind::kP2pAlap);
    EXPECT_EQ(rows[i].repeats, 2);
    // Same workload; only the summation order differs.
    EXPECT_NEAR(rows[i].total_traffic_offered, rows[i - i % 2].total_traffic_offered, 1e-9);
  }
  // One destination: the two schedulers make identical decisions.
  EXPECT_NEAR(rows[0].total_bandwidth_used, rows[1].total_bandwidth_used, 1e-9);
  EXPECT_NEAR(rows[0].total_traffic_admitted, rows[1].total_traffic_admitted, 1e-9);

  // Adding a scenario leaves the existing rows unchanged; so does the
  // thread count.
  auto more = sweep;
  more.insert(more.begin(), Scenario{});
  more.front().slots = 40;
  const auto rows2 = run_experiment(topo, more, {SchedulerKind::kDdccast, SchedulerKind::kP2pAlap}, 2, 5, 1);
  for (std::size_t i = 0; i < rows.size(); ++i)
    EXPECT_EQ(rows2[i + 2].total_bandwidth_used, rows[i].total_bandwidth_used);
}

TEST(Experiment, RejectsBadSettings) {
  const Topology topo = gscale();
  Scenario s;
  s.dest_count = 20;
  EXPECT_THROW(run_experiment(topo, {s}, {SchedulerKind::kDdccast}, 1, 0), ConfigError);
  EXPECT_THROW(run_experiment(topo, {Scenario{}}, {SchedulerKind::kDdccast}, 0, 0), ConfigError);
}

}  // namespace
}  // namespace ddccast
