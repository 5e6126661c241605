// Copyright 2026 The DDCCast Simulator Authors
// SPDX-License-Identifier: Apache-2.0

#include "oracle/oracle.hpp"

#include <gtest/gtest.h>

#include "ddccast/scheduler.hpp"
#include "test_support.hpp"

namespace ddccast::oracle {
namespace {

TEST(BruteSteiner, TriangleAdjacentTerminals) {
  const Topology topo(testing::names(3), {{0, 1}, {1, 2}, {0, 2}});
  const std::vector<double> w(topo.edge_count(), 1.5);
  const auto best = brute_steiner(topo, w, 0, std::vector<NodeId>{1});
  EXPECT_DOUBLE_EQ(best.weight, 1.5);
  EXPECT_EQ(best.edges, std::vector<EdgeIndex>{*topo.edge_index(0, 1)});
}

TEST(BruteSteiner, StarUsesHub) {
  const Topology topo = testing::star(4);
  const std::vector<double> w(topo.edge_count(), 1.0);
  const auto best = brute_steiner(topo, w, 1, std::vector<NodeId>{2, 3});
  EXPECT_DOUBLE_EQ(best.weight, 3.0);
  EXPECT_EQ(best.edges.size(), 3u);
}

TEST(BruteSteiner, FindsSteinerPointCheaperThanPaths) {
  // Root n0, terminals n1 n2; direct links cost 3, via n3 cost 1 each.
  const Topology topo(testing::names(4), {{0, 1}, {0, 2}, {0, 3}, {3, 1}, {3, 2}});
  std::vector<double> w(topo.edge_count(), 1.0);
  w[*topo.edge_index(0, 1)] = 3.0;
  w[*topo.edge_index(0, 2)] = 3.0;
  EXPECT_DOUBLE_EQ(brute_steiner(topo, w, 0, std::vector<NodeId>{1, 2}).weight, 3.0);
}

TEST(BruteSteiner, SizeGuard) {
  const Topology topo = testing::line(9);
  const std::vector<double> w(topo.edge_count(), 1.0);
  EXPECT_THROW(brute_steiner(topo, w, 0, std::vector<NodeId>{8}), std::length_error);
}

TEST(BruteFeasibility, Boundary) {
  const std::vector<std::vector<double>> empty3{{0.0, 0.0, 0.0}, {0.0, 0.0, 0.0}};
  EXPECT_TRUE(brute_feasibility(empty3, 1.0, 3.0));
  EXPECT_FALSE(brute_feasibility(empty3, 1.0, 3.0 + 1e-6));
  EXPECT_TRUE(brute_feasibility({{0.5, 1.0, 0.25}, {0.25, 0.0, 0.5}}, 1.0, 1.0));
  EXPECT_FALSE(brute_feasibility({{0.5, 1.0, 0.25}, {0.25, 0.0, 0.5}}, 1.0, 1.01));
  EXPECT_THROW(brute_feasibility({std::vector<double>(13, 0.0)}, 1.0, 1.0), std::length_error);
}

TEST(AlapFixpoint, FreshAllocationHasNoViolations) {
  const Topology topo = testing::line(3);
  Scheduler s(topo);
  TransferRequest r = make_request(1, 0, {2}, 2.5, 6, 0);
  ASSERT_TRUE(s.admit(r).accepted);
  EXPECT_TRUE(verify_alap_fixpoint(s).empty());
}

TEST(AlapFixpoint, EarlyShiftedScheduleIsReported) {
  const Topology topo = testing::line(2);
  Timeline tl(topo.edge_count(), 1.0);
  const ForwardingTree t{0, {1}, {0}};
  tl.reserve(1, t, 2, 1.0);  // deadline 4 leaves slots 3 and 4 free
  const auto v = verify_alap_fixpoint(tl, {{1, 4}});
  ASSERT_EQ(v.size(), 2u);
  EXPECT_EQ(v[0].from, 2);
  EXPECT_EQ(v[0].to, 3);
  EXPECT_DOUBLE_EQ(v[0].volume, 1.0);
}

}  // namespace
}  // namespace ddccast::oracle
