// Copyright 2026 The DDCCast Simulator Authors
// SPDX-License-Identifier: Apache-2.0

#include "ddccast/timeline.hpp"

#include <gtest/gtest.h>

#include <fstream>
#include <sstream>

#include "test_support.hpp"

namespace ddccast {
namespace {

// Tree over the two forward edges of the line n0 - n1 - n2.
struct LineFixture : ::testing::Test {
  Topology topo = testing::line(3);
  ForwardingTree tree{0, {2}, {*topo.edge_index(0, 1), *topo.edge_index(1, 2)}};
  Timeline timeline{topo.edge_count(), 1.0};
};

TEST_F(LineFixture, AvailableIsMinOfResiduals) {
  EXPECT_DOUBLE_EQ(timeline.available_on_tree(tree, 1), 1.0);
  timeline.reserve(7, ForwardingTree{0, {1}, {tree.edges[0]}}, 1, 0.3);
  timeline.reserve(8, ForwardingTree{1, {2}, {tree.edges[1]}}, 1, 0.7);
  EXPECT_DOUBLE_EQ(timeline.available_on_tree(tree, 1), 0.3);
  timeline.reserve(9, ForwardingTree{1, {2}, {tree.edges[1]}}, 2, 1.0);
  EXPECT_DOUBLE_EQ(timeline.available_on_tree(tree, 2), 0.0);
}

TEST_F(LineFixture, ReserveTouchesEveryTreeEdge) {
  timeline.reserve(1, tree, 1, 0.5);
  EXPECT_DOUBLE_EQ(timeline.allocated(tree.edges[0], 1), 0.5);
  EXPECT_DOUBLE_EQ(timeline.allocated(tree.edges[1], 1), 0.5);
  EXPECT_DOUBLE_EQ(timeline.allocated(*topo.edge_index(1, 0), 1), 0.0);
}

TEST_F(LineFixture, ReserveZeroIsNoop) {
  timeline.reserve(1, tree, 1, 0.0);
  EXPECT_TRUE(timeline.schedules().empty());
  EXPECT_DOUBLE_EQ(timeline.allocated(tree.edges[0], 1), 0.0);
}

TEST_F(LineFixture, ReservationsAdd) {
  timeline.reserve(1, tree, 1, 0.4);
  timeline.reserve(2, tree, 1, 0.6);
  EXPECT_DOUBLE_EQ(timeline.allocated(tree.edges[0], 1), 1.0);
  EXPECT_DOUBLE_EQ(timeline.available_on_tree(tree, 1), 0.0);
  EXPECT_THROW(timeline.reserve(3, tree, 1, 0.01), std::logic_error);
}

TEST_F(LineFixture, ReserveRejectsPastSlotsAndTreeChanges) {
  EXPECT_THROW(timeline.reserve(1, tree, 0, 0.5), std::logic_error);
  timeline.reserve(1, tree, 1, 0.5);
  EXPECT_THROW(timeline.reserve(1, ForwardingTree{0, {1}, {tree.edges[0]}}, 2, 0.5), std::logic_error);
}

TEST_F(LineFixture, ReleaseInvertsReserve) {
  const std::string before = timeline.dump(topo, 1, 3);
  timeline.reserve(1, tree, 2, 0.5);
  EXPECT_DOUBLE_EQ(timeline.release(1, 2), 0.5);
  EXPECT_EQ(timeline.dump(topo, 1, 3), before);
  EXPECT_TRUE(timeline.schedules().empty());
  EXPECT_DOUBLE_EQ(timeline.release(1, 2), 0.0);
  EXPECT_DOUBLE_EQ(timeline.release(99, 5), 0.0);
}

TEST_F(LineFixture, ReleaseOneOfTwoSharers) {
  timeline.reserve(1, tree, 1, 0.25);
  timeline.reserve(2, ForwardingTree{0, {1}, {tree.edges[0]}}, 1, 0.5);
  timeline.release(1, 1);
  EXPECT_DOUBLE_EQ(timeline.allocated(tree.edges[0], 1), 0.5);
  EXPECT_DOUBLE_EQ(timeline.allocated(tree.edges[1], 1), 0.0);
}

TEST_F(LineFixture, AdvanceDispatchesAndCompletes) {
  timeline.reserve(1, tree, 1, 1.0);
  const DispatchResult d = timeline.advance_slot();
  EXPECT_EQ(d.slot, 1);
  EXPECT_EQ(timeline.now(), 1);
  ASSERT_EQ(d.sent.size(), 1u);
  EXPECT_EQ(d.sent[0].id, 1u);
  EXPECT_DOUBLE_EQ(d.sent[0].rate, 1.0);
  EXPECT_EQ(d.sent[0].tree_edges, 2u);
  EXPECT_EQ(d.completed, std::vector<RequestId>{1});
  EXPECT_TRUE(timeline.audit().empty());
}

TEST_F(LineFixture, AdvanceWithNothingActive) {
  const DispatchResult d = timeline.advance_slot();
  EXPECT_TRUE(d.sent.empty());
  EXPECT_TRUE(d.completed.empty());
}

TEST_F(LineFixture, PartialDispatchKeepsRequestActive) {
  timeline.reserve(1, tree, 1, 1.0);
  timeline.reserve(1, tree, 2, 1.0);
  timeline.reserve(1, tree, 3, 0.5);
  const DispatchResult d = timeline.advance_slot();
  EXPECT_TRUE(d.completed.empty());
  EXPECT_DOUBLE_EQ(timeline.schedule(1)->total(), 1.5);
}

TEST_F(LineFixture, WindowLoadAndAvailableSum) {
  timeline.reserve(1, tree, 1, 0.5);
  timeline.reserve(1, tree, 2, 0.25);
  EXPECT_DOUBLE_EQ(timeline.window_load(tree.edges[0], 1, 2), 0.75);
  EXPECT_DOUBLE_EQ(timeline.window_load(tree.edges[0], 3, 400), 0.0);
  std::vector<double> per_slot(4);
  // Slots past the stored rows count as fully free.
  EXPECT_DOUBLE_EQ(timeline.available_sum(tree, 1, 4, per_slot), 0.5 + 0.75 + 1.0 + 1.0);
  EXPECT_EQ(per_slot, (std::vector<double>{0.5, 0.75, 1.0, 1.0}));
  EXPECT_DOUBLE_EQ(timeline.available_sum(tree, 10, 1009), 1000.0);
}

TEST_F(LineFixture, HorizonTracksLatestAllocation) {
  EXPECT_EQ(timeline.horizon(), 0);
  timeline.reserve(1, tree, 6, 0.5);
  EXPECT_EQ(timeline.horizon(), 6);
}

TEST_F(LineFixture, DumpMatchesGolden) {
  timeline.reserve(1, tree, 1, 0.5);
  timeline.reserve(2, ForwardingTree{2, {1}, {*topo.edge_index(2, 1)}}, 2, 0.75);
  std::ifstream golden(DDCCAST_SOURCE_DIR "/tests/golden/timeline_dump.txt");
  ASSERT_TRUE(golden);
  std::stringstream expected;
  expected << golden.rdbuf();
  EXPECT_EQ(timeline.dump(topo, 1, 3), expected.str());
}

}  // namespace
}  // namespace ddccast
