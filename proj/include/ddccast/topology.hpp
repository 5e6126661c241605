// Copyright 2026 The DDCCast Simulator Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <filesystem>
#include <istream>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "ddccast/types.hpp"

namespace ddccast {

/// A directed edge. Every undirected link contributes two of these.
struct EdgeId {
  NodeId tail = 0;
  NodeId head = 0;

  friend auto operator<=>(const EdgeId&, const EdgeId&) = default;
};

/// Datacenter graph with one uniform per-slot capacity on every directed
/// edge. Links are full duplex: a->b and b->a are reserved independently.
class Topology {
 public:
  struct Arc {
    NodeId head;
    EdgeIndex edge;
  };

  /// Validates connectivity, self-loops, duplicates and capacity; throws
  /// std::invalid_argument on violation.
  Topology(std::vector<std::string> node_names,
           const std::vector<std::pair<NodeId, NodeId>>& links,
           double capacity = 1.0);

  std::size_t node_count() const { return names_.size(); }
  std::size_t link_count() const { return edges_.size() / 2; }
  std::size_t edge_count() const { return edges_.size(); }
  double capacity() const { return capacity_; }

  const std::string& node_name(NodeId node) const { return names_.at(node); }
  std::optional<NodeId> find_node(std::string_view name) const;

  const EdgeId& edge(EdgeIndex index) const { return edges_.at(index); }
  std::optional<EdgeIndex> edge_index(NodeId tail, NodeId head) const;
  std::string edge_label(EdgeIndex index) const;

  /// Outgoing arcs of `node`, ordered by head id.
  const std::vector<Arc>& out_arcs(NodeId node) const { return out_.at(node); }

 private:
  std::vector<std::string> names_;
  std::vector<EdgeId> edges_;
  std::vector<std::vector<Arc>> out_;
  double capacity_;
};

/// Reads the line-oriented topology format:
///
///   # comment
///   capacity 1.0        (optional, defaults to 1.0)
///   node <name>         (one per datacenter)
///   link <name> <name>  (undirected, full duplex)
///
/// Errors carry the offending line number.
Topology parse_topology(std::istream& in);
Topology load_topology(const std::filesystem::path& path);

}  // namespace ddccast
