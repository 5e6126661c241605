// Copyright 2026 The DDCCast Simulator Authors
// SPDX-License-Identifier: Apache-2.0

#include "ddccast/topology.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <set>
#include <sstream>
#include <stdexcept>
#include <unordered_map>

namespace ddccast {

Topology::Topology(std::vector<std::string> node_names,
                   const std::vector<std::pair<NodeId, NodeId>>& links,
                   double capacity)
    : names_(std::move(node_names)), out_(names_.size()), capacity_(capacity) {
  if (names_.empty()) throw std::invalid_argument("topology: no nodes");
  if (!(capacity_ > 0.0) || !std::isfinite(capacity_))
    throw std::invalid_argument("topology: capacity must be positive");
  std::set<std::string> seen_names;
  for (const auto& name : names_) {
    if (name.empty()) throw std::invalid_argument("topology: empty node name");
    if (!seen_names.insert(name).second)
      throw std::invalid_argument("topology: duplicate node '" + name + "'");
  }

  std::set<std::pair<NodeId, NodeId>> seen_links;
  for (auto [a, b] : links) {
    if (a >= names_.size() || b >= names_.size())
      throw std::invalid_argument("topology: link endpoint out of range");
    if (a == b)
      throw std::invalid_argument("topology: self-loop on '" + names_[a] + "'");
    if (!seen_links.insert(std::minmax(a, b)).second)
      throw std::invalid_argument("topology: duplicate link " + names_[a] + "-" +
                                  names_[b]);
    out_[a].push_back({b, edges_.size()});
    edges_.push_back({a, b});
    out_[b].push_back({a, edges_.size()});
    edges_.push_back({b, a});
  }
  for (auto& arcs : out_)
    std::sort(arcs.begin(), arcs.end(),
              [](const Arc& x, const Arc& y) { return x.head < y.head; });

  std::vector<bool> reached(names_.size(), false);
  std::vector<NodeId> stack{0};
  reached[0] = true;
  std::size_t count = 1;
  while (!stack.empty()) {
    const NodeId n = stack.back();
    stack.pop_back();
    for (const Arc& arc : out_[n]) {
      if (!reached[arc.head]) {
        reached[arc.head] = true;
        ++count;
        stack.push_back(arc.head);
      }
    }
  }
  if (count != names_.size())
    throw std::invalid_argument("topology: graph is not connected");
}

std::optional<NodeId> Topology::find_node(std::string_view name) const {
  for (NodeId i = 0; i < names_.size(); ++i)
    if (names_[i] == name) return i;
  return std::nullopt;
}

std::optional<EdgeIndex> Topology::edge_index(NodeId tail, NodeId head) const {
  if (tail >= out_.size()) return std::nullopt;
  for (const Arc& arc : out_[tail])
    if (arc.head == head) return arc.edge;
  return std::nullopt;
}

std::string Topology::edge_label(EdgeIndex index) const {
  const EdgeId& e = edge(index);
  return names_[e.tail] + ">" + names_[e.head];
}

Topology parse_topology(std::istream& in) {
  std::vector<std::string> names;
  std::unordered_map<std::string, NodeId> ids;
  std::vector<std::pair<std::string, std::string>> raw_links;
  std::vector<int> link_lines;
  double capacity = 1.0;

  std::string line;
  int line_no = 0;
  auto fail = [&](const std::string& what) {
    throw std::invalid_argument("topology line " + std::to_string(line_no) + ": " + what);
  };
  while (std::getline(in, line)) {
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream fields(line);
    std::string keyword;
    if (!(fields >> keyword)) continue;
    std::string extra;
    if (keyword == "capacity") {
      if (!(fields >> capacity) || (fields >> extra)) fail("expected 'capacity <number>'");
    } else if (keyword == "node") {
      std::string name;
      if (!(fields >> name) || (fields >> extra)) fail("expected 'node <name>'");
      if (ids.contains(name)) fail("duplicate node '" + name + "'");
      ids.emplace(name, static_cast<NodeId>(names.size()));
      names.push_back(name);
    } else if (keyword == "link") {
      std::string a, b;
      if (!(fields >> a >> b) || (fields >> extra)) fail("expected 'link <node> <node>'");
      raw_links.emplace_back(a, b);
      link_lines.push_back(line_no);
    } else {
      fail("unknown keyword '" + keyword + "'");
    }
  }

  std::vector<std::pair<NodeId, NodeId>> links;
  for (std::size_t i = 0; i < raw_links.size(); ++i) {
    line_no = link_lines[i];
    auto a = ids.find(raw_links[i].first);
    auto b = ids.find(raw_links[i].second);
    if (a == ids.end()) fail("unknown node '" + raw_links[i].first + "'");
    if (b == ids.end()) fail("unknown node '" + raw_links[i].second + "'");
    links.emplace_back(a->second, b->second);
  }
  return Topology(std::move(names), links, capacity);
}

Topology load_topology(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open topology file '" + path.string() + "'");
  return parse_topology(in);
}

}  // namespace ddccast
