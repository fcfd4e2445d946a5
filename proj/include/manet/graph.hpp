#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "manet/mobility.hpp"
#include "manet/types.hpp"

namespace manet {

/// Undirected neighbor relation over a fixed universe of node IDs
/// [0, capacity). Only IDs that were added are part of the graph; the rest are
/// absent (dead or not yet arrived).
class NeighborGraph {
 public:
  NeighborGraph() = default;
  explicit NeighborGraph(std::size_t capacity);

  void add_node(NodeId v);
  /// Adds the undirected edge u-v. Both endpoints must be present; self-edges
  /// are rejected.
  void add_edge(NodeId u, NodeId v);

  std::size_t capacity() const { return present_.size(); }
  std::size_t size() const { return ids_.size(); }
  bool contains(NodeId v) const { return v < present_.size() && present_[v] != 0; }
  bool adjacent(NodeId u, NodeId v) const;

  /// Present IDs in ascending order.
  const std::vector<NodeId>& node_ids() const { return ids_; }
  /// Neighbors of v in ascending order.
  std::span<const NodeId> neighbors(NodeId v) const { return adjacency_[v]; }
  std::size_t degree(NodeId v) const { return adjacency_[v].size(); }
  std::size_t edge_count() const;

  friend bool operator==(const NeighborGraph& a, const NeighborGraph& b) {
    return a.present_ == b.present_ && a.adjacency_ == b.adjacency_;
  }

 private:
  std::vector<std::uint8_t> present_;
  std::vector<NodeId> ids_;
  std::vector<std::vector<NodeId>> adjacency_;
  std::vector<std::uint8_t> matrix_;
};

/// How a directed "within range of" relation is made symmetric.
enum class LinkRule : std::uint8_t {
  Mutual,  // dist <= range(u) and dist <= range(v)
  Either,  // dist <= range(u) or dist <= range(v)
};

/// Disk-model neighbor graph. positions and ranges are indexed by node ID;
/// `members` lists the IDs taking part (all IDs when empty).
NeighborGraph build_neighbor_graph(std::span<const Position> positions,
                                   std::span<const double> ranges,
                                   std::span<const NodeId> members = {},
                                   LinkRule rule = LinkRule::Mutual);

/// Connected components of the present nodes, each sorted, ordered by their
/// smallest ID.
std::vector<std::vector<NodeId>> connected_components(const NeighborGraph& g);

/// Hop distance from `source` to every ID, restricted to nodes where
/// `allowed[id]` is nonzero (source is always allowed). -1 when unreachable.
std::vector<int> bfs_hops(const NeighborGraph& g, NodeId source,
                          std::span<const std::uint8_t> allowed = {});

}  // namespace manet

namespace manet {

/// Subgraph induced by `ids`, keeping the same ID universe.
NeighborGraph induced_subgraph(const NeighborGraph& g, std::span<const NodeId> ids);

}  // namespace manet
