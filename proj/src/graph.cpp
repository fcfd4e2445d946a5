#include "manet/graph.hpp"

#include <algorithm>
#include <deque>
#include <stdexcept>

namespace manet {

NeighborGraph::NeighborGraph(std::size_t capacity)
    : present_(capacity, 0), adjacency_(capacity), matrix_(capacity * capacity, 0) {}

void NeighborGraph::add_node(NodeId v) {
  if (v >= present_.size()) throw std::out_of_range("NeighborGraph::add_node: id beyond capacity");
  if (present_[v]) return;
  present_[v] = 1;
  ids_.insert(std::lower_bound(ids_.begin(), ids_.end(), v), v);
}

void NeighborGraph::add_edge(NodeId u, NodeId v) {
  if (u == v) throw std::invalid_argument("NeighborGraph::add_edge: self-edge");
  if (!contains(u) || !contains(v)) {
    throw std::invalid_argument("NeighborGraph::add_edge: endpoint not present");
  }
  const std::size_t n = present_.size();
  if (matrix_[u * n + v]) return;
  matrix_[u * n + v] = matrix_[v * n + u] = 1;
  auto insert_sorted = [](std::vector<NodeId>& list, NodeId x) {
    list.insert(std::lower_bound(list.begin(), list.end(), x), x);
  };
  insert_sorted(adjacency_[u], v);
  insert_sorted(adjacency_[v], u);
}

bool NeighborGraph::adjacent(NodeId u, NodeId v) const {
  const std::size_t n = present_.size();
  if (u >= n || v >= n) return false;
  return matrix_[u * n + v] != 0;
}

std::size_t NeighborGraph::edge_count() const {
  std::size_t twice = 0;
  for (const auto& list : adjacency_) twice += list.size();
  return twice / 2;
}

NeighborGraph build_neighbor_graph(std::span<const Position> positions,
                                   std::span<const double> ranges,
                                   std::span<const NodeId> members, LinkRule rule) {
  if (positions.size() != ranges.size()) {
    throw std::invalid_argument("build_neighbor_graph: positions/ranges size mismatch");
  }
  NeighborGraph g(positions.size());
  std::vector<NodeId> ids;
  if (members.empty()) {
    ids.resize(positions.size());
    for (std::size_t i = 0; i < ids.size(); ++i) ids[i] = static_cast<NodeId>(i);
  } else {
    ids.assign(members.begin(), members.end());
    std::sort(ids.begin(), ids.end());
  }
  for (NodeId v : ids) g.add_node(v);

  // Pairs are visited in ascending order, so each insert lands at the back.
  for (std::size_t i = 0; i < ids.size(); ++i) {
    const NodeId u = ids[i];
    for (std::size_t j = i + 1; j < ids.size(); ++j) {
      const NodeId v = ids[j];
      const double d = distance(positions[u], positions[v]);
      const bool in_u = d <= ranges[u];
      const bool in_v = d <= ranges[v];
      const bool linked = rule == LinkRule::Mutual ? (in_u && in_v) : (in_u || in_v);
      if (linked) g.add_edge(u, v);
    }
  }
  return g;
}

std::vector<std::vector<NodeId>> connected_components(const NeighborGraph& g) {
  std::vector<std::vector<NodeId>> out;
  std::vector<std::uint8_t> seen(g.capacity(), 0);
  for (NodeId root : g.node_ids()) {
    if (seen[root]) continue;
    std::vector<NodeId> comp;
    std::deque<NodeId> frontier{root};
    seen[root] = 1;
    while (!frontier.empty()) {
      const NodeId u = frontier.front();
      frontier.pop_front();
      comp.push_back(u);
      for (NodeId v : g.neighbors(u)) {
        if (!seen[v]) {
          seen[v] = 1;
          frontier.push_back(v);
        }
      }
    }
    std::sort(comp.begin(), comp.end());
    out.push_back(std::move(comp));
  }
  return out;
}

std::vector<int> bfs_hops(const NeighborGraph& g, NodeId source,
                          std::span<const std::uint8_t> allowed) {
  std::vector<int> hops(g.capacity(), -1);
  if (!g.contains(source)) return hops;
  hops[source] = 0;
  std::deque<NodeId> frontier{source};
  while (!frontier.empty()) {
    const NodeId u = frontier.front();
    frontier.pop_front();
    for (NodeId v : g.neighbors(u)) {
      if (hops[v] >= 0) continue;
      if (!allowed.empty() && !allowed[v]) continue;
      hops[v] = hops[u] + 1;
      frontier.push_back(v);
    }
  }
  return hops;
}

}  // namespace manet

namespace manet {

NeighborGraph induced_subgraph(const NeighborGraph& g, std::span<const NodeId> ids) {
  NeighborGraph sub(g.capacity());
  for (NodeId v : ids) {
    if (g.contains(v)) sub.add_node(v);
  }
  for (NodeId u : sub.node_ids()) {
    for (NodeId v : g.neighbors(u)) {
      if (u < v && sub.contains(v)) sub.add_edge(u, v);
    }
  }
  return sub;
}

}  // namespace manet
