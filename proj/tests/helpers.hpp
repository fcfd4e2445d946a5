#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "manet/assignment.hpp"
#include "manet/graph.hpp"
#include "manet/rng.hpp"

namespace testing {

inline manet::NeighborGraph make_graph(std::size_t n,
                                       const std::vector<std::pair<manet::NodeId, manet::NodeId>>& edges) {
  manet::NeighborGraph g(n);
  for (manet::NodeId v = 0; v < n; ++v) g.add_node(v);
  for (auto [u, v] : edges) g.add_edge(u, v);
  return g;
}

inline manet::NeighborGraph path_graph(std::size_t n) {
  std::vector<std::pair<manet::NodeId, manet::NodeId>> edges;
  for (manet::NodeId v = 1; v < n; ++v) edges.emplace_back(v - 1, v);
  return make_graph(n, edges);
}

inline manet::NeighborGraph complete_graph(std::size_t n) {
  std::vector<std::pair<manet::NodeId, manet::NodeId>> edges;
  for (manet::NodeId u = 0; u < n; ++u)
    for (manet::NodeId v = u + 1; v < n; ++v) edges.emplace_back(u, v);
  return make_graph(n, edges);
}

// Erdos-Renyi draw, resampled until connected.
inline manet::NeighborGraph random_connected_graph(std::size_t n, double p, manet::Rng& rng) {
  for (;;) {
    manet::NeighborGraph g(n);
    for (manet::NodeId v = 0; v < n; ++v) g.add_node(v);
    for (manet::NodeId u = 0; u < n; ++u)
      for (manet::NodeId v = u + 1; v < n; ++v)
        if (rng.uniform01() < p) g.add_edge(u, v);
    if (manet::connected_components(g).size() == 1) return g;
  }
}

// Every independent set of g as a bitmask over node IDs 0..n-1. Exponential, n <= 16.
inline std::vector<std::uint32_t> all_independent_sets(const manet::NeighborGraph& g) {
  const std::size_t n = g.capacity();
  std::vector<std::uint32_t> out;
  for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
    bool ok = true;
    for (manet::NodeId u = 0; u < n && ok; ++u) {
      if (!(mask >> u & 1u)) continue;
      for (manet::NodeId v = u + 1; v < n; ++v) {
        if ((mask >> v & 1u) && g.adjacent(u, v)) {
          ok = false;
          break;
        }
      }
    }
    if (ok) out.push_back(mask);
  }
  return out;
}

// A set is maximal when no proper superset is independent.
inline bool is_maximal_independent(const manet::NeighborGraph& g, std::uint32_t mask) {
  const auto sets = all_independent_sets(g);
  bool found = false;
  for (std::uint32_t s : sets) {
    if (s == mask) found = true;
    if (s != mask && (s & mask) == mask) return false;
  }
  return found;
}

inline std::uint32_t head_mask(const manet::ClusterAssignment& a) {
  std::uint32_t m = 0;
  for (manet::NodeId h : a.heads()) m |= 1u << h;
  return m;
}

inline double rel_err(double got, double want) {
  const double scale = want == 0.0 ? 1.0 : (want < 0 ? -want : want);
  const double d = got - want;
  return (d < 0 ? -d : d) / scale;
}

}  // namespace testing
