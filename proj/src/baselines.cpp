#include "manet/baselines.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "manet/clustering.hpp"

namespace manet {

namespace {

ClusterAssignment unassigned_over(const NeighborGraph& g) {
  ClusterAssignment out(g.capacity());
  for (NodeId v : g.node_ids()) out.make_unassigned(v);
  return out;
}

}  // namespace

ClusterAssignment highest_degree(const NeighborGraph& g) {
  ClusterAssignment out = unassigned_over(g);
  std::vector<std::size_t> live_degree(g.capacity(), 0);
  for (NodeId v : g.node_ids()) live_degree[v] = g.degree(v);

  std::size_t remaining = g.size();
  while (remaining > 0) {
    NodeId best = kNoNode;
    for (NodeId v : g.node_ids()) {
      if (out.role(v) != Role::Unassigned) continue;
      if (best == kNoNode || live_degree[v] > live_degree[best]) best = v;
    }
    auto cover = [&](NodeId v) {
      --remaining;
      for (NodeId u : g.neighbors(v)) --live_degree[u];
    };
    out.make_head(best);
    cover(best);
    for (NodeId u : g.neighbors(best)) {
      if (out.role(u) != Role::Unassigned) continue;
      out.make_member(u, best);
      cover(u);
    }
  }
  mark_gateways(out, g);
  return out;
}

ClusterAssignment lowest_id(const NeighborGraph& g) {
  ClusterAssignment out = unassigned_over(g);
  for (NodeId v : g.node_ids()) {
    const auto nbrs = g.neighbors(v);
    const bool claimed = std::any_of(nbrs.begin(), nbrs.end(),
                                     [&](NodeId u) { return u < v && out.is_head(u); });
    if (!claimed) out.make_head(v);
  }
  for (NodeId v : g.node_ids()) {
    if (out.is_head(v)) continue;
    for (NodeId u : g.neighbors(v)) {
      if (out.is_head(u)) {
        out.make_member(v, u);
        break;
      }
    }
  }
  mark_gateways(out, g);
  return out;
}

void WcaParams::validate() const {
  if (w1 < 0.0 || w2 < 0.0 || w3 < 0.0 || w4 < 0.0) {
    throw std::invalid_argument("wca: coefficients must be >= 0");
  }
  if (!(w1 + w2 + w3 + w4 > 0.0)) throw std::invalid_argument("wca: coefficients sum to zero");
  if (ideal_degree < 0.0) throw std::invalid_argument("wca: ideal_degree must be >= 0");
}

std::vector<WcaInputs> wca_inputs(const NeighborGraph& g, std::span<const Position> positions,
                                  std::span<const double> mv, std::span<const double> pv) {
  std::vector<WcaInputs> out(g.capacity());
  for (NodeId v : g.node_ids()) {
    WcaInputs& in = out[v];
    in.degree = static_cast<double>(g.degree(v));
    for (NodeId u : g.neighbors(v)) in.dist_sum += distance(positions[v], positions[u]);
    in.mv = mv[v];
    in.pv = pv[v];
  }
  return out;
}

double wca_weight(const WcaInputs& in, const WcaParams& p) {
  const double delta = p.degree_difference ? std::abs(in.degree - p.ideal_degree) : in.degree;
  return p.w1 * delta + p.w2 * in.dist_sum + p.w3 * in.mv + p.w4 * in.pv;
}

ClusterAssignment wca(const NeighborGraph& g, std::span<const WcaInputs> inputs,
                      const WcaParams& p) {
  std::vector<double> weights(g.capacity(), 0.0);
  for (NodeId v : g.node_ids()) weights[v] = wca_weight(inputs[v], p);
  return cluster_setup(g, weights);
}

ClusterAssignment mwis(const NeighborGraph& g, std::span<const double> weights) {
  if (weights.size() < g.capacity()) {
    throw std::invalid_argument("mwis: weights do not cover every node");
  }
  ClusterAssignment out = unassigned_over(g);
  std::vector<NodeId> order = g.node_ids();
  std::stable_sort(order.begin(), order.end(),
                   [&](NodeId a, NodeId b) { return weights[a] > weights[b]; });

  std::vector<std::uint8_t> blocked(g.capacity(), 0);
  for (NodeId v : order) {
    if (blocked[v]) continue;
    out.make_head(v);
    for (NodeId u : g.neighbors(v)) blocked[u] = 1;
  }
  for (NodeId v : g.node_ids()) {
    if (out.is_head(v)) continue;
    NodeId best = kNoNode;
    for (NodeId u : g.neighbors(v)) {
      if (out.is_head(u) && (best == kNoNode || weights[u] > weights[best])) best = u;
    }
    out.make_member(v, best);
  }
  mark_gateways(out, g);
  return out;
}

}  // namespace manet
