#include "manet/clustering.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace manet {

void WeightParams::validate() const {
  if (w1 < 0.0 || w2 < 0.0 || w3 < 0.0 || w4 < 0.0) {
    throw std::invalid_argument("weights: coefficients must be >= 0");
  }
  if (normalize_terms &&
      !(scales.tr > 0.0 && scales.tx > 0.0 && scales.mv > 0.0 && scales.pv > 0.0)) {
    throw std::invalid_argument("weights: normalization scales must be > 0");
  }
}

void ChprobParams::validate() const {
  if (!(p_min > 0.0 && p_min < c_prob && c_prob <= 1.0)) {
    throw std::invalid_argument("chprob: need 0 < p_min < c_prob <= 1");
  }
  if (!(tr_max > 0.0)) throw std::invalid_argument("chprob: tr_max must be > 0");
}

void PaiwcaParams::validate() const {
  weights.validate();
  chprob.validate();
  if (orphan_timeout < 0) throw std::invalid_argument("paiwca: orphan_timeout must be >= 0");
}

double compute_chprob(const EnergyState& e, double tr, const ChprobParams& p) {
  double range_term = tr;
  if (p.normalize_range) {
    if (tr > p.tr_max) {
      throw std::invalid_argument("compute_chprob: range " + std::to_string(tr) +
                                  " exceeds tr_max " + std::to_string(p.tr_max));
    }
    range_term = tr / p.tr_max;
  }
  const double energy_ratio = e.max > 0.0 ? e.residual / e.max : 0.0;
  return std::max(p.p_min, p.c_prob * energy_ratio + range_term);
}

double compute_weight(const NodeAttrs& a, const WeightParams& w) {
  double tr = a.tr, tx = a.tx, mv = a.mv, pv = a.pv;
  if (w.normalize_terms) {
    tr /= w.scales.tr;
    tx /= w.scales.tx;
    mv /= w.scales.mv;
    pv /= w.scales.pv;
  }
  double weight = w.w1 * tr + w.w2 * tx + w.w3 * mv + w.w4 * pv;
  if (w.include_chprob_term) weight -= a.chprob;
  return weight;
}

std::vector<double> compute_weights(std::span<const NodeAttrs> attrs, const WeightParams& w) {
  std::vector<double> out(attrs.size());
  for (std::size_t i = 0; i < attrs.size(); ++i) out[i] = compute_weight(attrs[i], w);
  return out;
}

ClusterAssignment cluster_setup(const NeighborGraph& g, std::span<const double> weights,
                                std::size_t max_cluster_size) {
  if (weights.size() < g.capacity()) {
    throw std::invalid_argument("cluster_setup: weights do not cover every node");
  }
  ClusterAssignment out(g.capacity());
  for (NodeId v : g.node_ids()) out.make_unassigned(v);

  // Ascending (weight, id) order: the first still-unassigned node in this
  // order is always the lightest remaining candidate.
  std::vector<NodeId> order = g.node_ids();
  std::stable_sort(order.begin(), order.end(),
                   [&](NodeId a, NodeId b) { return weights[a] < weights[b]; });

  for (NodeId v : order) {
    if (out.role(v) != Role::Unassigned) continue;
    out.make_head(v);
    std::size_t claimed = 0;
    for (NodeId u : g.neighbors(v)) {
      if (max_cluster_size != 0 && claimed >= max_cluster_size) break;
      if (out.role(u) != Role::Unassigned) continue;
      out.make_member(u, v);
      ++claimed;
    }
  }
  mark_gateways(out, g);
  return out;
}

ClusterAssignment cluster_setup(const NeighborGraph& g, std::span<const NodeAttrs> attrs,
                                const WeightParams& w, std::size_t max_cluster_size) {
  const std::vector<double> weights = compute_weights(attrs, w);
  return cluster_setup(g, weights, max_cluster_size);
}

namespace {

bool cluster_full(const ClusterAssignment& a, NodeId head, std::size_t cap) {
  return cap != 0 && a.members_of(head).size() >= cap;
}

// Moves v to the strongest head in range, or leaves it unassigned.
void reaffiliate(ClusterAssignment& a, const NeighborGraph& g, NodeId v,
                 std::span<const NodeAttrs> attrs, std::size_t cap) {
  if (auto target = strongest_head_near(a, g, v, attrs, kNoNode, cap)) {
    a.make_member(v, *target);
  } else {
    a.make_unassigned(v);
  }
}

}  // namespace

std::optional<NodeId> strongest_head_near(const ClusterAssignment& a, const NeighborGraph& g,
                                          NodeId v, std::span<const NodeAttrs> attrs,
                                          NodeId exclude, std::size_t max_cluster_size) {
  std::optional<NodeId> best;
  for (NodeId u : g.neighbors(v)) {
    if (u == exclude || !a.is_head(u)) continue;
    if (cluster_full(a, u, max_cluster_size)) continue;
    // Neighbors are ascending, so a strict comparison keeps the lowest ID on ties.
    if (!best || attrs[u].chprob > attrs[*best].chprob) best = u;
  }
  return best;
}

ClusterAssignment admit_new_node(const ClusterAssignment& assign, const NeighborGraph& g,
                                 NodeId new_id, std::span<const NodeAttrs> attrs,
                                 std::size_t max_cluster_size) {
  if (new_id >= assign.capacity() || assign.is_present(new_id)) {
    throw std::invalid_argument("admit_new_node: node " + std::to_string(new_id) +
                                " is already part of the assignment");
  }
  if (!g.contains(new_id)) {
    throw std::invalid_argument("admit_new_node: node " + std::to_string(new_id) +
                                " is missing from the graph");
  }
  ClusterAssignment next = assign;
  const auto target = strongest_head_near(next, g, new_id, attrs, kNoNode, max_cluster_size);
  if (!target) {
    // No edges at all, or no head reachable: the newcomer starts its own cluster.
    next.make_head(new_id);
  } else if (attrs[new_id].chprob > attrs[*target].chprob) {
    const NodeId old_head = *target;
    const std::vector<NodeId> old_members = next.members_of(old_head);
    next.make_head(new_id);
    next.make_member(old_head, new_id);
    for (NodeId m : old_members) {
      if (g.adjacent(m, new_id)) {
        next.make_member(m, new_id);
      } else {
        reaffiliate(next, g, m, attrs, max_cluster_size);
      }
    }
  } else {
    next.make_member(new_id, *target);
  }
  advance_epoch(assign, next);
  mark_gateways(next, g);
  return next;
}

ClusterAssignment maintain_on_move(const ClusterAssignment& assign, const NeighborGraph& g,
                                   std::span<const NodeAttrs> attrs, MaintenanceState& timers,
                                   const PaiwcaParams& params) {
  const std::size_t cap = params.max_cluster_size;
  ClusterAssignment next = assign;
  if (timers.orphan_ticks.size() < next.capacity()) timers.orphan_ticks.resize(next.capacity(), 0);

  for (std::size_t i = 0; i < next.capacity(); ++i) {
    const auto v = static_cast<NodeId>(i);
    if (next.is_present(v) && !g.contains(v)) {
      next.remove(v);
      timers.orphan_ticks[v] = 0;
    } else if (!next.is_present(v) && g.contains(v)) {
      next.make_unassigned(v);
      timers.orphan_ticks[v] = 0;
    }
  }

  // Departed heads: dead, or no member of theirs still in range.
  const std::vector<double> weights = compute_weights(attrs, params.weights);
  for (NodeId h : assign.heads()) {
    const bool dead = !g.contains(h);
    if (!dead) {
      if (!next.is_head(h)) continue;
      const auto current = next.members_of(h);
      const bool keeps_member = std::any_of(current.begin(), current.end(),
                                            [&](NodeId m) { return g.adjacent(h, m); });
      if (keeps_member) continue;
    }

    std::vector<NodeId> orphans;
    for (NodeId m : assign.members_of(h)) {
      if (g.contains(m) && next.role(m) == Role::Member && next.head_of(m) == h) {
        orphans.push_back(m);
      }
    }
    if (!orphans.empty()) {
      const ClusterAssignment local = cluster_setup(induced_subgraph(g, orphans), weights, cap);
      for (NodeId m : orphans) {
        if (local.is_head(m)) {
          next.make_head(m);
        } else {
          next.make_member(m, local.head_of(m));
        }
        timers.orphan_ticks[m] = 0;
      }
    }
    if (!dead) {
      if (auto target = strongest_head_near(next, g, h, attrs, h, cap)) next.make_member(h, *target);
    }
  }

  // Members that lost their head.
  for (NodeId v : g.node_ids()) {
    if (next.role(v) != Role::Member) continue;
    const NodeId h = next.head_of(v);
    if (next.is_head(h) && g.adjacent(v, h)) continue;
    reaffiliate(next, g, v, attrs, cap);
    timers.orphan_ticks[v] = 0;
  }

  // Orphans: join a head if one is in range, otherwise count down to self-declaration.
  for (NodeId v : g.node_ids()) {
    if (next.role(v) != Role::Unassigned) continue;
    if (auto target = strongest_head_near(next, g, v, attrs, kNoNode, cap)) {
      next.make_member(v, *target);
      timers.orphan_ticks[v] = 0;
      continue;
    }
    if (++timers.orphan_ticks[v] > params.orphan_timeout) {
      next.make_head(v);
      timers.orphan_ticks[v] = 0;
    }
  }

  advance_epoch(assign, next);
  mark_gateways(next, g);
  return next;
}

ClusterAssignment reelect_if_below_threshold(const ClusterAssignment& assign,
                                             const NeighborGraph& g,
                                             std::span<const NodeAttrs> attrs,
                                             const PaiwcaParams& params) {
  ClusterAssignment next = assign;
  const std::size_t cap = params.max_cluster_size;
  std::vector<double> weights;
  for (NodeId h : assign.heads()) {
    // chprob is floored at p_min, so sitting on the floor means it fell through.
    if (attrs[h].chprob > params.chprob.p_min) continue;
    if (!next.is_head(h)) continue;
    std::vector<NodeId> candidates;
    for (NodeId m : next.members_of(h)) {
      if (g.adjacent(h, m)) candidates.push_back(m);
    }
    if (candidates.empty()) continue;
    if (weights.empty()) weights = compute_weights(attrs, params.weights);

    NodeId winner = candidates.front();
    for (NodeId c : candidates) {
      if (weights[c] < weights[winner]) winner = c;
    }
    const std::vector<NodeId> old_members = next.members_of(h);
    next.make_head(winner);
    next.make_member(h, winner);
    for (NodeId m : old_members) {
      if (m == winner) continue;
      if (g.adjacent(m, winner)) {
        next.make_member(m, winner);
      } else {
        reaffiliate(next, g, m, attrs, cap);
      }
    }
  }
  if (next == assign) return next;
  advance_epoch(assign, next);
  mark_gateways(next, g);
  return next;
}

}  // namespace manet
