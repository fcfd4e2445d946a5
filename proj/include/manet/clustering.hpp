#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "manet/assignment.hpp"
#include "manet/energy.hpp"
#include "manet/graph.hpp"

namespace manet {

/// Scenario maxima used when weight terms are normalized.
struct TermScales {
  double tr = 200.0;
  double tx = 0.02;
  double mv = 10.0;
  double pv = 80.0;

  friend bool operator==(const TermScales&, const TermScales&) = default;
};

struct WeightParams {
  double w1 = 0.2;   // transmission range
  double w2 = 0.2;   // transmission rate
  double w3 = 0.05;  // mobility
  double w4 = 0.05;  // consumed power
  bool include_chprob_term = true;
  bool normalize_terms = false;
  TermScales scales;

  void validate() const;

  friend bool operator==(const WeightParams&, const WeightParams&) = default;
};

struct ChprobParams {
  double c_prob = 0.05;
  double p_min = 1e-4;
  double tr_max = 200.0;
  // When false the raw range in meters is added to the energy term.
  bool normalize_range = true;

  void validate() const;

  friend bool operator==(const ChprobParams&, const ChprobParams&) = default;
};

/// Per-node inputs of the PAIWCA weight. All of them are local to the node,
/// so weights are known before any clustering decision is made.
struct NodeAttrs {
  double tr = 0.0;      // transmission range, m
  double tx = 0.0;      // transmission rate, W
  double mv = 0.0;      // mean speed, m/s
  double pv = 0.0;      // consumed energy, J
  double chprob = 0.0;  // cluster-head probability

  friend bool operator==(const NodeAttrs&, const NodeAttrs&) = default;
};

struct PaiwcaParams {
  WeightParams weights;
  ChprobParams chprob;
  int orphan_timeout = 5;             // ticks without a reachable head before self-declaring
  std::size_t max_cluster_size = 0;  // members per head, 0 = unlimited

  void validate() const;

  friend bool operator==(const PaiwcaParams&, const PaiwcaParams&) = default;
};

/// Cluster-head probability: c_prob * residual/max + tr/tr_max, floored at
/// p_min. Throws std::invalid_argument when tr > tr_max in normalized mode.
double compute_chprob(const EnergyState& e, double tr, const ChprobParams& p);

/// PAIWCA weight; smaller is a better cluster head.
double compute_weight(const NodeAttrs& a, const WeightParams& w);

std::vector<double> compute_weights(std::span<const NodeAttrs> attrs, const WeightParams& w);

/// Min-weight greedy election over the nodes of `g`: the lightest unassigned
/// node (lowest ID on ties) becomes a head and claims its unassigned
/// neighbors, until nothing is left unassigned. `weights` is indexed by ID.
ClusterAssignment cluster_setup(const NeighborGraph& g, std::span<const double> weights,
                                std::size_t max_cluster_size = 0);

ClusterAssignment cluster_setup(const NeighborGraph& g, std::span<const NodeAttrs> attrs,
                                const WeightParams& w, std::size_t max_cluster_size = 0);

/// Neighboring head of v with the highest chprob (lowest ID on ties),
/// skipping `exclude` and heads whose cluster is full.
std::optional<NodeId> strongest_head_near(const ClusterAssignment& a, const NeighborGraph& g,
                                          NodeId v, std::span<const NodeAttrs> attrs,
                                          NodeId exclude = kNoNode,
                                          std::size_t max_cluster_size = 0);

/// Admits a node that just joined the network without re-clustering.
///
/// An isolated newcomer forms its own cluster. Otherwise it compares its
/// chprob against the strongest neighboring head: a strictly higher value
/// takes over that cluster (the old head and every old member in range become
/// its members), anything else joins as a member. Old members out of the
/// newcomer's range move to another neighboring head or are left unassigned
/// for maintenance to pick up. Throws std::invalid_argument if new_id already
/// holds a role.
ClusterAssignment admit_new_node(const ClusterAssignment& assign, const NeighborGraph& g,
                                 NodeId new_id, std::span<const NodeAttrs> attrs,
                                 std::size_t max_cluster_size = 0);

/// Orphan timers, in ticks, indexed by node ID.
struct MaintenanceState {
  std::vector<int> orphan_ticks;

  explicit MaintenanceState(std::size_t capacity = 0) : orphan_ticks(capacity, 0) {}
};

/// Per-tick repair after the graph was rebuilt.
///
/// - Nodes missing from `g` are dropped from the assignment.
/// - A head that lost every former member (or died) has departed: its former
///   members are re-clustered among themselves, and a surviving head with no
///   cluster left joins the strongest neighboring head if one exists.
/// - A member out of range of its head joins the strongest neighboring head,
///   or becomes an orphan.
/// - An orphan keeps looking for a head each tick and declares itself a head
///   once its timer exceeds `orphan_timeout`.
ClusterAssignment maintain_on_move(const ClusterAssignment& assign, const NeighborGraph& g,
                                   std::span<const NodeAttrs> attrs, MaintenanceState& timers,
                                   const PaiwcaParams& params);

/// Replaces every head whose chprob fell below p_min with the lightest member
/// of its cluster. Heads without members keep their role.
ClusterAssignment reelect_if_below_threshold(const ClusterAssignment& assign,
                                             const NeighborGraph& g,
                                             std::span<const NodeAttrs> attrs,
                                             const PaiwcaParams& params);

}  // namespace manet
