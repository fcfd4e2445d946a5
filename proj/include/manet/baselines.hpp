#pragma once

#include <span>
#include <vector>

#include "manet/assignment.hpp"
#include "manet/graph.hpp"
#include "manet/mobility.hpp"

namespace manet {

// Comparison algorithms. Each elects a fresh clustering from the current graph
// and knows nothing about the previous one.

/// Greedy on degree within the uncovered subgraph; ties go to the lowest ID.
ClusterAssignment highest_degree(const NeighborGraph& g);

/// A node is a head when no lower-ID neighbor is already a head; everyone
/// else joins the lowest-ID head it hears. Gateways hear two or more heads.
ClusterAssignment lowest_id(const NeighborGraph& g);

struct WcaParams {
  double w1 = 0.2;   // degree difference
  double w2 = 0.2;   // distance sum
  double w3 = 0.05;  // mobility
  double w4 = 0.05;  // consumed power
  double ideal_degree = 5.0;
  // false: use the raw degree instead of |degree - ideal_degree|.
  bool degree_difference = true;

  void validate() const;

  friend bool operator==(const WcaParams&, const WcaParams&) = default;
};

struct WcaInputs {
  double degree = 0.0;
  double dist_sum = 0.0;  // m, sum of distances to neighbors
  double mv = 0.0;
  double pv = 0.0;
};

/// Degree and distance sum from the graph; mv and pv copied from the spans.
std::vector<WcaInputs> wca_inputs(const NeighborGraph& g, std::span<const Position> positions,
                                  std::span<const double> mv, std::span<const double> pv);

double wca_weight(const WcaInputs& in, const WcaParams& p);

/// Min-weight greedy on the combined WCA weight, computed once from the full
/// graph.
ClusterAssignment wca(const NeighborGraph& g, std::span<const WcaInputs> inputs,
                      const WcaParams& p);

/// Greedy maximal weighted independent set: heaviest free node first (lowest
/// ID on ties). Ordinary nodes join their heaviest neighboring head.
ClusterAssignment mwis(const NeighborGraph& g, std::span<const double> weights);

}  // namespace manet
