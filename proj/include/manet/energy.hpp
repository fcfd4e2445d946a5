#pragma once

#include <cstddef>

#include "manet/types.hpp"

namespace manet {

/// Battery of one node. residual only decreases over a run.
struct EnergyState {
  double residual = 0.0;  // J
  double max = 0.0;       // J, the fully charged reference

  static EnergyState full(double capacity) { return {capacity, capacity}; }
  bool depleted() const { return residual <= 0.0; }
};

/// Role-dependent drain. Cluster heads pay the most.
struct EnergyModel {
  double drain_idle = 0.01;    // W, unassigned nodes
  double drain_member = 0.02;  // W
  double drain_ch = 0.1;       // W
  double cost_tx = 0.001;      // J per transmitted packet
  double cost_rx = 0.001;      // J per received packet

  /// Throws std::invalid_argument unless drain_ch > drain_member >= drain_idle >= 0
  /// and the per-packet costs are non-negative.
  void validate() const;
  double drain(Role role) const;

  friend bool operator==(const EnergyModel&, const EnergyModel&) = default;
};

/// One tick of consumption. Residual energy is clamped at zero.
EnergyState consume_step(EnergyState s, Role role, const EnergyModel& model, double dt,
                         std::size_t tx_count, std::size_t rx_count);

/// P_v: energy used so far.
inline double consumed_power(const EnergyState& s) { return s.max - s.residual; }

}  // namespace manet
