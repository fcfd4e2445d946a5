#include "manet/energy.hpp"

#include <algorithm>
#include <stdexcept>

namespace manet {

void EnergyModel::validate() const {
  if (!(drain_idle >= 0.0 && drain_member >= drain_idle && drain_ch > drain_member)) {
    throw std::invalid_argument("energy model: need drain_ch > drain_member >= drain_idle >= 0");
  }
  if (cost_tx < 0.0 || cost_rx < 0.0) {
    throw std::invalid_argument("energy model: per-packet costs must be >= 0");
  }
}

double EnergyModel::drain(Role role) const {
  switch (role) {
    case Role::ClusterHead: return drain_ch;
    case Role::Member: return drain_member;
    case Role::Unassigned: return drain_idle;
    case Role::Absent: return 0.0;
  }
  return 0.0;
}

EnergyState consume_step(EnergyState s, Role role, const EnergyModel& model, double dt,
                         std::size_t tx_count, std::size_t rx_count) {
  if (!(dt > 0.0)) throw std::invalid_argument("consume_step: dt must be > 0");
  const double used = model.drain(role) * dt + model.cost_tx * static_cast<double>(tx_count) +
                      model.cost_rx * static_cast<double>(rx_count);
  s.residual = std::max(0.0, s.residual - used);
  return s;
}

}  // namespace manet
