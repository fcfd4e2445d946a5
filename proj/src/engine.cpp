#include "manet/engine.hpp"

#include <algorithm>

#include "manet/baselines.hpp"
#include "manet/clustering.hpp"
#include "manet/energy.hpp"
#include "manet/mobility.hpp"
#include "manet/traffic.hpp"

namespace manet {

double connectivity(const NeighborGraph& g) {
  if (g.size() == 0) return 0.0;
  std::size_t largest = 0;
  for (const auto& comp : connected_components(g)) largest = std::max(largest, comp.size());
  return static_cast<double>(largest) / static_cast<double>(g.size());
}

namespace {

enum Stream : std::uint64_t { kPlacement = 1, kMobility = 2, kTraffic = 3 };

struct NodeDraw {
  Position position;
  double range = 0.0;
  double energy = 0.0;
};

// Every field is drawn even when the spec pins it, so explicit values never
// shift the stream for the nodes that follow.
NodeDraw draw_node(const NodeSpec& spec, const ScenarioConfig& cfg, Rng& rng) {
  NodeDraw d;
  d.position = cfg.area.random_point(rng);
  d.range = rng.uniform(cfg.range_min, cfg.range_max);
  d.energy = rng.uniform(cfg.energy_min, cfg.energy_max);
  if (spec.position) d.position = *spec.position;
  if (spec.range) d.range = *spec.range;
  if (spec.energy) d.energy = *spec.energy;
  return d;
}

class Simulation {
 public:
  explicit Simulation(const ScenarioConfig& cfg)
      : cfg_(cfg),
        capacity_(cfg.capacity()),
        root_(cfg.seed),
        mobility_rng_(root_.fork(kMobility)),
        traffic_rng_(root_.fork(kTraffic)),
        kin_(capacity_),
        energy_(capacity_),
        range_(capacity_, 0.0),
        alive_(capacity_, 0),
        attrs_(capacity_),
        timers_(capacity_),
        traffic_(cfg.flow, capacity_),
        tx_prev_(capacity_, 0),
        rx_prev_(capacity_, 0) {
    paiwca_ = cfg.paiwca;
    paiwca_.weights.scales = {cfg.paiwca.chprob.tr_max, cfg.tx > 0.0 ? cfg.tx : 1.0, cfg.speed.max,
                       cfg.energy_max};
    Rng placement = root_.fork(kPlacement);
    draws_.reserve(capacity_);
    for (std::size_t i = 0; i < cfg.initial_count(); ++i) {
      draws_.push_back(draw_node(cfg.layout.empty() ? NodeSpec{} : cfg.layout[i], cfg, placement));
    }
    for (const Arrival& a : cfg.arrivals) draws_.push_back(draw_node(a.node, cfg, placement));
  }

  RunResult run(const TickObserver& observer) {
    RunResult result;
    const Tick ticks = cfg_.ticks();
    result.series.reserve(static_cast<std::size_t>(ticks) + 1);

    for (std::size_t i = 0; i < cfg_.initial_count(); ++i) activate(static_cast<NodeId>(i));
    graph_ = build_graph();
    refresh_attrs();
    assign_ = elect();
    if (cfg_.traffic_enabled) {
      std::vector<NodeId> initial(graph_.node_ids());
      traffic_.start_flows(initial, traffic_rng_);
    }
    const ClusterAssignment empty(capacity_);
    if (observer) observer(TickView{0, graph_, empty, assign_, positions()});
    result.series.push_back(record(0, 0));

    for (Tick t = 1; t <= ticks; ++t) {
      TrafficStep step;
      const NeighborGraph previous_graph = graph_;
      const ClusterAssignment previous = assign_;

      if (cfg_.mobility == MobilityModel::RandomWaypoint) {
        for (NodeId v = 0; v < capacity_; ++v) {
          if (alive_[v]) kin_[v] = rwp_step(kin_[v], cfg_.dt, cfg_.area, cfg_.speed, cfg_.pause, mobility_rng_);
        }
      }

      for (NodeId v = 0; v < capacity_; ++v) {
        if (!alive_[v]) continue;
        energy_[v] = consume_step(energy_[v], effective_role(v), cfg_.energy, cfg_.dt, tx_prev_[v], rx_prev_[v]);
        if (energy_[v].depleted()) {
          alive_[v] = 0;
          traffic_.on_node_death(v, t, step);
        }
      }

      std::vector<NodeId> arriving;
      for (std::size_t k = 0; k < cfg_.arrivals.size(); ++k) {
        if (cfg_.arrivals[k].tick != t) continue;
        const auto id = static_cast<NodeId>(cfg_.initial_count() + k);
        activate(id);
        arriving.push_back(id);
      }

      graph_ = build_graph();
      refresh_attrs();

      if (cfg_.algorithm == Algorithm::Paiwca) {
        for (NodeId id : arriving) {
          assign_ = admit_new_node(assign_, graph_, id, attrs_, cfg_.paiwca.max_cluster_size);
        }
        assign_ = maintain_on_move(assign_, graph_, attrs_, timers_, paiwca_);
        assign_ = reelect_if_below_threshold(assign_, graph_, attrs_, paiwca_);
      } else if (!arriving.empty() || !(graph_ == previous_graph)) {
        ClusterAssignment fresh = elect();
        advance_epoch(assign_, fresh);
        assign_ = std::move(fresh);
      }

      if (cfg_.traffic_enabled) {
        TrafficStep forwarded = traffic_.step(assign_, graph_, t, cfg_.dt);
        step.generated += forwarded.generated;
        step.delivered.insert(step.delivered.end(), forwarded.delivered.begin(), forwarded.delivered.end());
        step.dropped.insert(step.dropped.end(), forwarded.dropped.begin(), forwarded.dropped.end());
        tx_prev_ = traffic_.tx_counts();
        rx_prev_ = traffic_.rx_counts();
      }

      for (const Packet& p : step.delivered) delay_sum_ += static_cast<double>(p.delay());
      if (!same_heads(previous, assign_)) ++dominant_set_updates_;

      if (observer) observer(TickView{t, graph_, previous, assign_, positions()});
      result.series.push_back(record(t, step.delivered.size()));
    }

    summarize(result);
    return result;
  }

 private:
  void activate(NodeId v) {
    const NodeDraw& d = draws_[v];
    if (cfg_.mobility == MobilityModel::RandomWaypoint) {
      kin_[v] = rwp_init(d.position, cfg_.area, cfg_.speed, mobility_rng_);
    } else {
      kin_[v] = Kinematics{};
      kin_[v].position = kin_[v].waypoint = d.position;
    }
    range_[v] = d.range;
    energy_[v] = EnergyState::full(d.energy);
    alive_[v] = 1;
  }

  Role effective_role(NodeId v) const {
    const Role r = v < assign_.capacity() ? assign_.role(v) : Role::Absent;
    return r == Role::Absent ? Role::Unassigned : r;
  }

  std::span<const Position> positions() {
    positions_.resize(capacity_);
    for (std::size_t v = 0; v < capacity_; ++v) positions_[v] = kin_[v].position;
    return positions_;
  }

  NeighborGraph build_graph() {
    std::vector<NodeId> members;
    for (NodeId v = 0; v < capacity_; ++v) {
      if (alive_[v]) members.push_back(v);
    }
    return build_neighbor_graph(positions(), range_, members, cfg_.link_rule);
  }

  void refresh_attrs() {
    for (NodeId v = 0; v < capacity_; ++v) {
      if (!alive_[v]) {
        attrs_[v] = NodeAttrs{};
        continue;
      }
      NodeAttrs& a = attrs_[v];
      a.tr = range_[v];
      a.tx = cfg_.tx;
      a.mv = mean_speed(kin_[v]);
      a.pv = consumed_power(energy_[v]);
      a.chprob = compute_chprob(energy_[v], range_[v], cfg_.paiwca.chprob);
    }
  }

  ClusterAssignment elect() const {
    switch (cfg_.algorithm) {
      case Algorithm::Paiwca: {
        const auto weights = compute_weights(attrs_, paiwca_.weights);
        return cluster_setup(graph_, weights, cfg_.paiwca.max_cluster_size);
      }
      case Algorithm::Wca: {
        std::vector<double> mv(capacity_), pv(capacity_);
        std::vector<Position> pos(capacity_);
        for (std::size_t v = 0; v < capacity_; ++v) {
          mv[v] = attrs_[v].mv;
          pv[v] = attrs_[v].pv;
          pos[v] = kin_[v].position;
        }
        return wca(graph_, wca_inputs(graph_, pos, mv, pv), cfg_.wca);
      }
      case Algorithm::LowestId: return lowest_id(graph_);
      case Algorithm::HighestDegree: return highest_degree(graph_);
      case Algorithm::Mwis: {
        std::vector<double> residual(capacity_, 0.0);
        for (std::size_t v = 0; v < capacity_; ++v) residual[v] = energy_[v].residual;
        return mwis(graph_, residual);
      }
    }
    return ClusterAssignment(capacity_);
  }

  MetricsRecord record(Tick t, std::size_t delivered_now) {
    MetricsRecord m;
    m.tick = t;
    m.cluster_count = assign_.head_count();
    m.connectivity = connectivity(graph_);
    m.dominant_set_updates = dominant_set_updates_;
    m.sent = traffic_.sent();
    m.delivered = traffic_.delivered();
    m.dropped = traffic_.dropped();
    m.throughput = static_cast<double>(delivered_now) / cfg_.dt;
    m.mean_delay = m.delivered == 0 ? 0.0 : delay_sum_ / static_cast<double>(m.delivered);
    m.alive_nodes = graph_.size();
    return m;
  }

  void summarize(RunResult& result) const {
    RunSummary& s = result.summary;
    const auto& series = result.series;
    double clusters = 0.0, conn = 0.0, thr = 0.0;
    for (const auto& m : series) {
      clusters += static_cast<double>(m.cluster_count);
      conn += m.connectivity;
      thr += m.throughput;
    }
    const auto n = static_cast<double>(series.size());
    s.mean_cluster_count = clusters / n;
    s.mean_connectivity = conn / n;
    s.mean_throughput = series.size() > 1 ? thr / (n - 1.0) : 0.0;
    const MetricsRecord& last = series.back();
    s.dominant_set_updates = last.dominant_set_updates;
    s.sent = last.sent;
    s.delivered = last.delivered;
    s.dropped = last.dropped;
    s.in_flight = traffic_.in_flight();
    for (std::size_t r = 0; r < s.dropped_by_reason.size(); ++r) {
      s.dropped_by_reason[r] = traffic_.dropped(static_cast<DropReason>(r));
    }
    s.pdr = compute_pdr(s.delivered, s.sent);
    s.mean_delay = last.mean_delay;
    s.final_alive = last.alive_nodes;
    s.epoch = assign_.epoch();
  }

  const ScenarioConfig& cfg_;
  const std::size_t capacity_;
  Rng root_;
  Rng mobility_rng_;
  Rng traffic_rng_;
  PaiwcaParams paiwca_;
  std::vector<NodeDraw> draws_;
  std::vector<Kinematics> kin_;
  std::vector<EnergyState> energy_;
  std::vector<double> range_;
  std::vector<std::uint8_t> alive_;
  std::vector<NodeAttrs> attrs_;
  std::vector<Position> positions_;
  NeighborGraph graph_;
  ClusterAssignment assign_;
  MaintenanceState timers_;
  TrafficLayer traffic_;
  std::vector<std::size_t> tx_prev_;
  std::vector<std::size_t> rx_prev_;
  std::uint64_t dominant_set_updates_ = 0;
  double delay_sum_ = 0.0;
};

}  // namespace

RunResult run(const ScenarioConfig& cfg, const TickObserver& observer) {
  cfg.validate();
  Simulation sim(cfg);
  return sim.run(observer);
}

}  // namespace manet
