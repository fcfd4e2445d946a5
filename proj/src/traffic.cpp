#include "manet/traffic.hpp"

#include <algorithm>
#include <stdexcept>

namespace manet {

void FlowConfig::validate() const {
  if (!(rate > 0.0)) throw std::invalid_argument("traffic: rate must be > 0");
  if (queue_capacity < 1) throw std::invalid_argument("traffic: queue_capacity must be >= 1");
  if (per_hop_delay < 1) throw std::invalid_argument("traffic: per_hop_delay must be >= 1");
}

std::string_view to_string(DropReason r) {
  switch (r) {
    case DropReason::QueueOverflow: return "queue_overflow";
    case DropReason::NoRoute: return "no_route";
    case DropReason::LinkBreak: return "link_break";
    case DropReason::NodeDeath: return "node_death";
    case DropReason::HopLimit: return "hop_limit";
  }
  return "unknown";
}

std::vector<std::uint8_t> routing_backbone(const ClusterAssignment& assign,
                                           const NeighborGraph& g) {
  std::vector<std::uint8_t> backbone(g.capacity(), 0);
  for (NodeId v : g.node_ids()) {
    switch (assign.role(v)) {
      case Role::ClusterHead:
        backbone[v] = 1;
        break;
      case Role::Member: {
        if (assign.is_gateway(v)) {
          backbone[v] = 1;
          break;
        }
        const NodeId h = assign.head_of(v);
        for (NodeId u : g.neighbors(v)) {
          if (assign.head_of(u) != h) {
            backbone[v] = 1;
            break;
          }
        }
        break;
      }
      default:
        break;
    }
  }
  return backbone;
}

RouteTable::RouteTable(const ClusterAssignment& assign, const NeighborGraph& g)
    : assign_(&assign), graph_(&g), backbone_(routing_backbone(assign, g)) {}

std::optional<NodeId> RouteTable::next_hop(NodeId at, NodeId dst) {
  const NeighborGraph& g = *graph_;
  if (!g.contains(at) || !g.contains(dst)) return std::nullopt;
  if (at == dst) return dst;
  if (g.adjacent(at, dst)) return dst;
  auto it = hops_to_.find(dst);
  if (it == hops_to_.end()) it = hops_to_.emplace(dst, bfs_hops(g, dst, backbone_)).first;
  const std::vector<int>& hops = it->second;

  if (assign_->role(at) == Role::Member && !backbone_[at]) {
    const NodeId h = assign_->head_of(at);
    if (g.adjacent(at, h) && hops[h] >= 0) return h;
  }

  std::optional<NodeId> best;
  for (NodeId u : g.neighbors(at)) {
    if (hops[u] < 0) continue;
    if (!best || hops[u] < hops[*best]) best = u;
  }
  return best;
}

std::optional<NodeId> route_next_hop(const ClusterAssignment& assign, const NeighborGraph& g,
                                     NodeId at, NodeId dst) {
  RouteTable table(assign, g);
  return table.next_hop(at, dst);
}

TrafficLayer::TrafficLayer(FlowConfig config, std::size_t capacity)
    : config_(config), queues_(capacity), tx_(capacity, 0), rx_(capacity, 0) {
  config_.validate();
}

void TrafficLayer::start_flows(std::span<const NodeId> nodes, Rng& rng) {
  flows_.clear();
  if (nodes.size() < 2) return;
  std::vector<NodeId> pool(nodes.begin(), nodes.end());
  std::size_t count = config_.source_count == 0 ? pool.size() : config_.source_count;
  count = std::min(count, pool.size());
  // Partial Fisher-Yates: the first `count` slots become the sources.
  for (std::size_t i = 0; i < count; ++i) {
    std::swap(pool[i], pool[i + rng.index(pool.size() - i)]);
  }
  for (std::size_t i = 0; i < count; ++i) {
    Flow f;
    f.src = pool[i];
    do {
      f.dst = nodes[rng.index(nodes.size())];
    } while (f.dst == f.src);
    // Random phase so sources do not all fire on the same tick.
    f.credit = rng.uniform01();
    flows_.push_back(f);
  }
}

void TrafficLayer::inject(NodeId src, NodeId dst, Tick tick, TrafficStep& out) {
  Packet p;
  p.id = next_id_++;
  p.src = src;
  p.dst = dst;
  p.created_tick = tick;
  ++sent_;
  ++out.generated;
  if (src == dst) {
    deliver(p, tick, out);
    return;
  }
  enqueue(p, src, tick, out);
}

bool TrafficLayer::enqueue(Packet p, NodeId at, Tick tick, TrafficStep& out) {
  if (queues_[at].size() >= config_.queue_capacity) {
    p.at = at;
    drop(p, DropReason::QueueOverflow, tick, out);
    return false;
  }
  p.at = at;
  p.ready_tick = tick + config_.per_hop_delay;
  queues_[at].push_back(p);
  return true;
}

void TrafficLayer::drop(Packet p, DropReason reason, Tick tick, TrafficStep& out) {
  p.state = PacketState::Dropped;
  p.reason = reason;
  p.delivered_tick = tick;
  ++dropped_;
  ++dropped_by_reason_[static_cast<std::size_t>(reason)];
  out.dropped.push_back(p);
}

void TrafficLayer::deliver(Packet p, Tick tick, TrafficStep& out) {
  p.state = PacketState::Delivered;
  p.at = p.dst;
  p.delivered_tick = tick;
  ++delivered_;
  out.delivered.push_back(p);
}

void TrafficLayer::on_node_death(NodeId v, Tick tick, TrafficStep& out) {
  auto& q = queues_[v];
  while (!q.empty()) {
    Packet p = q.front();
    q.pop_front();
    drop(p, DropReason::NodeDeath, tick, out);
  }
}

std::uint64_t TrafficLayer::in_flight() const {
  std::uint64_t n = 0;
  for (const auto& q : queues_) n += q.size();
  return n;
}

TrafficStep TrafficLayer::step(const ClusterAssignment& assign, const NeighborGraph& g, Tick tick,
                               double dt) {
  TrafficStep out;
  std::fill(tx_.begin(), tx_.end(), 0);
  std::fill(rx_.begin(), rx_.end(), 0);

  const ClusterAssignment& view_assign = view_assign_ ? *view_assign_ : assign;
  const NeighborGraph& view_graph = view_graph_ ? *view_graph_ : g;
  RouteTable table(view_assign, view_graph);

  const bool generating = config_.stop_time < 0.0 || static_cast<double>(tick) * dt <= config_.stop_time;
  if (generating) {
    for (Flow& f : flows_) {
      if (!g.contains(f.src)) continue;
      f.credit += config_.rate * dt;
      while (f.credit >= 1.0) {
        f.credit -= 1.0;
        inject(f.src, f.dst, tick, out);
      }
    }
  }

  const auto hop_limit = static_cast<std::uint32_t>(g.size());
  for (NodeId v : g.node_ids()) {
    auto& q = queues_[v];
    std::size_t served = 0;
    while (!q.empty() && q.front().ready_tick <= tick &&
           (config_.service_rate == 0 || served < config_.service_rate)) {
      Packet p = q.front();
      q.pop_front();
      ++served;
      const auto next = table.next_hop(v, p.dst);
      if (!next) {
        drop(p, DropReason::NoRoute, tick, out);
        continue;
      }
      ++tx_[v];
      if (!g.adjacent(v, *next)) {
        drop(p, DropReason::LinkBreak, tick, out);
        continue;
      }
      ++rx_[*next];
      ++p.hops;
      if (*next == p.dst) {
        deliver(p, tick, out);
      } else if (p.hops >= hop_limit) {
        drop(p, DropReason::HopLimit, tick, out);
      } else {
        enqueue(p, *next, tick, out);
      }
    }
  }

  view_assign_ = assign;
  view_graph_ = g;
  return out;
}

double compute_pdr(std::uint64_t delivered, std::uint64_t sent) {
  if (sent == 0) return 1.0;
  return static_cast<double>(delivered) / static_cast<double>(sent);
}

double compute_delay(std::span<const Packet> delivered) {
  if (delivered.empty()) return 0.0;
  double total = 0.0;
  for (const Packet& p : delivered) total += static_cast<double>(p.delay());
  return total / static_cast<double>(delivered.size());
}

}  // namespace manet
