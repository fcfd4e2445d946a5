#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <deque>
#include <optional>
#include <string_view>
#include <span>
#include <unordered_map>
#include <vector>

#include "manet/assignment.hpp"
#include "manet/graph.hpp"
#include "manet/rng.hpp"

namespace manet {

struct FlowConfig {
  std::size_t source_count = 0;     // 0 = every initial node is a source
  double rate = 1.0;                // packets per second per source
  std::size_t queue_capacity = 50;  // packets per node
  int per_hop_delay = 1;            // ticks a packet waits at a node before it may move on
  std::size_t service_rate = 10;    // packets a node may forward per tick, 0 = unlimited
  double stop_time = -1.0;          // s after which sources go quiet, < 0 = never

  void validate() const;

  friend bool operator==(const FlowConfig&, const FlowConfig&) = default;
};

enum class DropReason : std::uint8_t { QueueOverflow, NoRoute, LinkBreak, NodeDeath, HopLimit };

std::string_view to_string(DropReason r);

enum class PacketState : std::uint8_t { InQueue, Delivered, Dropped };

struct Packet {
  std::uint64_t id = 0;
  NodeId src = kNoNode;
  NodeId dst = kNoNode;
  Tick created_tick = 0;
  Tick ready_tick = 0;
  std::uint32_t hops = 0;
  PacketState state = PacketState::InQueue;
  NodeId at = kNoNode;
  Tick delivered_tick = -1;
  DropReason reason = DropReason::NoRoute;

  Tick delay() const { return delivered_tick - created_tick; }
};

/// Routing backbone: heads, gateways, and members with a neighbor in another
/// cluster. Indexed by node ID.
std::vector<std::uint8_t> routing_backbone(const ClusterAssignment& assign,
                                           const NeighborGraph& g);

/// Next hop towards dst over the cluster structure, or nullopt when dst cannot
/// be reached. A neighbor of dst delivers directly; an ordinary member hands
/// the packet to its head; backbone nodes follow a shortest path through the
/// backbone.
std::optional<NodeId> route_next_hop(const ClusterAssignment& assign, const NeighborGraph& g,
                                     NodeId at, NodeId dst);

/// Same rule as route_next_hop with the per-destination searches cached; valid
/// for one (assignment, graph) snapshot.
class RouteTable {
 public:
  RouteTable(const ClusterAssignment& assign, const NeighborGraph& g);

  std::optional<NodeId> next_hop(NodeId at, NodeId dst);

 private:
  const ClusterAssignment* assign_;
  const NeighborGraph* graph_;
  std::vector<std::uint8_t> backbone_;
  std::unordered_map<NodeId, std::vector<int>> hops_to_;
};

struct Flow {
  NodeId src = kNoNode;
  NodeId dst = kNoNode;
  double credit = 0.0;
};

struct TrafficStep {
  std::vector<Packet> delivered;
  std::vector<Packet> dropped;
  std::size_t generated = 0;
};

/// Constant-bit-rate flows forwarded hop by hop over the cluster structure.
///
/// Forwarding decisions use the neighbor tables of the previous tick, while a
/// transmission only succeeds over a link that still exists now. Under
/// mobility that lag is what breaks routes.
class TrafficLayer {
 public:
  TrafficLayer(FlowConfig config, std::size_t capacity);

  /// Picks sources (uniformly, without replacement) among `nodes` and gives
  /// each a fixed uniformly drawn destination different from itself.
  void start_flows(std::span<const NodeId> nodes, Rng& rng);
  /// Installs explicit flows instead of drawing them.
  void set_flows(std::vector<Flow> flows) { flows_ = std::move(flows); }
  const std::vector<Flow>& flows() const { return flows_; }

  /// Injects one packet at src now; used by start-up code and tests.
  void inject(NodeId src, NodeId dst, Tick tick, TrafficStep& out);

  /// Drops every packet queued at a node that just died.
  void on_node_death(NodeId v, Tick tick, TrafficStep& out);

  /// One tick: generate, then forward every packet that is ready.
  TrafficStep step(const ClusterAssignment& assign, const NeighborGraph& g, Tick tick, double dt);

  std::uint64_t sent() const { return sent_; }
  std::uint64_t delivered() const { return delivered_; }
  std::uint64_t dropped() const { return dropped_; }
  std::uint64_t dropped(DropReason r) const { return dropped_by_reason_[static_cast<std::size_t>(r)]; }
  std::uint64_t in_flight() const;
  /// Packets each node transmitted / received during the last step.
  const std::vector<std::size_t>& tx_counts() const { return tx_; }
  const std::vector<std::size_t>& rx_counts() const { return rx_; }

 private:
  bool enqueue(Packet p, NodeId at, Tick tick, TrafficStep& out);
  void drop(Packet p, DropReason reason, Tick tick, TrafficStep& out);
  void deliver(Packet p, Tick tick, TrafficStep& out);

  FlowConfig config_;
  std::vector<Flow> flows_;
  std::vector<std::deque<Packet>> queues_;
  std::vector<std::size_t> tx_;
  std::vector<std::size_t> rx_;
  std::optional<ClusterAssignment> view_assign_;
  std::optional<NeighborGraph> view_graph_;
  std::uint64_t next_id_ = 0;
  std::uint64_t sent_ = 0;
  std::uint64_t delivered_ = 0;
  std::uint64_t dropped_ = 0;
  std::array<std::uint64_t, 5> dropped_by_reason_{};
};

/// delivered / sent, and 1 when nothing was sent.
double compute_pdr(std::uint64_t delivered, std::uint64_t sent);

/// Mean delay in ticks over delivered packets only; 0 for an empty list.
double compute_delay(std::span<const Packet> delivered);

}  // namespace manet
