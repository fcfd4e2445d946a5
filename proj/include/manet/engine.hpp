#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <vector>

#include "manet/assignment.hpp"
#include "manet/config.hpp"
#include "manet/graph.hpp"

namespace manet {

/// One row of the per-tick series. Counters are cumulative from tick 0.
struct MetricsRecord {
  Tick tick = 0;
  std::size_t cluster_count = 0;
  double connectivity = 0.0;
  std::uint64_t dominant_set_updates = 0;
  std::uint64_t sent = 0;
  std::uint64_t delivered = 0;
  std::uint64_t dropped = 0;
  double throughput = 0.0;  // packets delivered during this tick, per second
  double mean_delay = 0.0;  // ticks, over every packet delivered so far
  std::size_t alive_nodes = 0;

  friend bool operator==(const MetricsRecord&, const MetricsRecord&) = default;
};

struct RunSummary {
  double mean_cluster_count = 0.0;
  double mean_connectivity = 0.0;
  std::uint64_t dominant_set_updates = 0;
  std::uint64_t sent = 0;
  std::uint64_t delivered = 0;
  std::uint64_t dropped = 0;
  std::uint64_t in_flight = 0;
  std::array<std::uint64_t, 5> dropped_by_reason{};  // indexed by DropReason
  double pdr = 1.0;
  double mean_delay = 0.0;
  double mean_throughput = 0.0;
  std::size_t final_alive = 0;
  std::uint64_t epoch = 0;
};

struct RunResult {
  std::vector<MetricsRecord> series;
  RunSummary summary;
};

/// What an observer sees at the end of every tick (tick 0 is the initial
/// clustering, where `before` is empty).
struct TickView {
  Tick tick = 0;
  const NeighborGraph& graph;
  const ClusterAssignment& before;
  const ClusterAssignment& after;
  std::span<const Position> positions;
};

using TickObserver = std::function<void(const TickView&)>;

/// Largest connected component over the number of present nodes; 0 for an
/// empty graph.
double connectivity(const NeighborGraph& g);

/// Runs one scenario to completion. Validates the config first (ConfigError).
///
/// Each tick: move, drain energy and drop dead nodes, rebuild the graph,
/// refresh node attributes, admit arrivals, maintain or re-elect clusters,
/// forward traffic, record metrics.
RunResult run(const ScenarioConfig& cfg, const TickObserver& observer = {});

}  // namespace manet
