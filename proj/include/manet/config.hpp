#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "manet/baselines.hpp"
#include "manet/clustering.hpp"
#include "manet/energy.hpp"
#include "manet/graph.hpp"
#include "manet/mobility.hpp"
#include "manet/traffic.hpp"
#include "manet/types.hpp"

namespace manet {

inline constexpr std::string_view kToolVersion = "0.1.0";

/// Raised for any configuration problem; key() names the offending setting
/// (empty when the problem is not tied to one key, e.g. a missing file).
class ConfigError : public std::runtime_error {
 public:
  ConfigError(std::string key, const std::string& message)
      : std::runtime_error(key.empty() ? message : key + ": " + message), key_(std::move(key)) {}

  const std::string& key() const { return key_; }

 private:
  std::string key_;
};

enum class MobilityModel : std::uint8_t { RandomWaypoint, Static };

/// Explicit node description; unset fields are drawn like any other node.
struct NodeSpec {
  std::optional<Position> position;
  std::optional<double> range;
  std::optional<double> energy;

  friend bool operator==(const NodeSpec&, const NodeSpec&) = default;
};

struct Arrival {
  Tick tick = 0;
  NodeSpec node;

  friend bool operator==(const Arrival&, const Arrival&) = default;
};

struct ScenarioConfig {
  std::size_t node_count = 50;
  Area area;
  MobilityModel mobility = MobilityModel::RandomWaypoint;
  SpeedRange speed{1.0, 10.0};
  double pause = 0.0;  // s
  LinkRule link_rule = LinkRule::Mutual;
  double range_min = 10.0;  // m, per-node uniform draw
  double range_max = 70.0;
  double energy_min = 10.0;  // J, per-node uniform draw of the initial charge
  double energy_max = 80.0;
  double tx = 0.02;  // W
  double sim_time = 500.0;
  double dt = 1.0;
  Algorithm algorithm = Algorithm::Paiwca;
  std::uint64_t seed = 1;
  bool allow_out_of_range = false;
  bool traffic_enabled = true;

  PaiwcaParams paiwca;
  WcaParams wca;
  EnergyModel energy;
  FlowConfig flow;

  std::vector<NodeSpec> layout;  // when non-empty, replaces the node_count random nodes
  std::vector<Arrival> arrivals;

  std::size_t initial_count() const { return layout.empty() ? node_count : layout.size(); }
  std::size_t capacity() const { return initial_count() + arrivals.size(); }
  Tick ticks() const;

  /// Throws ConfigError naming the first offending key. Values outside the
  /// reference parameter table are only accepted with allow_out_of_range.
  void validate() const;
  /// Settings that lie outside the reference parameter table (empty when
  /// none), as "key=value (bound)" strings.
  std::vector<std::string> table_overrides() const;

  friend bool operator==(const ScenarioConfig&, const ScenarioConfig&) = default;
};

/// Sets one key from its text form. Throws ConfigError for unknown keys or
/// malformed values.
void apply_setting(ScenarioConfig& cfg, std::string_view key, std::string_view value);

/// Applies `key = value` lines on top of `base`. '#' starts a comment; blank
/// lines are ignored.
ScenarioConfig parse_config_text(std::string_view text, ScenarioConfig base = {});

/// Reads a config file on top of the defaults. Throws ConfigError when the
/// file cannot be read.
ScenarioConfig load_config(const std::string& path, ScenarioConfig base = {});

/// Every key with its current value, one `key = value` line each, in a fixed
/// order. parse_config_text(emit_config(c)) == c.
std::string emit_config(const ScenarioConfig& cfg);

/// All recognized keys in emit order.
std::vector<std::string> config_keys();

/// FNV-1a of emit_config, stable across runs.
std::uint64_t config_hash(const ScenarioConfig& cfg);

std::optional<Algorithm> parse_algorithm(std::string_view name);

/// Shortest text that reads back as exactly `v`.
std::string format_double(double v);

}  // namespace manet
