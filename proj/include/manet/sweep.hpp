#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "manet/config.hpp"
#include "manet/engine.hpp"

namespace manet {

enum class SweepAxis : std::uint8_t { Nodes, Range, Pause };

std::string_view to_string(SweepAxis a);
std::optional<SweepAxis> parse_axis(std::string_view name);

/// `base` with one axis pinned: node count, a uniform transmission range, or
/// the pause time.
ScenarioConfig with_axis(ScenarioConfig base, SweepAxis axis, double value);

struct Stat {
  double mean = 0.0;
  double stddev = 0.0;  // sample standard deviation, 0 for a single value
};

Stat summarize(std::span<const double> values);

struct SweepRow {
  Algorithm algorithm = Algorithm::Paiwca;
  SweepAxis axis = SweepAxis::Nodes;
  double value = 0.0;
  std::size_t runs = 0;
  Stat cluster_count;
  Stat connectivity;
  Stat dominant_set_updates;
  Stat pdr;
  Stat throughput;
  Stat mean_delay;
};

/// Runs every config and returns the results in input order. Up to `jobs`
/// runs execute concurrently.
std::vector<RunResult> run_all(std::span<const ScenarioConfig> configs, unsigned jobs = 1);

/// Cross product of algorithms x values x seeds, aggregated across seeds. One
/// row per (algorithm, value), algorithms in the order given.
std::vector<SweepRow> sweep(const ScenarioConfig& base, SweepAxis axis,
                            std::span<const double> values, std::span<const std::uint64_t> seeds,
                            std::span<const Algorithm> algorithms, unsigned jobs = 1);

}  // namespace manet
