#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "manet/config.hpp"
#include "manet/sweep.hpp"

namespace manet {

enum class Figure : std::uint8_t { Clusters, Connectivity, Dominant, Throughput, Pdr, Delay };

inline constexpr Figure kAllFigures[] = {Figure::Clusters, Figure::Connectivity, Figure::Dominant,
                                         Figure::Throughput, Figure::Pdr, Figure::Delay};

std::string_view to_string(Figure f);
std::optional<Figure> parse_figure(std::string_view name);

/// Plot-ready data: cells[a][i] aggregates algorithm a at x[i] across seeds.
struct FigureTable {
  std::string x_name;
  std::vector<double> x;
  std::vector<Algorithm> algorithms;
  std::vector<std::vector<Stat>> cells;
};

/// Scenario each figure is generated from, layered over `base`.
ScenarioConfig figure_preset(Figure f, ScenarioConfig base = {});

/// Axis grid of a sweep-style figure (empty for the time-series figures).
std::vector<double> figure_axis(Figure f);

/// Runs the preset for every algorithm and seed and aggregates the figure's
/// metric.
FigureTable figure_data(Figure f, std::span<const std::uint64_t> seeds,
                        const ScenarioConfig& base = {}, unsigned jobs = 1,
                        std::span<const Algorithm> algorithms = kAllAlgorithms);

}  // namespace manet
