#include "manet/figures.hpp"

namespace manet {

std::string_view to_string(Figure f) {
  switch (f) {
    case Figure::Clusters: return "clusters";
    case Figure::Connectivity: return "connectivity";
    case Figure::Dominant: return "dominant";
    case Figure::Throughput: return "throughput";
    case Figure::Pdr: return "pdr";
    case Figure::Delay: return "delay";
  }
  return "unknown";
}

std::optional<Figure> parse_figure(std::string_view name) {
  for (Figure f : kAllFigures) {
    if (to_string(f) == name) return f;
  }
  return std::nullopt;
}

namespace {

// Traffic experiments: 100 nodes, every node a source.
ScenarioConfig traffic_preset(ScenarioConfig base) {
  base.layout.clear();
  base.node_count = 100;
  base.range_min = 150.0;
  base.range_max = 150.0;
  base.flow.source_count = 0;
  base.traffic_enabled = true;
  return base;
}

std::vector<double> node_grid() {
  std::vector<double> out;
  for (int n = 10; n <= 100; n += 10) out.push_back(n);
  return out;
}

}  // namespace

ScenarioConfig figure_preset(Figure f, ScenarioConfig base) {
  switch (f) {
    case Figure::Clusters:
      return base;
    case Figure::Connectivity:
      base.layout.clear();
      base.node_count = 50;
      return base;
    case Figure::Dominant:
      base.speed = {10.0, 10.0};
      base.pause = 0.0;
      return base;
    case Figure::Throughput:
    case Figure::Pdr:
    case Figure::Delay:
      return traffic_preset(base);
  }
  return base;
}

std::vector<double> figure_axis(Figure f) {
  switch (f) {
    case Figure::Clusters:
    case Figure::Dominant:
      return node_grid();
    case Figure::Connectivity:
      return {5, 10, 20, 30, 40, 50, 60, 70, 80, 90, 100, 125, 150, 175, 200};
    case Figure::Pdr:
      return {0, 50, 100, 200, 500};
    case Figure::Throughput:
    case Figure::Delay:
      return {};
  }
  return {};
}

FigureTable figure_data(Figure f, std::span<const std::uint64_t> seeds, const ScenarioConfig& base,
                        unsigned jobs, std::span<const Algorithm> algorithms) {
  const ScenarioConfig preset = figure_preset(f, base);
  FigureTable table;
  table.algorithms.assign(algorithms.begin(), algorithms.end());

  if (f == Figure::Throughput || f == Figure::Delay) {
    table.x_name = "tick";
    std::vector<ScenarioConfig> configs;
    for (Algorithm a : algorithms) {
      for (std::uint64_t seed : seeds) {
        ScenarioConfig c = preset;
        c.algorithm = a;
        c.seed = seed;
        configs.push_back(std::move(c));
      }
    }
    const auto results = run_all(configs, jobs);
    const std::size_t ticks = static_cast<std::size_t>(preset.ticks()) + 1;
    for (std::size_t t = 0; t < ticks; ++t) table.x.push_back(static_cast<double>(t));
    std::size_t k = 0;
    for (std::size_t a = 0; a < algorithms.size(); ++a) {
      std::vector<std::vector<double>> per_tick(ticks);
      for (std::size_t s = 0; s < seeds.size(); ++s, ++k) {
        const auto& series = results[k].series;
        for (std::size_t t = 0; t < ticks && t < series.size(); ++t) {
          per_tick[t].push_back(f == Figure::Throughput ? series[t].throughput : series[t].mean_delay);
        }
      }
      std::vector<Stat> column;
      for (const auto& values : per_tick) column.push_back(summarize(values));
      table.cells.push_back(std::move(column));
    }
    return table;
  }

  const SweepAxis axis = f == Figure::Connectivity ? SweepAxis::Range
                         : f == Figure::Pdr        ? SweepAxis::Pause
                                                   : SweepAxis::Nodes;
  table.x_name = f == Figure::Connectivity ? "tr" : f == Figure::Pdr ? "pause" : "nodes";
  table.x = figure_axis(f);
  const auto rows = sweep(preset, axis, table.x, seeds, algorithms, jobs);
  std::size_t k = 0;
  for (std::size_t a = 0; a < algorithms.size(); ++a) {
    std::vector<Stat> column;
    for (std::size_t i = 0; i < table.x.size(); ++i, ++k) {
      const SweepRow& row = rows[k];
      switch (f) {
        case Figure::Clusters: column.push_back(row.cluster_count); break;
        case Figure::Connectivity: column.push_back(row.connectivity); break;
        case Figure::Dominant: column.push_back(row.dominant_set_updates); break;
        default: column.push_back(row.pdr); break;
      }
    }
    table.cells.push_back(std::move(column));
  }
  return table;
}

}  // namespace manet
