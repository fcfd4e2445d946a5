#include "manet/sweep.hpp"

#include <atomic>
#include <cmath>
#include <exception>
#include <mutex>
#include <thread>

namespace manet {

std::string_view to_string(SweepAxis a) {
  switch (a) {
    case SweepAxis::Nodes: return "nodes";
    case SweepAxis::Range: return "range";
    case SweepAxis::Pause: return "pause";
  }
  return "unknown";
}

std::optional<SweepAxis> parse_axis(std::string_view name) {
  if (name == "nodes") return SweepAxis::Nodes;
  if (name == "range") return SweepAxis::Range;
  if (name == "pause") return SweepAxis::Pause;
  return std::nullopt;
}

ScenarioConfig with_axis(ScenarioConfig base, SweepAxis axis, double value) {
  switch (axis) {
    case SweepAxis::Nodes:
      base.layout.clear();
      base.node_count = static_cast<std::size_t>(std::llround(value));
      break;
    case SweepAxis::Range:
      base.range_min = base.range_max = value;
      break;
    case SweepAxis::Pause:
      base.pause = value;
      break;
  }
  return base;
}

Stat summarize(std::span<const double> values) {
  Stat s;
  if (values.empty()) return s;
  double sum = 0.0;
  for (double v : values) sum += v;
  s.mean = sum / static_cast<double>(values.size());
  if (values.size() > 1) {
    double sq = 0.0;
    for (double v : values) sq += (v - s.mean) * (v - s.mean);
    s.stddev = std::sqrt(sq / static_cast<double>(values.size() - 1));
  }
  return s;
}

std::vector<RunResult> run_all(std::span<const ScenarioConfig> configs, unsigned jobs) {
  std::vector<RunResult> results(configs.size());
  if (jobs <= 1 || configs.size() <= 1) {
    for (std::size_t i = 0; i < configs.size(); ++i) results[i] = run(configs[i]);
    return results;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  auto worker = [&] {
    for (std::size_t i = next++; i < configs.size(); i = next++) {
      try {
        results[i] = run(configs[i]);
      } catch (...) {
        std::lock_guard lock(failure_mutex);
        if (!failure) failure = std::current_exception();
      }
    }
  };
  {
    std::vector<std::jthread> pool;
    const unsigned n = std::min<std::size_t>(jobs, configs.size());
    for (unsigned i = 0; i < n; ++i) pool.emplace_back(worker);
  }
  if (failure) std::rethrow_exception(failure);
  return results;
}

std::vector<SweepRow> sweep(const ScenarioConfig& base, SweepAxis axis,
                            std::span<const double> values, std::span<const std::uint64_t> seeds,
                            std::span<const Algorithm> algorithms, unsigned jobs) {
  std::vector<ScenarioConfig> configs;
  configs.reserve(algorithms.size() * values.size() * seeds.size());
  for (Algorithm a : algorithms) {
    for (double value : values) {
      for (std::uint64_t seed : seeds) {
        ScenarioConfig c = with_axis(base, axis, value);
        c.algorithm = a;
        c.seed = seed;
        configs.push_back(std::move(c));
      }
    }
  }
  const std::vector<RunResult> results = run_all(configs, jobs);

  std::vector<SweepRow> rows;
  std::size_t k = 0;
  for (Algorithm a : algorithms) {
    for (double value : values) {
      std::vector<double> clusters, conn, dsu, pdr, thr, delay;
      for (std::size_t s = 0; s < seeds.size(); ++s, ++k) {
        const RunSummary& r = results[k].summary;
        clusters.push_back(r.mean_cluster_count);
        conn.push_back(r.mean_connectivity);
        dsu.push_back(static_cast<double>(r.dominant_set_updates));
        pdr.push_back(r.pdr);
        thr.push_back(r.mean_throughput);
        delay.push_back(r.mean_delay);
      }
      SweepRow row;
      row.algorithm = a;
      row.axis = axis;
      row.value = value;
      row.runs = seeds.size();
      row.cluster_count = summarize(clusters);
      row.connectivity = summarize(conn);
      row.dominant_set_updates = summarize(dsu);
      row.pdr = summarize(pdr);
      row.throughput = summarize(thr);
      row.mean_delay = summarize(delay);
      rows.push_back(row);
    }
  }
  return rows;
}

}  // namespace manet
