#pragma once

#include <span>
#include <string>

#include "manet/engine.hpp"
#include "manet/sweep.hpp"

namespace manet {

struct FigureTable;

/// Header plus one row per tick, columns in MetricsRecord field order.
std::string series_csv(std::span<const MetricsRecord> series);

/// Header plus one row per (algorithm, axis value).
std::string summary_csv(std::span<const SweepRow> rows);

/// x column followed by <algorithm>_mean, <algorithm>_std pairs.
std::string figure_csv(const FigureTable& table);

/// Writes `content` to `path`. Throws std::runtime_error naming the path on
/// failure.
void write_file(const std::string& path, const std::string& content);

}  // namespace manet
