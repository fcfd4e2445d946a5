#include "manet/csv.hpp"

#include <fstream>
#include <stdexcept>

#include "manet/config.hpp"
#include "manet/figures.hpp"

namespace manet {

std::string series_csv(std::span<const MetricsRecord> series) {
  std::string out =
      "tick,cluster_count,connectivity,dominant_set_updates,sent,delivered,dropped,throughput,"
      "mean_delay,alive_nodes\n";
  for (const MetricsRecord& m : series) {
    out += std::to_string(m.tick) + ',' + std::to_string(m.cluster_count) + ',' +
           format_double(m.connectivity) + ',' + std::to_string(m.dominant_set_updates) + ',' +
           std::to_string(m.sent) + ',' + std::to_string(m.delivered) + ',' +
           std::to_string(m.dropped) + ',' + format_double(m.throughput) + ',' +
           format_double(m.mean_delay) + ',' + std::to_string(m.alive_nodes) + '\n';
  }
  return out;
}

std::string summary_csv(std::span<const SweepRow> rows) {
  std::string out = "algorithm,axis,value,runs";
  for (const char* name : {"cluster_count", "connectivity", "dominant_set_updates", "pdr",
                           "throughput", "mean_delay"}) {
    out += std::string(",") + name + "_mean," + name + "_std";
  }
  out += '\n';
  for (const SweepRow& r : rows) {
    out += std::string(to_string(r.algorithm)) + ',' + std::string(to_string(r.axis)) + ',' +
           format_double(r.value) + ',' + std::to_string(r.runs);
    for (const Stat& s : {r.cluster_count, r.connectivity, r.dominant_set_updates, r.pdr,
                          r.throughput, r.mean_delay}) {
      out += ',' + format_double(s.mean) + ',' + format_double(s.stddev);
    }
    out += '\n';
  }
  return out;
}

std::string figure_csv(const FigureTable& table) {
  std::string out = table.x_name;
  for (Algorithm a : table.algorithms) {
    out += ',' + std::string(to_string(a)) + "_mean," + std::string(to_string(a)) + "_std";
  }
  out += '\n';
  for (std::size_t i = 0; i < table.x.size(); ++i) {
    out += format_double(table.x[i]);
    for (const auto& column : table.cells) {
      out += ',' + format_double(column[i].mean) + ',' + format_double(column[i].stddev);
    }
    out += '\n';
  }
  return out;
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw std::runtime_error("cannot open '" + path + "' for writing");
  out << content;
  out.flush();
  if (!out) throw std::runtime_error("failed writing '" + path + "'");
}

}  // namespace manet
