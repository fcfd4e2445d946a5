// Command-line front end: single runs, parameter sweeps and figure data export.

#include <chrono>
#include <cstdlib>
#include <ctime>
#include <filesystem>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "manet/config.hpp"
#include "manet/csv.hpp"
#include "manet/engine.hpp"
#include "manet/figures.hpp"
#include "manet/sweep.hpp"

namespace fs = std::filesystem;
using manet::ConfigError;

namespace {

constexpr int kExitConfig = 1;
constexpr int kExitRuntime = 2;
constexpr const char* kOutDirEnv = "MANET_SIM_OUT_DIR";

std::string default_out_dir() {
  const char* env = std::getenv(kOutDirEnv);
  return env && *env ? std::string(env) : std::string("results");
}

std::string utc_now() {
  const auto now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&now, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

std::string hex(std::uint64_t v) {
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(v));
  return buf;
}

// "1,2,5" or "lo:hi[:step]" items, comma separated.
std::vector<double> parse_list(const std::string& key, const std::string& text) {
  std::vector<double> out;
  std::stringstream items(text);
  std::string item;
  auto number = [&](const std::string& s) {
    try {
      std::size_t used = 0;
      const double v = std::stod(s, &used);
      if (used != s.size()) throw std::invalid_argument(s);
      return v;
    } catch (const std::exception&) {
      throw ConfigError(key, "bad number '" + s + "' in list '" + text + "'");
    }
  };
  while (std::getline(items, item, ',')) {
    if (item.empty()) continue;
    const auto colon = item.find(':');
    if (colon == std::string::npos) {
      out.push_back(number(item));
      continue;
    }
    const auto second = item.find(':', colon + 1);
    const double lo = number(item.substr(0, colon));
    const double hi = number(item.substr(colon + 1, second == std::string::npos ? std::string::npos
                                                                             : second - colon - 1));
    const double step = second == std::string::npos ? 1.0 : number(item.substr(second + 1));
    if (!(step > 0.0)) throw ConfigError(key, "range step must be > 0");
    for (double v = lo; v <= hi + 1e-9; v += step) out.push_back(v);
  }
  if (out.empty()) throw ConfigError(key, "empty list");
  return out;
}

std::vector<std::uint64_t> parse_seeds(const std::string& text) {
  std::vector<std::uint64_t> seeds;
  for (double v : parse_list("seeds", text)) {
    if (v < 0 || v != static_cast<double>(static_cast<std::uint64_t>(v))) {
      throw ConfigError("seeds", "seeds must be non-negative integers");
    }
    seeds.push_back(static_cast<std::uint64_t>(v));
  }
  return seeds;
}

std::vector<manet::Algorithm> parse_algorithms(const std::string& text) {
  std::vector<manet::Algorithm> out;
  if (text == "all") return {std::begin(manet::kAllAlgorithms), std::end(manet::kAllAlgorithms)};
  std::stringstream items(text);
  std::string item;
  while (std::getline(items, item, ',')) {
    const auto a = manet::parse_algorithm(item);
    if (!a) throw ConfigError("algorithms", "unknown algorithm '" + item + "'");
    out.push_back(*a);
  }
  if (out.empty()) throw ConfigError("algorithms", "empty list");
  return out;
}

// Options shared by every subcommand that builds a scenario.
struct ScenarioFlags {
  std::string config_path;
  std::vector<std::string> settings;
  bool unsafe = false;
  std::optional<std::uint64_t> seed;
  std::string algorithm;
  std::optional<std::size_t> nodes;
  std::optional<double> range;

  void attach(CLI::App* cmd, bool single_run) {
    cmd->add_option("--config", config_path, "Scenario file (key = value lines)");
    cmd->add_option("--set", settings, "Override one key, e.g. --set energy.drain_ch=0.2");
    cmd->add_flag("--unsafe", unsafe, "Accept values outside the reference parameter table");
    if (single_run) {
      cmd->add_option("--seed", seed, "Random seed");
      cmd->add_option("--algorithm", algorithm, "paiwca, wca, lowest_id, highest_degree, mwis");
      cmd->add_option("--nodes", nodes, "Number of nodes");
      cmd->add_option("--range", range, "Uniform transmission range in meters");
    }
  }

  // Precedence: defaults < file < --set < dedicated flags.
  manet::ScenarioConfig resolve() const {
    manet::ScenarioConfig cfg;
    if (!config_path.empty()) cfg = manet::load_config(config_path);
    for (const std::string& kv : settings) {
      const auto eq = kv.find('=');
      if (eq == std::string::npos) throw ConfigError(kv, "--set expects key=value");
      manet::apply_setting(cfg, kv.substr(0, eq), kv.substr(eq + 1));
    }
    if (seed) cfg.seed = *seed;
    if (!algorithm.empty()) manet::apply_setting(cfg, "sim.algorithm", algorithm);
    if (nodes) {
      cfg.layout.clear();
      cfg.node_count = *nodes;
    }
    if (range) cfg.range_min = cfg.range_max = *range;
    if (unsafe) cfg.allow_out_of_range = true;
    cfg.validate();
    return cfg;
  }
};

nlohmann::json manifest_base(const manet::ScenarioConfig& cfg) {
  nlohmann::json m;
  m["tool"] = "manet_sim";
  m["tool_version"] = std::string(manet::kToolVersion);
  m["config_hash"] = hex(manet::config_hash(cfg));
  m["seed"] = cfg.seed;
  m["config"] = manet::emit_config(cfg);
  m["table_overrides"] = cfg.table_overrides();
  return m;
}

void ensure_parent(const std::string& path) {
  const fs::path parent = fs::path(path).parent_path();
  if (!parent.empty()) fs::create_directories(parent);
}

int cmd_run(const ScenarioFlags& flags, std::string out) {
  const manet::ScenarioConfig cfg = flags.resolve();
  if (out.empty()) {
    out = (fs::path(default_out_dir()) /
           ("run_" + std::string(manet::to_string(cfg.algorithm)) + "_seed" + std::to_string(cfg.seed) + ".csv"))
              .string();
  }
  nlohmann::json manifest = manifest_base(cfg);
  manifest["start_time"] = utc_now();
  const manet::RunResult result = manet::run(cfg);
  ensure_parent(out);
  manet::write_file(out, manet::series_csv(result.series));
  manifest["end_time"] = utc_now();
  manifest["outputs"] = {out};
  manifest["summary"] = {{"pdr", result.summary.pdr},
                         {"mean_cluster_count", result.summary.mean_cluster_count},
                         {"dominant_set_updates", result.summary.dominant_set_updates},
                         {"mean_delay", result.summary.mean_delay}};
  manet::write_file(out + ".manifest.json", manifest.dump(2) + "\n");
  std::cout << "wrote " << out << " (" << result.series.size() << " ticks, pdr "
            << manet::format_double(result.summary.pdr) << ")\n";
  return 0;
}

int cmd_sweep(const ScenarioFlags& flags, const std::string& axis_name, const std::string& values_text,
              const std::string& seeds_text, const std::string& algorithms_text, std::string out,
              unsigned jobs) {
  const manet::ScenarioConfig base = flags.resolve();
  const auto axis = manet::parse_axis(axis_name);
  if (!axis) throw ConfigError("axis", "expected nodes, range or pause");
  const auto values = parse_list("values", values_text);
  const auto seeds = parse_seeds(seeds_text);
  const auto algorithms = parse_algorithms(algorithms_text);
  for (double v : values) manet::with_axis(base, *axis, v).validate();

  if (out.empty()) {
    out = (fs::path(default_out_dir()) / ("sweep_" + axis_name + ".csv")).string();
  }
  nlohmann::json manifest = manifest_base(base);
  manifest["start_time"] = utc_now();
  manifest["axis"] = axis_name;
  manifest["values"] = values;
  manifest["seeds"] = seeds;
  const auto rows = manet::sweep(base, *axis, values, seeds, algorithms, jobs);
  ensure_parent(out);
  manet::write_file(out, manet::summary_csv(rows));
  manifest["end_time"] = utc_now();
  manifest["outputs"] = {out};
  manet::write_file(out + ".manifest.json", manifest.dump(2) + "\n");
  std::cout << "wrote " << out << " (" << rows.size() << " rows)\n";
  return 0;
}

int cmd_figure(const ScenarioFlags& flags, const std::string& name, std::string out_dir,
               const std::string& seeds_text, unsigned jobs) {
  const auto figure = manet::parse_figure(name);
  if (!figure) {
    throw ConfigError("figure", "unknown figure '" + name +
                                    "' (clusters, connectivity, dominant, throughput, pdr, delay)");
  }
  const manet::ScenarioConfig base = flags.resolve();
  const auto seeds = parse_seeds(seeds_text);
  if (out_dir.empty()) out_dir = default_out_dir();
  fs::create_directories(out_dir);
  const std::string out = (fs::path(out_dir) / ("figure_" + name + ".csv")).string();

  const manet::ScenarioConfig preset = manet::figure_preset(*figure, base);
  nlohmann::json manifest = manifest_base(preset);
  manifest["start_time"] = utc_now();
  manifest["figure"] = name;
  manifest["seeds"] = seeds;
  const auto table = manet::figure_data(*figure, seeds, base, jobs);
  manet::write_file(out, manet::figure_csv(table));
  manifest["end_time"] = utc_now();
  manifest["outputs"] = {out};
  manet::write_file(out + ".manifest.json", manifest.dump(2) + "\n");
  std::cout << "wrote " << out << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"MANET clustering simulator"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(manet::kToolVersion));

  ScenarioFlags run_flags, sweep_flags, figure_flags, show_flags;
  std::string run_out, sweep_out, figure_out;
  std::string axis, values, seeds = "1:5", algorithms = "all", figure_name, figure_seeds = "1:5";
  unsigned sweep_jobs = 1, figure_jobs = 1;

  CLI::App* run_cmd = app.add_subcommand("run", "Run one scenario and write its per-tick CSV");
  run_flags.attach(run_cmd, true);
  run_cmd->add_option("--out", run_out, "Output CSV path");

  CLI::App* sweep_cmd = app.add_subcommand("sweep", "Sweep one axis over several seeds");
  sweep_flags.attach(sweep_cmd, false);
  sweep_cmd->add_option("--axis", axis, "nodes, range or pause")->required();
  sweep_cmd->add_option("--values", values, "Axis values, e.g. 10,20,30 or 10:100:10")->required();
  sweep_cmd->add_option("--seeds", seeds, "Seeds, e.g. 1,2,3 or 1:20");
  sweep_cmd->add_option("--algorithms", algorithms, "Comma-separated list or 'all'");
  sweep_cmd->add_option("--out", sweep_out, "Output CSV path");
  sweep_cmd->add_option("--jobs", sweep_jobs, "Concurrent runs");

  CLI::App* figure_cmd = app.add_subcommand("figure", "Export plot data for one comparison figure");
  figure_flags.attach(figure_cmd, false);
  figure_cmd->add_option("name", figure_name, "clusters, connectivity, dominant, throughput, pdr, delay")
      ->required();
  figure_cmd->add_option("--out", figure_out, "Output directory");
  figure_cmd->add_option("--seeds", figure_seeds, "Seeds, e.g. 1:20");
  figure_cmd->add_option("--jobs", figure_jobs, "Concurrent runs");

  CLI::App* show_cmd = app.add_subcommand("config", "Print the fully resolved configuration");
  show_flags.attach(show_cmd, true);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitConfig;
  }

  try {
    if (*run_cmd) return cmd_run(run_flags, run_out);
    if (*sweep_cmd) return cmd_sweep(sweep_flags, axis, values, seeds, algorithms, sweep_out, sweep_jobs);
    if (*figure_cmd) return cmd_figure(figure_flags, figure_name, figure_out, figure_seeds, figure_jobs);
    if (*show_cmd) {
      std::cout << manet::emit_config(show_flags.resolve());
      return 0;
    }
  } catch (const ConfigError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return kExitConfig;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitRuntime;
  }
  return 0;
}
