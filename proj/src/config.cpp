#include "manet/config.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <functional>
#include <limits>
#include <type_traits>
#include <sstream>

namespace manet {

std::string format_double(double v) {
  char buf[64];
  auto [end, ec] = std::to_chars(buf, buf + sizeof buf, v);
  if (ec != std::errc{}) throw std::runtime_error("format_double: conversion failed");
  return std::string(buf, end);
}

std::optional<Algorithm> parse_algorithm(std::string_view name) {
  for (Algorithm a : kAllAlgorithms) {
    if (to_string(a) == name) return a;
  }
  if (name == "lowestid" || name == "lid") return Algorithm::LowestId;
  if (name == "highestdegree" || name == "hd") return Algorithm::HighestDegree;
  return std::nullopt;
}

Tick ScenarioConfig::ticks() const { return static_cast<Tick>(std::floor(sim_time / dt + 1e-9)); }

namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  while (true) {
    const auto pos = s.find(sep, start);
    out.push_back(trim(s.substr(start, pos - start)));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return out;
}

double to_double(std::string_view key, std::string_view text) {
  double v = 0.0;
  const auto t = trim(text);
  auto [ptr, ec] = std::from_chars(t.data(), t.data() + t.size(), v);
  if (ec != std::errc{} || ptr != t.data() + t.size() || t.empty() || !std::isfinite(v)) {
    throw ConfigError(std::string(key), "expected a number, got '" + std::string(text) + "'");
  }
  return v;
}

std::uint64_t to_uint(std::string_view key, std::string_view text) {
  std::uint64_t v = 0;
  const auto t = trim(text);
  auto [ptr, ec] = std::from_chars(t.data(), t.data() + t.size(), v);
  if (ec != std::errc{} || ptr != t.data() + t.size() || t.empty()) {
    throw ConfigError(std::string(key),
                      "expected a non-negative integer, got '" + std::string(text) + "'");
  }
  return v;
}

bool to_bool(std::string_view key, std::string_view text) {
  const auto t = trim(text);
  if (t == "true" || t == "1" || t == "yes") return true;
  if (t == "false" || t == "0" || t == "no") return false;
  throw ConfigError(std::string(key), "expected true or false, got '" + std::string(text) + "'");
}

// Node spec text: "random" or "x,y,range,energy" where any field may be '*'.
NodeSpec to_node_spec(std::string_view key, std::string_view text) {
  NodeSpec spec;
  if (trim(text) == "random") return spec;
  const auto fields = split(text, ',');
  if (fields.size() != 4) {
    throw ConfigError(std::string(key), "node spec needs x,y,range,energy, got '" +
                                            std::string(text) + "'");
  }
  if ((fields[0] == "*") != (fields[1] == "*")) {
    throw ConfigError(std::string(key), "node position needs both x and y or neither");
  }
  if (fields[0] != "*") spec.position = Position{to_double(key, fields[0]), to_double(key, fields[1])};
  if (fields[2] != "*") spec.range = to_double(key, fields[2]);
  if (fields[3] != "*") spec.energy = to_double(key, fields[3]);
  return spec;
}

std::string from_node_spec(const NodeSpec& spec) {
  if (!spec.position && !spec.range && !spec.energy) return "random";
  auto opt = [](const std::optional<double>& v) { return v ? format_double(*v) : std::string("*"); };
  std::string out = spec.position ? format_double(spec.position->x) + "," + format_double(spec.position->y)
                                  : std::string("*,*");
  return out + "," + opt(spec.range) + "," + opt(spec.energy);
}

struct Entry {
  std::string key;
  std::function<std::string(const ScenarioConfig&)> get;
  std::function<void(ScenarioConfig&, std::string_view)> set;
};

template <class Field>
Entry number(std::string key, Field field) {
  return {key,
          [field](const ScenarioConfig& c) { return format_double(field(c)); },
          [field, key](ScenarioConfig& c, std::string_view v) { field(c) = to_double(key, v); }};
}

template <class Field>
Entry count(std::string key, Field field) {
  return {key,
          [field](const ScenarioConfig& c) {
            return std::to_string(field(c));
          },
          [field, key](ScenarioConfig& c, std::string_view v) {
            using T = std::remove_cvref_t<decltype(field(c))>;
            const std::uint64_t raw = to_uint(key, v);
            if (raw > static_cast<std::uint64_t>(std::numeric_limits<T>::max())) {
              throw ConfigError(key, "value too large");
            }
            field(c) = static_cast<T>(raw);
          }};
}

template <class Field>
Entry flag(std::string key, Field field) {
  return {key,
          [field](const ScenarioConfig& c) {
            return std::string(field(c) ? "true" : "false");
          },
          [field, key](ScenarioConfig& c, std::string_view v) { field(c) = to_bool(key, v); }};
}

const std::vector<Entry>& registry() {
  using C = ScenarioConfig;
  static const std::vector<Entry> entries = [] {
    std::vector<Entry> e;
    e.push_back(count("node_count", [](auto& c) -> auto& { return c.node_count; }));
    e.push_back(number("area.width", [](auto& c) -> auto& { return c.area.width; }));
    e.push_back(number("area.height", [](auto& c) -> auto& { return c.area.height; }));
    e.push_back({"mobility.model",
                 [](const C& c) {
                   return std::string(c.mobility == MobilityModel::Static ? "static" : "rwp");
                 },
                 [](C& c, std::string_view v) {
                   v = trim(v);
                   if (v == "rwp" || v == "random_waypoint") c.mobility = MobilityModel::RandomWaypoint;
                   else if (v == "static") c.mobility = MobilityModel::Static;
                   else throw ConfigError("mobility.model", "expected rwp or static");
                 }});
    e.push_back(number("mobility.speed_min", [](auto& c) -> auto& { return c.speed.min; }));
    e.push_back(number("mobility.speed_max", [](auto& c) -> auto& { return c.speed.max; }));
    e.push_back(number("mobility.pause", [](auto& c) -> auto& { return c.pause; }));
    e.push_back({"mobility.link_rule",
                 [](const C& c) {
                   return std::string(c.link_rule == LinkRule::Mutual ? "mutual" : "either");
                 },
                 [](C& c, std::string_view v) {
                   v = trim(v);
                   if (v == "mutual") c.link_rule = LinkRule::Mutual;
                   else if (v == "either") c.link_rule = LinkRule::Either;
                   else throw ConfigError("mobility.link_rule", "expected mutual or either");
                 }});
    e.push_back(number("range.min", [](auto& c) -> auto& { return c.range_min; }));
    e.push_back(number("range.max", [](auto& c) -> auto& { return c.range_max; }));
    e.push_back(number("energy.initial_min", [](auto& c) -> auto& { return c.energy_min; }));
    e.push_back(number("energy.initial_max", [](auto& c) -> auto& { return c.energy_max; }));
    e.push_back(number("energy.drain_idle", [](auto& c) -> auto& { return c.energy.drain_idle; }));
    e.push_back(number("energy.drain_member", [](auto& c) -> auto& { return c.energy.drain_member; }));
    e.push_back(number("energy.drain_ch", [](auto& c) -> auto& { return c.energy.drain_ch; }));
    e.push_back(number("energy.cost_tx", [](auto& c) -> auto& { return c.energy.cost_tx; }));
    e.push_back(number("energy.cost_rx", [](auto& c) -> auto& { return c.energy.cost_rx; }));
    e.push_back(number("node.tx", [](auto& c) -> auto& { return c.tx; }));
    e.push_back(number("sim.time", [](auto& c) -> auto& { return c.sim_time; }));
    e.push_back(number("sim.dt", [](auto& c) -> auto& { return c.dt; }));
    e.push_back(count("sim.seed", [](auto& c) -> auto& { return c.seed; }));
    e.push_back({"sim.algorithm", [](const C& c) { return std::string(to_string(c.algorithm)); },
                 [](C& c, std::string_view v) {
                   auto a = parse_algorithm(trim(v));
                   if (!a) {
                     throw ConfigError("sim.algorithm",
                                       "unknown algorithm '" + std::string(v) +
                                           "' (paiwca, wca, lowest_id, highest_degree, mwis)");
                   }
                   c.algorithm = *a;
                 }});
    e.push_back(flag("sim.allow_out_of_range", [](auto& c) -> auto& { return c.allow_out_of_range; }));
    e.push_back(number("weights.w1", [](auto& c) -> auto& { return c.paiwca.weights.w1; }));
    e.push_back(number("weights.w2", [](auto& c) -> auto& { return c.paiwca.weights.w2; }));
    e.push_back(number("weights.w3", [](auto& c) -> auto& { return c.paiwca.weights.w3; }));
    e.push_back(number("weights.w4", [](auto& c) -> auto& { return c.paiwca.weights.w4; }));
    e.push_back(flag("weights.include_chprob",
                     [](auto& c) -> auto& { return c.paiwca.weights.include_chprob_term; }));
    e.push_back(flag("weights.normalize", [](auto& c) -> auto& { return c.paiwca.weights.normalize_terms; }));
    e.push_back(number("chprob.c_prob", [](auto& c) -> auto& { return c.paiwca.chprob.c_prob; }));
    e.push_back(number("chprob.p_min", [](auto& c) -> auto& { return c.paiwca.chprob.p_min; }));
    e.push_back(number("chprob.tr_max", [](auto& c) -> auto& { return c.paiwca.chprob.tr_max; }));
    e.push_back(flag("chprob.normalize_range",
                     [](auto& c) -> auto& { return c.paiwca.chprob.normalize_range; }));
    e.push_back({"paiwca.orphan_timeout",
                 [](const C& c) { return std::to_string(c.paiwca.orphan_timeout); },
                 [](C& c, std::string_view v) {
                   const auto raw = to_uint("paiwca.orphan_timeout", v);
                   if (raw > 1000000) throw ConfigError("paiwca.orphan_timeout", "value too large");
                   c.paiwca.orphan_timeout = static_cast<int>(raw);
                 }});
    e.push_back(count("paiwca.max_cluster_size",
                      [](auto& c) -> auto& { return c.paiwca.max_cluster_size; }));
    e.push_back(number("wca.w1", [](auto& c) -> auto& { return c.wca.w1; }));
    e.push_back(number("wca.w2", [](auto& c) -> auto& { return c.wca.w2; }));
    e.push_back(number("wca.w3", [](auto& c) -> auto& { return c.wca.w3; }));
    e.push_back(number("wca.w4", [](auto& c) -> auto& { return c.wca.w4; }));
    e.push_back(number("wca.ideal_degree", [](auto& c) -> auto& { return c.wca.ideal_degree; }));
    e.push_back(flag("wca.degree_difference", [](auto& c) -> auto& { return c.wca.degree_difference; }));
    e.push_back(flag("traffic.enabled", [](auto& c) -> auto& { return c.traffic_enabled; }));
    e.push_back(count("traffic.sources", [](auto& c) -> auto& { return c.flow.source_count; }));
    e.push_back(number("traffic.rate", [](auto& c) -> auto& { return c.flow.rate; }));
    e.push_back(count("traffic.queue_capacity", [](auto& c) -> auto& { return c.flow.queue_capacity; }));
    e.push_back({"traffic.per_hop_delay",
                 [](const C& c) { return std::to_string(c.flow.per_hop_delay); },
                 [](C& c, std::string_view v) {
                   const auto raw = to_uint("traffic.per_hop_delay", v);
                   if (raw > 1000000) throw ConfigError("traffic.per_hop_delay", "value too large");
                   c.flow.per_hop_delay = static_cast<int>(raw);
                 }});
    e.push_back(count("traffic.service_rate", [](auto& c) -> auto& { return c.flow.service_rate; }));
    e.push_back(number("traffic.stop_time", [](auto& c) -> auto& { return c.flow.stop_time; }));
    e.push_back({"nodes.layout",
                 [](const C& c) {
                   std::string out;
                   for (std::size_t i = 0; i < c.layout.size(); ++i) {
                     if (i) out += "; ";
                     out += from_node_spec(c.layout[i]);
                   }
                   return out;
                 },
                 [](C& c, std::string_view v) {
                   c.layout.clear();
                   if (trim(v).empty()) return;
                   for (auto item : split(v, ';')) c.layout.push_back(to_node_spec("nodes.layout", item));
                 }});
    e.push_back({"arrivals",
                 [](const C& c) {
                   std::string out;
                   for (std::size_t i = 0; i < c.arrivals.size(); ++i) {
                     if (i) out += "; ";
                     out += std::to_string(c.arrivals[i].tick) + "@" + from_node_spec(c.arrivals[i].node);
                   }
                   return out;
                 },
                 [](C& c, std::string_view v) {
                   c.arrivals.clear();
                   if (trim(v).empty()) return;
                   for (auto item : split(v, ';')) {
                     const auto at = item.find('@');
                     if (at == std::string_view::npos) {
                       throw ConfigError("arrivals", "expected tick@spec, got '" + std::string(item) + "'");
                     }
                     Arrival a;
                     a.tick = static_cast<Tick>(to_uint("arrivals", item.substr(0, at)));
                     a.node = to_node_spec("arrivals", item.substr(at + 1));
                     c.arrivals.push_back(a);
                   }
                 }});
    return e;
  }();
  return entries;
}

void require(bool ok, const char* key, const std::string& message) {
  if (!ok) throw ConfigError(key, message);
}

}  // namespace

void apply_setting(ScenarioConfig& cfg, std::string_view key, std::string_view value) {
  const auto k = trim(key);
  for (const Entry& e : registry()) {
    if (e.key == k) {
      e.set(cfg, value);
      return;
    }
  }
  throw ConfigError(std::string(k), "unknown key");
}

ScenarioConfig parse_config_text(std::string_view text, ScenarioConfig base) {
  std::size_t line_no = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    const auto end = text.find('\n', start);
    std::string_view line = text.substr(start, end == std::string_view::npos ? text.npos : end - start);
    ++line_no;
    if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    line = trim(line);
    if (!line.empty()) {
      const auto eq = line.find('=');
      if (eq == std::string_view::npos) {
        throw ConfigError("", "line " + std::to_string(line_no) + ": expected key = value");
      }
      apply_setting(base, line.substr(0, eq), line.substr(eq + 1));
    }
    if (end == std::string_view::npos) break;
    start = end + 1;
  }
  return base;
}

ScenarioConfig load_config(const std::string& path, ScenarioConfig base) {
  std::ifstream in(path);
  if (!in) throw ConfigError("", "cannot read config file '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_config_text(buf.str(), std::move(base));
}

std::string emit_config(const ScenarioConfig& cfg) {
  std::string out;
  for (const Entry& e : registry()) out += e.key + " = " + e.get(cfg) + "\n";
  return out;
}

std::vector<std::string> config_keys() {
  std::vector<std::string> keys;
  for (const Entry& e : registry()) keys.push_back(e.key);
  return keys;
}

std::uint64_t config_hash(const ScenarioConfig& cfg) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char ch : emit_config(cfg)) {
    h ^= ch;
    h *= 0x100000001b3ULL;
  }
  return h;
}

std::vector<std::string> ScenarioConfig::table_overrides() const {
  std::vector<std::string> out;
  auto check = [&](const char* key, double v, double lo, double hi) {
    if (v < lo || v > hi) {
      out.push_back(std::string(key) + "=" + format_double(v) + " (allowed " + format_double(lo) +
                    ".." + format_double(hi) + ")");
    }
  };
  check("node_count", static_cast<double>(initial_count()), 10, 300);
  if (mobility == MobilityModel::RandomWaypoint) check("mobility.speed_max", speed.max, 10, 100);
  check("range.min", range_min, 5, 200);
  check("range.max", range_max, 5, 200);
  check("energy.initial_min", energy_min, 10, 80);
  check("energy.initial_max", energy_max, 10, 80);
  for (const NodeSpec& s : layout) {
    if (s.range) check("nodes.layout", *s.range, 5, 200);
    if (s.energy) check("nodes.layout", *s.energy, 10, 80);
  }
  return out;
}

void ScenarioConfig::validate() const {
  require(area.width > 0.0 && area.height > 0.0, "area.width", "area must be positive");
  require(initial_count() >= 1, "node_count", "need at least one node");
  require(dt > 0.0, "sim.dt", "must be > 0");
  require(sim_time >= 0.0, "sim.time", "must be >= 0");
  if (mobility == MobilityModel::RandomWaypoint) {
    require(speed.min > 0.0, "mobility.speed_min", "must be > 0 for random waypoint");
    require(speed.max >= speed.min, "mobility.speed_max", "must be >= mobility.speed_min");
  }
  require(pause >= 0.0, "mobility.pause", "must be >= 0");
  require(range_min > 0.0, "range.min", "must be > 0");
  require(range_max >= range_min, "range.max", "must be >= range.min");
  require(energy_min > 0.0, "energy.initial_min", "must be > 0");
  require(energy_max >= energy_min, "energy.initial_max", "must be >= energy.initial_min");
  require(tx >= 0.0, "node.tx", "must be >= 0");
  for (const NodeSpec& s : layout) {
    if (s.position) require(area.contains(*s.position), "nodes.layout", "position outside the area");
    if (s.range) require(*s.range > 0.0, "nodes.layout", "range must be > 0");
    if (s.energy) require(*s.energy > 0.0, "nodes.layout", "energy must be > 0");
  }
  for (const Arrival& a : arrivals) {
    require(a.tick >= 1, "arrivals", "arrival ticks start at 1");
    if (a.node.position) require(area.contains(*a.node.position), "arrivals", "position outside the area");
    if (a.node.range) require(*a.node.range > 0.0, "arrivals", "range must be > 0");
    if (a.node.energy) require(*a.node.energy > 0.0, "arrivals", "energy must be > 0");
  }

  auto module = [](const char* key, auto&& fn) {
    try {
      fn();
    } catch (const std::invalid_argument& e) {
      throw ConfigError(key, e.what());
    }
  };
  module("weights", [&] { paiwca.weights.validate(); });
  module("chprob", [&] { paiwca.chprob.validate(); });
  module("paiwca", [&] { paiwca.validate(); });
  module("wca", [&] { wca.validate(); });
  module("energy", [&] { energy.validate(); });
  module("traffic", [&] { flow.validate(); });

  if (paiwca.chprob.normalize_range) {
    double widest = range_max;
    for (const NodeSpec& s : layout) widest = std::max(widest, s.range.value_or(0.0));
    for (const Arrival& a : arrivals) widest = std::max(widest, a.node.range.value_or(0.0));
    require(widest <= paiwca.chprob.tr_max, "chprob.tr_max",
            "must be >= the largest transmission range (" + format_double(widest) + ")");
  }

  if (!allow_out_of_range) {
    const auto overrides = table_overrides();
    if (!overrides.empty()) {
      const auto& first = overrides.front();
      throw ConfigError(first.substr(0, first.find('=')),
                        "out of range: " + first + "; pass the unsafe flag to allow it");
    }
  }
}

}  // namespace manet
