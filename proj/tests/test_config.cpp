#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>

#include "doctest.h"
#include "manet/config.hpp"
#include "manet/csv.hpp"
#include "manet/engine.hpp"
#include "manet/rng.hpp"

using namespace manet;

TEST_CASE("empty config is the reference table") {
  const auto c = parse_config_text("");
  CHECK(c == ScenarioConfig{});
  CHECK(c.node_count == 50);
  CHECK(c.area.width == 500);
  CHECK(c.area.height == 500);
  CHECK(c.sim_time == 500);
  CHECK(c.algorithm == Algorithm::Paiwca);
  CHECK_NOTHROW(c.validate());
  CHECK(c.table_overrides().empty());
}

TEST_CASE("out of range node count names the key and the bound") {
  auto c = parse_config_text("node_count = 400\n");
  try {
    c.validate();
    FAIL("expected a ConfigError");
  } catch (const ConfigError& e) {
    CHECK(e.key() == "node_count");
    const std::string msg = e.what();
    CHECK(msg.find("10") != std::string::npos);
    CHECK(msg.find("300") != std::string::npos);
  }
  c.allow_out_of_range = true;
  CHECK_NOTHROW(c.validate());
  REQUIRE(c.table_overrides().size() == 1);
  CHECK(c.table_overrides()[0].find("node_count") == 0);
}

TEST_CASE("unknown keys and bad values are rejected with the key") {
  CHECK_THROWS_AS(parse_config_text("nodes = 5\n"), ConfigError);
  try {
    parse_config_text("sim.time = soon\n");
    FAIL("expected a ConfigError");
  } catch (const ConfigError& e) {
    CHECK(e.key() == "sim.time");
  }
  CHECK_THROWS_AS(load_config("/nonexistent/manet.cfg"), ConfigError);
}

TEST_CASE("later settings override earlier ones") {
  auto c = parse_config_text("sim.seed = 3\nsim.algorithm = lowest_id\n");
  apply_setting(c, "sim.seed", "7");
  apply_setting(c, "sim.algorithm", "wca");
  CHECK(c.seed == 7);
  CHECK(c.algorithm == Algorithm::Wca);
}

TEST_CASE("emit and parse round trip") {
  const char* algs[] = {"paiwca", "wca", "lowest_id", "highest_degree", "mwis"};
  for (std::uint64_t seed = 1; seed <= 50; ++seed) {
    Rng rng(seed);
    ScenarioConfig c;
    apply_setting(c, "node_count", std::to_string(10 + rng.index(291)));
    apply_setting(c, "range.min", format_double(rng.uniform(5, 50)));
    apply_setting(c, "range.max", format_double(rng.uniform(60, 200)));
    apply_setting(c, "energy.initial_min", format_double(rng.uniform(10, 30)));
    apply_setting(c, "mobility.pause", format_double(rng.uniform(0, 500)));
    apply_setting(c, "weights.w3", format_double(rng.uniform01()));
    apply_setting(c, "chprob.c_prob", format_double(rng.uniform01() / 3.0));
    apply_setting(c, "sim.algorithm", algs[rng.index(5)]);
    apply_setting(c, "sim.seed", std::to_string(rng.next()));
    apply_setting(c, "traffic.rate", format_double(rng.uniform(0.1, 3)));
    if (seed % 3 == 0) apply_setting(c, "arrivals", "5@random; 9@10,20,*,40");
    if (seed % 4 == 0) apply_setting(c, "nodes.layout", "1,2,30,40; *,*,50,*; random");
    const auto text = emit_config(c);
    const auto back = parse_config_text(text);
    REQUIRE(back == c);
    REQUIRE(emit_config(back) == text);
    REQUIRE(config_hash(back) == config_hash(c));
  }
}

TEST_CASE("format_double reads back exactly") {
  Rng rng(9);
  for (int i = 0; i < 1000; ++i) {
    const double v = rng.uniform(-1e6, 1e6) * rng.uniform01();
    REQUIRE(std::stod(format_double(v)) == v);
  }
}

TEST_CASE("csv shapes") {
  const std::vector<MetricsRecord> empty;
  const std::string header = series_csv(empty);
  CHECK(header ==
        "tick,cluster_count,connectivity,dominant_set_updates,sent,delivered,dropped,throughput,"
        "mean_delay,alive_nodes\n");

  ScenarioConfig c;
  c.sim_time = 500;
  c.seed = 2;
  const auto r = run(c);
  const std::string body = series_csv(r.series);
  std::size_t lines = 0;
  for (char ch : body) lines += ch == '\n';
  // header plus the setup snapshot and one row per simulated tick
  CHECK(r.series.size() == static_cast<std::size_t>(c.ticks()) + 1);
  CHECK(lines == r.series.size() + 1);
  CHECK(series_csv(run(c).series) == body);

  const std::string path = "csv_shapes_test.csv";
  write_file(path, body);
  std::ifstream in(path, std::ios::binary);
  std::stringstream ss;
  ss << in.rdbuf();
  CHECK(ss.str() == body);
  std::remove(path.c_str());
  CHECK_THROWS(write_file("/nonexistent/dir/out.csv", body));
}
