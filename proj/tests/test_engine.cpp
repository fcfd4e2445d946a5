#include <string>
#include <vector>

#include "doctest.h"
#include "helpers.hpp"
#include "manet/config.hpp"
#include "manet/csv.hpp"
#include "manet/engine.hpp"
#include "manet/sweep.hpp"

using namespace manet;
using testing::make_graph;

TEST_CASE("connectivity") {
  CHECK(connectivity(testing::path_graph(6)) == 1.0);
  CHECK(connectivity(make_graph(4, {{0, 1}, {1, 2}})) == doctest::Approx(0.75));
  CHECK(connectivity(make_graph(10, {})) == doctest::Approx(0.1));
}

TEST_CASE("zero simulation time yields only the initial snapshot") {
  ScenarioConfig c;
  c.sim_time = 0;
  const auto r = run(c);
  REQUIRE(r.series.size() == 1);
  CHECK(r.series[0].tick == 0);
  CHECK(r.series[0].cluster_count > 0);
  CHECK(r.series[0].alive_nodes == 50);
}

TEST_CASE("identical configs produce identical series") {
  for (Algorithm alg : kAllAlgorithms) {
    ScenarioConfig c;
    c.algorithm = alg;
    c.sim_time = 120;
    c.seed = 11;
    const auto a = run(c);
    const auto b = run(c);
    CHECK(a.series == b.series);
    CHECK(series_csv(a.series) == series_csv(b.series));
  }
}

TEST_CASE("a static scenario never updates the dominant set") {
  for (std::uint64_t seed = 1; seed <= 5; ++seed) {
    ScenarioConfig c;
    c.mobility = MobilityModel::Static;
    c.energy_min = c.energy_max = 80;
    c.sim_time = 300;
    c.seed = seed;
    std::uint64_t changes = 0;
    const auto r = run(c, [&](const TickView& v) {
      if (v.tick > 0 && !same_heads(v.before, v.after)) ++changes;
    });
    CHECK(changes == 0);
    CHECK(r.series.back().dominant_set_updates == 0);
    CHECK(r.series.back().alive_nodes == 50);
  }
}

TEST_CASE("metric series invariants") {
  for (Algorithm alg : kAllAlgorithms) {
    ScenarioConfig c;
    c.algorithm = alg;
    c.node_count = 60;
    c.range_min = 60;
    c.range_max = 140;
    c.sim_time = 200;
    c.seed = 5;
    const auto r = run(c);
    std::uint64_t prev = 0;
    for (const auto& m : r.series) {
      REQUIRE(m.alive_nodes > 0);
      REQUIRE(m.connectivity >= 1.0 / static_cast<double>(m.alive_nodes) - 1e-12);
      REQUIRE(m.connectivity <= 1.0);
      REQUIRE(m.dominant_set_updates >= prev);
      REQUIRE(m.delivered + m.dropped <= m.sent);
      prev = m.dominant_set_updates;
    }
    const auto& s = r.summary;
    CHECK(s.sent == s.delivered + s.dropped + s.in_flight);
  }
}

TEST_CASE("scheduled arrival joins a running static network") {
  const auto c = parse_config_text(
      "mobility.model = static\n"
      "sim.time = 20\n"
      "nodes.layout = 100,100,60,50; 140,100,60,50; 180,100,60,50; 220,100,60,50; "
      "260,100,60,50; 300,100,60,50; 340,100,60,50; 100,200,60,50; 140,200,60,50; "
      "180,200,60,50; 220,200,60,50; 260,200,60,50; 300,200,60,50\n"
      "arrivals = 10@200,150,60,80\n");
  REQUIRE(c.capacity() == 14);
  bool seen = false;
  const auto r = run(c, [&](const TickView& v) {
    REQUIRE(check_structure(v.after, v.graph).empty());
    REQUIRE(check_affiliations(v.before, v.after, v.graph).empty());
    if (v.tick < 10) REQUIRE_FALSE(v.after.is_present(13));
    if (v.tick >= 10) {
      REQUIRE(v.after.is_present(13));
      seen = true;
    }
  });
  CHECK(seen);
  CHECK(r.series.back().alive_nodes == 14);
}

TEST_CASE("single value, single seed sweep equals the run") {
  ScenarioConfig c;
  c.sim_time = 60;
  c.seed = 4;
  const std::vector<double> values{40};
  const std::vector<std::uint64_t> seeds{4};
  const std::vector<Algorithm> algs{Algorithm::Paiwca};
  const auto rows = sweep(c, SweepAxis::Nodes, values, seeds, algs);
  c.node_count = 40;
  const auto r = run(c);
  REQUIRE(rows.size() == 1);
  CHECK(rows[0].runs == 1);
  CHECK(rows[0].cluster_count.mean == r.summary.mean_cluster_count);
  CHECK(rows[0].pdr.mean == r.summary.pdr);
  CHECK(rows[0].cluster_count.stddev == 0.0);
}

TEST_CASE("parallel and serial batches agree") {
  std::vector<ScenarioConfig> configs;
  for (std::uint64_t s = 1; s <= 4; ++s) {
    ScenarioConfig c;
    c.sim_time = 40;
    c.seed = s;
    configs.push_back(c);
  }
  const auto serial = run_all(configs, 1);
  const auto parallel = run_all(configs, 3);
  for (std::size_t i = 0; i < configs.size(); ++i) CHECK(serial[i].series == parallel[i].series);
}
