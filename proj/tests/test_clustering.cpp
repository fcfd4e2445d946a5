#include <algorithm>
#include <vector>

#include "doctest.h"
#include "helpers.hpp"
#include "manet/clustering.hpp"
#include "manet/energy.hpp"
#include "manet/mobility.hpp"

using namespace manet;
using testing::make_graph;
using testing::rel_err;

TEST_CASE("chprob examples") {
  const ChprobParams p;  // c_prob 0.05, p_min 1e-4, tr_max 200
  CHECK(rel_err(compute_chprob(EnergyState::full(80), 0.0, p), 0.05) < 1e-9);
  CHECK(rel_err(compute_chprob(EnergyState{40, 80}, 100.0, p), 0.05 * 0.5 + 0.5) < 1e-9);
  CHECK(rel_err(compute_chprob(EnergyState{0, 80}, 0.0, p), 1e-4) < 1e-9);
  CHECK_THROWS(compute_chprob(EnergyState::full(80), 250.0, p));
}

TEST_CASE("weight examples") {
  const WeightParams w;  // 0.2, 0.2, 0.05, 0.05, chprob term on, raw terms
  CHECK(compute_weight(NodeAttrs{}, w) == 0.0);
  const NodeAttrs a{50, 0.02, 10, 5, 0.5};
  CHECK(rel_err(compute_weight(a, w), 0.2 * 50 + 0.2 * 0.02 + 0.05 * 10 + 0.05 * 5 - 0.5) < 1e-9);
  WeightParams no_term = w;
  no_term.include_chprob_term = false;
  CHECK(rel_err(compute_weight(a, no_term), 0.2 * 50 + 0.2 * 0.02 + 0.05 * 10 + 0.05 * 5) < 1e-9);
  NodeAttrs hi = a, lo = a;
  hi.chprob = 0.9;
  lo.chprob = 0.1;
  CHECK(compute_weight(hi, w) < compute_weight(lo, w));
}

TEST_CASE("normalized weight terms divide by their scales") {
  WeightParams w;
  w.normalize_terms = true;
  w.scales = {200, 0.04, 20, 80};
  const NodeAttrs a{100, 0.02, 10, 40, 0.25};
  CHECK(rel_err(compute_weight(a, w), 0.2 * 0.5 + 0.2 * 0.5 + 0.05 * 0.5 + 0.05 * 0.5 - 0.25) < 1e-9);
}

TEST_CASE("weight is monotone in every term") {
  Rng rng(7);
  const WeightParams w;
  for (int i = 0; i < 2000; ++i) {
    NodeAttrs a{rng.uniform(0, 200), rng.uniform(0, 1), rng.uniform(0, 100), rng.uniform(0, 80),
                rng.uniform(0, 2)};
    const double base = compute_weight(a, w);
    const double bump = rng.uniform(0, 10);
    for (int field = 0; field < 5; ++field) {
      NodeAttrs b = a;
      double* f[] = {&b.tr, &b.tx, &b.mv, &b.pv, &b.chprob};
      *f[field] += bump;
      if (field < 4) {
        REQUIRE(compute_weight(b, w) >= base);
      } else {
        REQUIRE(compute_weight(b, w) <= base);
      }
    }
  }
}

TEST_CASE("cluster_setup examples") {
  {
    const auto g = make_graph(1, {});
    const std::vector<double> w{3.0};
    const auto a = cluster_setup(g, w);
    CHECK(a.is_head(0));
    CHECK(a.head_count() == 1);
  }
  {
    const auto g = testing::path_graph(3);
    const std::vector<double> w{2.0, 1.0, 3.0};
    const auto a = cluster_setup(g, w);
    CHECK(a.is_head(1));
    CHECK(a.head_of(0) == 1);
    CHECK(a.head_of(2) == 1);
  }
  {
    const auto g = testing::complete_graph(5);
    const std::vector<double> w{4.0, 2.0, 0.5, 3.0, 1.0};
    const auto a = cluster_setup(g, w);
    CHECK(a.head_count() == 1);
    CHECK(a.is_head(2));
    CHECK(a.members_of(2).size() == 4);
  }
  {
    // equal weights fall back to the lowest ID
    const auto g = testing::path_graph(3);
    const std::vector<double> w{1.0, 1.0, 1.0};
    const auto a = cluster_setup(g, w);
    CHECK(a.is_head(0));
    CHECK(a.is_head(2));
    CHECK(a.head_of(1) == 0);
  }
}

TEST_CASE("cluster_setup heads are independent and dominating") {
  for (std::uint64_t seed = 1; seed <= 200; ++seed) {
    Rng rng(seed);
    const std::size_t n = 1 + rng.index(40);
    NeighborGraph g(n);
    for (NodeId v = 0; v < n; ++v) g.add_node(v);
    const double p = rng.uniform(0, 0.5);
    for (NodeId u = 0; u < n; ++u)
      for (NodeId v = u + 1; v < n; ++v)
        if (rng.uniform01() < p) g.add_edge(u, v);
    std::vector<double> w(n);
    for (auto& x : w) x = rng.uniform(-1, 1);
    const auto a = cluster_setup(g, w);
    REQUIRE(check_structure(a, g).empty());
    for (NodeId v = 0; v < n; ++v) {
      REQUIRE(a.role(v) != Role::Unassigned);
      if (a.is_head(v)) {
        for (NodeId u : g.neighbors(v)) REQUIRE_FALSE(a.is_head(u));
      } else {
        REQUIRE(g.adjacent(v, a.head_of(v)));
        // a member's head is never heavier than the member
        REQUIRE(w[a.head_of(v)] <= w[v]);
      }
    }
  }
}

namespace {

std::vector<NodeAttrs> attrs_with_chprob(std::vector<double> chprob) {
  std::vector<NodeAttrs> out(chprob.size());
  for (std::size_t i = 0; i < chprob.size(); ++i) out[i].chprob = chprob[i];
  return out;
}

}  // namespace

TEST_CASE("admit_new_node") {
  SUBCASE("isolated newcomer forms its own cluster") {
    auto g = make_graph(3, {{0, 1}});
    ClusterAssignment a(3);
    a.make_head(0);
    a.make_member(1, 0);
    const auto attrs = attrs_with_chprob({0.4, 0.1, 0.2});
    const auto next = admit_new_node(a, g, 2, attrs);
    CHECK(next.is_head(2));
    CHECK(next.members_of(2).empty());
    CHECK(next.is_head(0));
  }
  SUBCASE("stronger newcomer takes over the cluster") {
    auto g = make_graph(3, {{0, 1}, {0, 2}, {1, 2}});
    ClusterAssignment a(3);
    a.make_head(0);
    a.make_member(1, 0);
    const auto attrs = attrs_with_chprob({0.4, 0.1, 0.6});
    const auto next = admit_new_node(a, g, 2, attrs);
    CHECK(next.is_head(2));
    CHECK(next.head_of(0) == 2);
    CHECK(next.head_of(1) == 2);
    CHECK(next.head_count() == 1);
    CHECK(next.epoch() == a.epoch() + 1);
  }
  SUBCASE("weaker newcomer joins as a member") {
    auto g = make_graph(3, {{0, 1}, {0, 2}});
    ClusterAssignment a(3);
    a.make_head(0);
    a.make_member(1, 0);
    const auto attrs = attrs_with_chprob({0.4, 0.1, 0.3});
    const auto next = admit_new_node(a, g, 2, attrs);
    CHECK(next.head_of(2) == 0);
    CHECK(same_heads(a, next));
    CHECK(next.epoch() == a.epoch());
  }
  SUBCASE("equal chprob keeps the incumbent") {
    auto g = make_graph(2, {{0, 1}});
    ClusterAssignment a(2);
    a.make_head(0);
    const auto attrs = attrs_with_chprob({0.4, 0.4});
    CHECK(admit_new_node(a, g, 1, attrs).head_of(1) == 0);
  }
  SUBCASE("a node already present is rejected") {
    auto g = make_graph(2, {{0, 1}});
    ClusterAssignment a(2);
    a.make_head(0);
    a.make_member(1, 0);
    const auto attrs = attrs_with_chprob({0.4, 0.4});
    CHECK_THROWS(admit_new_node(a, g, 1, attrs));
  }
}

TEST_CASE("maintain_on_move") {
  PaiwcaParams params;
  SUBCASE("member drifts from one head to another") {
    // 0 and 1 are heads; 2 was with 0 and now only hears 1
    const auto g = make_graph(5, {{0, 3}, {1, 4}, {1, 2}});
    ClusterAssignment a(5);
    a.make_head(0);
    a.make_head(1);
    a.make_member(3, 0);
    a.make_member(2, 0);
    a.make_member(4, 1);
    a.set_epoch(4);
    MaintenanceState timers(5);
    const auto next = maintain_on_move(a, g, std::vector<NodeAttrs>(5), timers, params);
    CHECK(next.head_of(2) == 1);
    CHECK(same_heads(a, next));
    CHECK(next.epoch() == 4);
    CHECK(check_affiliations(a, next, g).empty());
  }
  SUBCASE("a stranded member self-declares after the timeout") {
    const auto g = make_graph(3, {{0, 2}});
    ClusterAssignment a(3);
    a.make_head(0);
    a.make_member(1, 0);
    a.make_member(2, 0);
    MaintenanceState timers(3);
    const std::vector<NodeAttrs> attrs(3);
    ClusterAssignment cur = a;
    int calls = 0;
    while (!cur.is_head(1)) {
      cur = maintain_on_move(cur, g, attrs, timers, params);
      ++calls;
      REQUIRE(calls <= 20);
      if (!cur.is_head(1)) CHECK(cur.role(1) == Role::Unassigned);
    }
    CHECK(calls == params.orphan_timeout + 1);
    CHECK(cur.epoch() == a.epoch() + 1);
  }
  SUBCASE("a dead head's orphans elect among themselves") {
    auto g = NeighborGraph(3);
    g.add_node(1);
    g.add_node(2);
    g.add_edge(1, 2);
    ClusterAssignment a(3);
    a.make_head(0);
    a.make_member(1, 0);
    a.make_member(2, 0);
    std::vector<NodeAttrs> attrs(3);
    attrs[1].tr = 40;
    attrs[2].tr = 20;  // lighter
    MaintenanceState timers(3);
    const auto next = maintain_on_move(a, g, attrs, timers, params);
    CHECK_FALSE(next.is_present(0));
    CHECK(next.is_head(2));
    CHECK(next.head_of(1) == 2);
    CHECK(next.epoch() == a.epoch() + 1);
  }
  SUBCASE("nothing moved, nothing changes") {
    const auto g = testing::complete_graph(4);
    ClusterAssignment a(4);
    a.make_head(0);
    for (NodeId v = 1; v < 4; ++v) a.make_member(v, 0);
    MaintenanceState timers(4);
    auto next = maintain_on_move(a, g, std::vector<NodeAttrs>(4), timers, params);
    CHECK(same_heads(a, next));
    CHECK(next.epoch() == a.epoch());
  }
}

TEST_CASE("reelect_if_below_threshold") {
  PaiwcaParams params;
  const auto g = testing::complete_graph(3);
  ClusterAssignment a(3);
  a.make_head(0);
  a.make_member(1, 0);
  a.make_member(2, 0);
  std::vector<NodeAttrs> attrs(3);
  attrs[0].chprob = 0.3;
  attrs[1].tr = 10;  // W = 2
  attrs[2].tr = 25;  // W = 5
  REQUIRE(rel_err(compute_weight(attrs[1], params.weights), 2.0) < 1e-12);
  REQUIRE(rel_err(compute_weight(attrs[2], params.weights), 5.0) < 1e-12);

  SUBCASE("healthy heads are left alone") {
    CHECK(reelect_if_below_threshold(a, g, attrs, params) == a);
  }
  SUBCASE("lightest member takes over") {
    attrs[0].chprob = params.chprob.p_min;
    const auto next = reelect_if_below_threshold(a, g, attrs, params);
    CHECK(next.is_head(1));
    CHECK(next.head_of(0) == 1);
    CHECK(next.head_of(2) == 1);
    CHECK(next.epoch() == a.epoch() + 1);
  }
  SUBCASE("singleton head is exempt") {
    ClusterAssignment lone(3);
    lone.make_head(0);
    lone.make_head(1);
    lone.make_head(2);
    const auto empty_g = make_graph(3, {});
    attrs[0].chprob = params.chprob.p_min;
    CHECK(reelect_if_below_threshold(lone, empty_g, attrs, params) == lone);
  }
}

TEST_CASE("epoch moves exactly when the head set changes") {
  PaiwcaParams params;
  params.orphan_timeout = 2;
  for (std::uint64_t seed = 1; seed <= 30; ++seed) {
    Rng rng(seed);
    const std::size_t n = 20;
    std::vector<Position> pos(n);
    for (auto& p : pos) p = Area{}.random_point(rng);
    const std::vector<double> ranges(n, 150.0);
    std::vector<NodeAttrs> attrs(n);
    for (auto& a : attrs) a = {150, 0.02, rng.uniform(0, 10), rng.uniform(0, 40), rng.uniform(0, 1)};
    auto g = build_neighbor_graph(pos, ranges);
    auto cur = cluster_setup(g, attrs, params.weights);
    MaintenanceState timers(n);
    for (int t = 0; t < 40; ++t) {
      for (auto& p : pos) {
        p.x = std::clamp(p.x + rng.uniform(-40, 40), 0.0, 500.0);
        p.y = std::clamp(p.y + rng.uniform(-40, 40), 0.0, 500.0);
      }
      g = build_neighbor_graph(pos, ranges);
      auto next = maintain_on_move(cur, g, attrs, timers, params);
      REQUIRE(check_structure(next, g).empty());
      REQUIRE(check_affiliations(cur, next, g).empty());
      REQUIRE(next.epoch() == cur.epoch() + (same_heads(cur, next) ? 0 : 1));
      cur = next;
    }
  }
}
