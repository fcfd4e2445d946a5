#include "doctest.h"
#include "helpers.hpp"
#include "manet/energy.hpp"
#include "manet/rng.hpp"

using namespace manet;

TEST_CASE("zero drain leaves the battery untouched") {
  EnergyModel m{0, 0, 0, 0, 0};
  const auto s = consume_step(EnergyState::full(50), Role::ClusterHead, m, 1.0, 0, 0);
  CHECK(s.residual == 50.0);
}

TEST_CASE("a head drains faster than a member") {
  EnergyModel m;
  const auto head = consume_step(EnergyState::full(50), Role::ClusterHead, m, 1.0, 3, 3);
  const auto member = consume_step(EnergyState::full(50), Role::Member, m, 1.0, 3, 3);
  CHECK(head.residual < member.residual);
}

TEST_CASE("drain equation and consumed power") {
  EnergyModel m{0.0, 0.1, 0.5, 0.1, 0.0};
  const auto s = consume_step(EnergyState{10, 10}, Role::ClusterHead, m, 4.0, 2, 0);
  const double want = 10.0 - 0.5 * 4.0 - 0.1 * 2.0;
  CHECK(testing::rel_err(s.residual, want) < 1e-12);
  CHECK(testing::rel_err(consumed_power(s), 10.0 - want) < 1e-12);
  CHECK(consumed_power(EnergyState::full(80)) == 0.0);
  CHECK(consumed_power(EnergyState{30, 80}) == 50.0);
}

TEST_CASE("consume_step clamps at zero and rejects a non-positive step") {
  EnergyModel m;
  const auto s = consume_step(EnergyState{0.05, 10}, Role::ClusterHead, m, 10.0, 0, 0);
  CHECK(s.residual == 0.0);
  CHECK(s.depleted());
  CHECK_THROWS(consume_step(EnergyState{1, 1}, Role::Member, m, 0.0, 0, 0));
}

TEST_CASE("model ordering is validated") {
  EnergyModel m;
  CHECK_NOTHROW(m.validate());
  m.drain_ch = m.drain_member;
  CHECK_THROWS(m.validate());
}

TEST_CASE("residual stays in range, never rises, and accounts for every joule") {
  const Role roles[] = {Role::Unassigned, Role::Member, Role::ClusterHead};
  for (std::uint64_t seed = 1; seed <= 50; ++seed) {
    Rng rng(seed);
    EnergyModel m;
    EnergyState s = EnergyState::full(rng.uniform(10, 80));
    double spent = 0.0;
    for (int t = 0; t < 400; ++t) {
      const Role role = roles[rng.index(3)];
      const std::size_t tx = rng.index(5), rx = rng.index(5);
      const auto next = consume_step(s, role, m, 1.0, tx, rx);
      REQUIRE(next.residual <= s.residual);
      REQUIRE(next.residual >= 0.0);
      REQUIRE(next.residual <= next.max);
      const double demand = m.drain(role) + m.cost_tx * tx + m.cost_rx * rx;
      spent += std::min(demand, s.residual);
      s = next;
    }
    CHECK(consumed_power(s) == doctest::Approx(spent).epsilon(1e-9));
  }
}
