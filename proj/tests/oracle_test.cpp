#include "doctest.h"

#include <vector>

#include "helpers.hpp"
#include "swapreach/gen.hpp"
#include "swapreach/oracle.hpp"

using namespace swapreach;
using test::load_fixture;

TEST_CASE("search answers on the fixtures") {
  const Instance e1 = load_fixture("e1.txt");
  const OracleResult r1 = bfs_reachable(e1);
  CHECK(r1.status == SearchStatus::Reachable);
  CHECK(r1.distance == 1);
  CHECK(r1.shortest == std::vector<SwapMove>{{0, 1}});
  CHECK(replay_ok(e1, {r1.shortest, e1.source, e1.target}));

  const Instance e2 = load_fixture("e2.txt");
  const OracleResult r2 = bfs_reachable(e2);
  CHECK(r2.status == SearchStatus::Reachable);
  CHECK(r2.distance == 2);
  CHECK(r2.shortest == std::vector<SwapMove>{{0, 1}, {2, 3}});
  CHECK(replay_ok(e2, {r2.shortest, e2.source, e2.target}));

  const Instance e3 = load_fixture("e3.txt");
  const OracleResult r3 = bfs_reachable(e3);
  CHECK(r3.status == SearchStatus::Unreachable);
  CHECK(r3.explored == 1);  // the source admits no legal swap at all

  const Instance e4 = load_fixture("e4.txt");
  const OracleResult r4 = bfs_reachable(e4);
  CHECK(r4.status == SearchStatus::Reachable);
  CHECK(r4.distance == 0);
  CHECK(r4.shortest.empty());
}

TEST_CASE("a tiny node budget reports Exhausted") {
  const Instance e2 = load_fixture("e2.txt");
  CHECK(bfs_reachable(e2, 1).status == SearchStatus::Exhausted);
  CHECK(bfs_reachable(e2, 0).status == SearchStatus::Exhausted);
  CHECK(bfs_reachable(e2, 100).status == SearchStatus::Reachable);
}

TEST_CASE("reachable_component collects the whole orbit") {
  const Instance e2 = load_fixture("e2.txt");
  const ComponentResult comp = reachable_component(e2, e2.source);
  CHECK(comp.complete);
  CHECK(comp.states.size() == 4);
  CHECK(comp.states.count(e2.target.items()) == 1);

  const ComponentResult cut = reachable_component(e2, e2.source, 2);
  CHECK_FALSE(cut.complete);
}

TEST_CASE("assignment enumeration is exact and ordered") {
  const Instance e2 = load_fixture("e2.txt");
  const auto all = enumerate_assignments(e2, 100);
  CHECK(all.size() == 4);
  for (std::size_t k = 1; k < all.size(); ++k) CHECK(all[k - 1].items() < all[k].items());

  const Instance e3 = load_fixture("e3.txt");
  CHECK(enumerate_assignments(e3, 100).size() == 2);
  CHECK_THROWS_AS((void)enumerate_assignments(e2, 3), Error);
}

TEST_CASE("brute_min_stable on the fixtures") {
  CHECK_FALSE(brute_min_stable(load_fixture("e1.txt")).has_value());
  const auto s2 = brute_min_stable(load_fixture("e2.txt"));
  REQUIRE(s2.has_value());
  CHECK(*s2 == StableSet{{0, 1}, {0, 1}});
  const auto s3 = brute_min_stable(load_fixture("e3.txt"));
  REQUIRE(s3.has_value());
  CHECK(*s3 == StableSet{{0}, {1}});
  CHECK_FALSE(brute_min_stable(load_fixture("e4.txt")).has_value());

  GenSpec spec;
  spec.agent_count = 21;
  spec.seed = 5;
  CHECK_THROWS_AS((void)brute_min_stable(gen_instance(spec)), Error);
}
