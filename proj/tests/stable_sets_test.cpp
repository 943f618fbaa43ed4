#include "doctest.h"

#include <algorithm>
#include <optional>
#include <vector>

#include "helpers.hpp"
#include "swapreach/oracle.hpp"
#include "swapreach/stable_sets.hpp"

using namespace swapreach;
using test::load_fixture;

namespace {

// Exhaustive minimizer over subsets containing j, same tie-break.
std::optional<StableSet> brute_containing(const Instance& inst, ItemId j) {
  std::optional<StableSet> best;
  for (unsigned mask = 1; mask < (1u << inst.n); ++mask) {
    if (!(mask & (1u << j))) continue;
    std::vector<ItemId> items;
    for (int k = 0; k < inst.n; ++k)
      if (mask & (1u << k)) items.push_back(k);
    if (!is_stable(inst, items)) continue;
    std::vector<char> seen(static_cast<std::size_t>(inst.n), 0);
    StableSet s;
    s.items = items;
    for (ItemId it : items)
      for (AgentId i : inst.item_agents[static_cast<std::size_t>(it)])
        if (!seen[static_cast<std::size_t>(i)]) {
          seen[static_cast<std::size_t>(i)] = 1;
          s.agents.push_back(i);
        }
    std::sort(s.agents.begin(), s.agents.end());
    if (!best || s.items.size() < best->items.size() ||
        (s.items.size() == best->items.size() && s.items < best->items))
      best = std::move(s);
  }
  return best;
}

}  // namespace

TEST_CASE("f_value counts surplus agents") {
  const Instance e2 = load_fixture("e2.txt");
  CHECK(f_value(e2, 0, {}) == 1);
  CHECK(f_value(e2, 0, {1}) == 0);
  const Instance e1 = load_fixture("e1.txt");
  CHECK(f_value(e1, 1, {0, 2}) == 0);
  CHECK(f_value(e1, 1, {}) == 2);
  CHECK_THROWS_AS(f_value(e1, 0, {0, 2}), Error);
}

TEST_CASE("is_stable checks the size balance") {
  const Instance e2 = load_fixture("e2.txt");
  CHECK(is_stable(e2, {0, 1}));
  CHECK(is_stable(e2, {2, 3}));
  CHECK_FALSE(is_stable(e2, {0}));
  CHECK_FALSE(is_stable(e2, {0, 2}));
  const Instance e3 = load_fixture("e3.txt");
  CHECK(is_stable(e3, {0}));
  CHECK_THROWS_AS(is_stable(e3, {}), Error);
}

TEST_CASE("closure finds the smallest stable set containing an item") {
  const Instance e1 = load_fixture("e1.txt");
  CHECK(min_stable_containing(e1, 0) ==
        StableSet{{0, 1, 2}, {0, 1, 2}});
  const Instance e2 = load_fixture("e2.txt");
  CHECK(min_stable_containing(e2, 0) == StableSet{{0, 1}, {0, 1}});
  CHECK(min_stable_containing(e2, 2) == StableSet{{2, 3}, {2, 3}});
  const Instance e3 = load_fixture("e3.txt");
  CHECK(min_stable_containing(e3, 0) == StableSet{{0}, {1}});
  CHECK(min_stable_containing(e3, 1) == StableSet{{0, 1, 2}, {0, 1, 2}});
}

TEST_CASE("closure does not depend on the seeding assignment") {
  for (const char* name : {"e1.txt", "e2.txt", "e3.txt", "e4.txt"}) {
    CAPTURE(name);
    const Instance inst = load_fixture(name);
    for (ItemId j = 0; j < inst.n; ++j)
      CHECK(closure_from(inst, j, inst.source) == closure_from(inst, j, inst.target));
  }
}

TEST_CASE("closure agrees with exhaustive minimization") {
  for (const char* name : {"e1.txt", "e2.txt", "e3.txt", "e4.txt"}) {
    CAPTURE(name);
    const Instance inst = load_fixture(name);
    for (ItemId j = 0; j < inst.n; ++j) {
      const auto want = brute_containing(inst, j);
      REQUIRE(want.has_value());  // the full set is always stable
      CHECK(min_stable_containing(inst, j) == *want);
    }
  }
}

TEST_CASE("minimum tight and proper stable sets") {
  const Instance e1 = load_fixture("e1.txt");
  CHECK(min_tight_set(e1) == StableSet{{0, 1, 2}, {0, 1, 2}});
  CHECK_FALSE(min_proper_stable(e1).has_value());

  const Instance e2 = load_fixture("e2.txt");
  CHECK(min_tight_set(e2) == StableSet{{0, 1}, {0, 1}});
  REQUIRE(min_proper_stable(e2).has_value());
  CHECK(*min_proper_stable(e2) == StableSet{{0, 1}, {0, 1}});

  const Instance e3 = load_fixture("e3.txt");
  CHECK(min_tight_set(e3) == StableSet{{0}, {1}});
  CHECK(*min_proper_stable(e3) == StableSet{{0}, {1}});

  const Instance e4 = load_fixture("e4.txt");
  CHECK(min_tight_set(e4) == StableSet{{0}, {0}});
  CHECK_FALSE(min_proper_stable(e4).has_value());
}

TEST_CASE("min_proper_stable agrees with subset enumeration") {
  for (const char* name : {"e1.txt", "e2.txt", "e3.txt", "e4.txt"}) {
    CAPTURE(name);
    const Instance inst = load_fixture(name);
    const auto fast = min_proper_stable(inst);
    const auto brute = brute_min_stable(inst);
    CHECK(fast.has_value() == brute.has_value());
    if (fast && brute) CHECK(*fast == *brute);
  }
}

TEST_CASE("scc_components numbers sinks first") {
  // 0 <-> 1 feeding 2 <-> 3
  std::vector<std::vector<int>> g{{1}, {0, 2}, {3}, {2}};
  std::vector<int> comp;
  const int count = scc_components(g, comp);
  CHECK(count == 2);
  CHECK(comp == std::vector<int>{1, 1, 0, 0});

  std::vector<std::vector<int>> line{{}, {0}, {1}};
  const int count2 = scc_components(line, comp);
  CHECK(count2 == 3);
  CHECK(comp == std::vector<int>{0, 1, 2});
}
