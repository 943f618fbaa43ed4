#include "doctest.h"

#include <vector>

#include "helpers.hpp"
#include "swapreach/gen.hpp"
#include "swapreach/io.hpp"
#include "swapreach/matching.hpp"
#include "swapreach/normalize.hpp"
#include "swapreach/oracle.hpp"

using namespace swapreach;
using test::path_instance;

TEST_CASE("a target holder in another component blocks the instance") {
  // path 0-1-2; item 0 accepted by agents 0 and 2 only, so its induced
  // graph has two components; source holder 0, target holder 2
  const Instance inst = path_instance({{0, 2}, {0, 1, 2}, {0, 1, 2}},
                                      {0, 1, 2}, {1, 2, 0});
  const NormalizeResult r = normalize(inst);
  CHECK_FALSE(r.ok());
  REQUIRE(r.blocked_item.has_value());
  CHECK(*r.blocked_item == 0);
  CHECK(bfs_reachable(inst).status == SearchStatus::Unreachable);
}

TEST_CASE("acceptability shrinks to the holder's component") {
  // same split set, but the target keeps item 0 at agent 0
  const Instance inst = path_instance({{0, 2}, {0, 1, 2}, {0, 1, 2}},
                                      {0, 1, 2}, {0, 2, 1});
  const NormalizeResult r = normalize(inst);
  REQUIRE(r.ok());
  CHECK(r.instance->item_agents[0] == std::vector<AgentId>{0});
  CHECK(r.instance->item_agents[1] == std::vector<AgentId>{0, 1, 2});
  CHECK(r.instance->n == inst.n);
  CHECK(r.instance->source == inst.source);
  CHECK(r.instance->target == inst.target);
}

TEST_CASE("already-connected instances pass through unchanged") {
  for (const char* name : {"e1.txt", "e2.txt", "e3.txt", "e4.txt"}) {
    CAPTURE(name);
    const Instance inst = test::load_fixture(name);
    const NormalizeResult r = normalize(inst);
    REQUIRE(r.ok());
    CHECK(serialize_instance(*r.instance) == serialize_instance(inst));
  }
}

TEST_CASE("normalization preserves the oracle verdict") {
  int blocked = 0, kept = 0;
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    SplitMix64 rng(seed * 1000 + 17);
    const int n = 4 + static_cast<int>(rng.below(3));

    InstanceData d;
    d.n = n;
    for (int v = 1; v < n; ++v)
      d.edges.emplace_back(static_cast<AgentId>(rng.below(static_cast<std::uint64_t>(v))), v);

    std::vector<ItemId> src(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) src[static_cast<std::size_t>(i)] = i;
    for (int i = n - 1; i > 0; --i)
      std::swap(src[static_cast<std::size_t>(i)],
                src[static_cast<std::size_t>(rng.below(static_cast<std::uint64_t>(i + 1)))]);

    // arbitrary sets containing the source holder; connectivity not enforced
    d.item_agents.assign(static_cast<std::size_t>(n), {});
    for (ItemId j = 0; j < n; ++j) {
      for (AgentId i = 0; i < n; ++i)
        if (src[static_cast<std::size_t>(i)] == j || rng.unit() < 0.55)
          d.item_agents[static_cast<std::size_t>(j)].push_back(i);
    }
    d.source = src;
    d.target = src;
    Instance base = make_instance(std::move(d));

    const auto tgt = constrained_matching(
        base,
        [&] { std::vector<AgentId> v; for (int i = 0; i < n; ++i) v.push_back(i); return v; }(),
        [&] { std::vector<ItemId> v; for (int j = 0; j < n; ++j) v.push_back(j); return v; }());
    REQUIRE(tgt.has_value());
    std::vector<ItemId> tv(static_cast<std::size_t>(n));
    for (const auto& [i, j] : *tgt) tv[static_cast<std::size_t>(i)] = j;
    InstanceData d2;
    d2.n = base.n;
    d2.item_agents = base.item_agents;
    for (AgentId u = 0; u < base.n; ++u)
      for (AgentId v : base.adj[static_cast<std::size_t>(u)])
        if (v > u) d2.edges.emplace_back(u, v);
    d2.source = src;
    d2.target = tv;
    const Instance inst = make_instance(std::move(d2));

    const OracleResult raw = bfs_reachable(inst);
    const NormalizeResult r = normalize(inst);
    if (!r.ok()) {
      ++blocked;
      CHECK(raw.status == SearchStatus::Unreachable);
    } else {
      ++kept;
      const OracleResult cooked = bfs_reachable(*r.instance);
      CHECK(raw.status == cooked.status);
      if (raw.status == SearchStatus::Reachable) CHECK(raw.distance == cooked.distance);
    }
  }
  // the sample should exercise both branches
  CHECK(blocked > 0);
  CHECK(kept > 0);
}
