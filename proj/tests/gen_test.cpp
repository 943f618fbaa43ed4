#include "doctest.h"

#include <vector>

#include "helpers.hpp"
#include "swapreach/gen.hpp"
#include "swapreach/io.hpp"
#include "swapreach/normalize.hpp"
#include "swapreach/reduction.hpp"

using namespace swapreach;

TEST_CASE("generation is a pure function of its parameters") {
  GenSpec spec;
  spec.agent_count = 9;
  spec.seed = 12345;
  spec.accept_density = 0.6;
  spec.shape = Shape::Tree;
  const std::string a = serialize_instance(gen_instance(spec));
  const std::string b = serialize_instance(gen_instance(spec));
  CHECK(a == b);

  spec.seed = 54321;
  CHECK(serialize_instance(gen_instance(spec)) != a);
}

TEST_CASE("shapes produce the advertised graphs") {
  GenSpec spec;
  spec.agent_count = 7;
  spec.seed = 3;

  spec.shape = Shape::Tree;
  CHECK(gen_instance(spec).is_tree());

  spec.shape = Shape::Path;
  const Instance path = gen_instance(spec);
  CHECK(path.is_tree());
  CHECK(path.adj[0].size() == 1);
  CHECK(path.adj[3].size() == 2);

  spec.shape = Shape::Star;
  const Instance star = gen_instance(spec);
  CHECK(star.is_tree());
  CHECK(star.adj[0].size() == 6);

  spec.shape = Shape::Complete;
  const Instance complete = gen_instance(spec);
  CHECK(complete.edge_count() == 21);
  CHECK_FALSE(complete.is_tree());
}

TEST_CASE("acceptability sets come out connected") {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    GenSpec spec;
    spec.agent_count = 6 + static_cast<int>(seed % 5);
    spec.seed = 7000 + seed;
    spec.accept_density = 0.45;
    const Instance inst = gen_instance(spec);
    const NormalizeResult r = normalize(inst);
    REQUIRE(r.ok());
    // normalization finds nothing to shrink
    CHECK(serialize_instance(*r.instance) == serialize_instance(inst));
  }
}

TEST_CASE("density extremes") {
  GenSpec spec;
  spec.agent_count = 6;
  spec.seed = 11;
  spec.accept_density = 1.0;
  const Instance full = gen_instance(spec);
  for (ItemId j = 0; j < full.n; ++j) CHECK(full.item_agents[static_cast<std::size_t>(j)].size() == 6);

  spec.accept_density = 0.0;
  const Instance frozen = gen_instance(spec);
  for (ItemId j = 0; j < frozen.n; ++j) CHECK(frozen.item_agents[static_cast<std::size_t>(j)].size() == 1);
  CHECK(frozen.source == frozen.target);

  spec.accept_density = 1.5;
  CHECK_THROWS_AS((void)gen_instance(spec), Error);
}

TEST_CASE("one agent and bad counts") {
  GenSpec spec;
  spec.agent_count = 1;
  spec.seed = 2;
  const Instance inst = gen_instance(spec);
  CHECK(inst.n == 1);
  CHECK(inst.source == inst.target);

  spec.agent_count = 0;
  CHECK_THROWS_AS((void)gen_instance(spec), Error);
}

TEST_CASE("the matching-cycle shape reduces to a complete-graph instance") {
  GenSpec spec;
  spec.agent_count = 3;
  spec.seed = 9;
  spec.accept_density = 0.0;
  spec.shape = Shape::PmrCycle;
  const Instance inst = gen_instance(spec);
  CHECK(inst.n == 3);
  CHECK(inst.edge_count() == 3);
  CHECK(inst.source.items() == std::vector<ItemId>{0, 1, 2});
  CHECK(inst.target.items() == std::vector<ItemId>{1, 2, 0});
  CHECK(inst.item_name(0) == "i0");
}

TEST_CASE("matching generation is deterministic and well-formed") {
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const PMRInstance p = gen_pmr(5, 800 + seed, 0.5);
    CHECK(p.n == 5);
    // m1 and m2 were validated by construction; identity edges exist
    for (int l = 0; l < p.n; ++l) CHECK(p.has_edge(l, l));
    CHECK(serialize_pmr(p) == serialize_pmr(gen_pmr(5, 800 + seed, 0.5)));
  }
  CHECK_THROWS_AS((void)gen_pmr(0, 1, 0.5), Error);
}
