#include "doctest.h"

#include <sstream>
#include <vector>

#include "helpers.hpp"
#include "swapreach/gen.hpp"
#include "swapreach/oracle.hpp"
#include "swapreach/reduction.hpp"

using namespace swapreach;
using test::data_path;

namespace {

PMRData square_data() {
  PMRData d;
  d.left_n = d.right_n = 2;
  d.edges = {{0, 0}, {0, 1}, {1, 0}, {1, 1}};
  d.m1 = {{0, 0}, {1, 1}};
  d.m2 = {{0, 1}, {1, 0}};
  return d;
}

Errc code_of(PMRData d) {
  try {
    make_pmr(std::move(d));
  } catch (const Error& e) {
    return e.code();
  }
  return Errc::Internal;
}

}  // namespace

TEST_CASE("make_pmr rejects malformed inputs") {
  auto d = square_data();
  d.right_n = 3;
  CHECK(code_of(d) == Errc::SizeMismatch);

  d = square_data();
  d.left_names = {"a"};
  CHECK(code_of(d) == Errc::SizeMismatch);

  d = square_data();
  d.edges.push_back({0, 2});
  CHECK(code_of(d) == Errc::BadEdge);

  d = square_data();
  d.edges.push_back({0, 0});
  CHECK(code_of(d) == Errc::DuplicateEdge);

  d = square_data();
  d.m1 = {{0, 0}};
  CHECK(code_of(d) == Errc::NotPerfectMatching);

  d = square_data();
  d.m1 = {{0, 0}, {0, 1}};
  CHECK(code_of(d) == Errc::NotPerfectMatching);

  d = square_data();
  d.m2 = {{0, 0}, {1, 0}};
  CHECK(code_of(d) == Errc::NotPerfectMatching);

  d = square_data();
  d.edges = {{0, 0}, {1, 0}, {1, 1}};
  CHECK(code_of(d) == Errc::NotPerfectMatching);  // m2 uses the missing edge
}

TEST_CASE("parsing and canonical serialization of matching files") {
  const PMRInstance c4 = parse_pmr_file(data_path("c4.pmr"));
  CHECK(c4.n == 2);
  CHECK(c4.left_name(0) == "1");
  CHECK(c4.right_name(1) == "y");
  CHECK(c4.m1 == std::vector<ItemId>{0, 1});
  CHECK(c4.m2 == std::vector<ItemId>{1, 0});

  const std::string once = serialize_pmr(c4);
  std::istringstream in(once);
  CHECK(serialize_pmr(parse_pmr(in)) == once);
}

TEST_CASE("the reduced instance mirrors the matching question") {
  const PMRInstance c4 = parse_pmr_file(data_path("c4.pmr"));
  const Instance red = reduce_pmr(c4);
  CHECK(red.n == 2);
  CHECK(red.has_edge(0, 1));
  CHECK(red.item_agents[0] == std::vector<AgentId>{0, 1});
  CHECK(red.source.items() == c4.m1);
  CHECK(red.target.items() == c4.m2);

  const PMRReachability ms = pmr_bfs_reachable(c4);
  CHECK(ms.status == SearchStatus::Reachable);
  CHECK(ms.distance == 1);
  CHECK(ms.shortest == std::vector<Exchange>{{0, 0, 1, 1}});
  const OracleResult os = bfs_reachable(red);
  CHECK(os.status == SearchStatus::Reachable);
  CHECK(os.distance == 1);

  const PMRInstance c6 = parse_pmr_file(data_path("c6.pmr"));
  CHECK(pmr_bfs_reachable(c6).status == SearchStatus::Unreachable);
  CHECK(bfs_reachable(reduce_pmr(c6)).status == SearchStatus::Unreachable);
}

TEST_CASE("moves map forward and backward one for one") {
  const PMRInstance c4 = parse_pmr_file(data_path("c4.pmr"));
  const auto fwd = map_move_forward(c4, c4.m1, Exchange{0, 0, 1, 1});
  REQUIRE(fwd.has_value());
  CHECK(*fwd == SwapMove{0, 1});
  CHECK_FALSE(map_move_forward(c4, c4.m1, std::nullopt).has_value());

  CHECK_THROWS_AS((void)map_move_forward(c4, c4.m1, Exchange{0, 0, 0, 0}), Error);
  CHECK_THROWS_AS((void)map_move_forward(c4, c4.m1, Exchange{0, 1, 1, 0}), Error);  // not matched
  const PMRInstance c6 = parse_pmr_file(data_path("c6.pmr"));
  CHECK_THROWS_AS((void)map_move_forward(c6, c6.m1, Exchange{0, 0, 1, 1}), Error);  // no crossing

  const Instance red = reduce_pmr(c4);
  const ReconfigSequence seq{{{0, 1}}, red.source, red.target};
  CHECK(map_sequence_backward(c4, seq) == std::vector<Exchange>{{0, 0, 1, 1}});

  CHECK_THROWS_AS((void)map_sequence_backward(c4, {{}, red.source, red.target}), Error);
  CHECK_THROWS_AS((void)map_sequence_backward(c4, {{{0, 1}}, red.target, red.source}), Error);
}

TEST_CASE("identity matchings need no exchange") {
  PMRData d;
  d.left_n = d.right_n = 3;
  d.edges = {{0, 0}, {1, 1}, {2, 2}};
  d.m1 = d.m2 = {{0, 0}, {1, 1}, {2, 2}};
  const PMRInstance p = make_pmr(std::move(d));
  CHECK(pmr_bfs_reachable(p).distance == 0);
  const Instance red = reduce_pmr(p);
  CHECK(red.source == red.target);
  CHECK(map_sequence_backward(p, {{}, red.source, red.target}).empty());
}

TEST_CASE("exchange walks survive the round trip") {
  for (std::uint64_t seed = 0; seed < 8; ++seed) {
    const PMRInstance p = gen_pmr(4, 400 + seed, 0.5);
    const PMRReachability r = pmr_bfs_reachable(p);
    if (r.status != SearchStatus::Reachable) continue;
    CAPTURE(seed);

    // replay the exchange path through the forward map, then pull the
    // resulting move sequence back and compare
    const Instance red = reduce_pmr(p);
    ReconfigSequence seq;
    seq.start = red.source;
    std::vector<ItemId> m = p.m1;
    for (const Exchange& e : r.shortest) {
      const auto mv = map_move_forward(p, m, e);
      REQUIRE(mv.has_value());
      seq.moves.push_back(*mv);
      std::swap(m[static_cast<std::size_t>(e.left1)], m[static_cast<std::size_t>(e.left2)]);
    }
    CHECK(m == p.m2);
    seq.end = red.target;
    CHECK(replay_ok(red, seq));
    CHECK(map_sequence_backward(p, seq) == r.shortest);
  }
}

TEST_CASE("reduction preserves status and distance on samples") {
  int reachable = 0, unreachable = 0;
  for (std::uint64_t seed = 0; seed < 12; ++seed) {
    const PMRInstance p = gen_pmr(3 + static_cast<int>(seed % 3), 700 + seed, 0.4);
    CAPTURE(seed);
    const PMRReachability ms = pmr_bfs_reachable(p);
    const OracleResult red = bfs_reachable(reduce_pmr(p));
    REQUIRE(ms.status != SearchStatus::Exhausted);
    REQUIRE(red.status != SearchStatus::Exhausted);
    CHECK((ms.status == SearchStatus::Reachable) == (red.status == SearchStatus::Reachable));
    if (ms.status == SearchStatus::Reachable) CHECK(ms.distance == red.distance);
    (ms.status == SearchStatus::Reachable ? reachable : unreachable)++;
  }
  CHECK(reachable > 0);
}
