#include "doctest.h"

#include <string>
#include <vector>

#include "swapreach/bench.hpp"

using namespace swapreach;

namespace {

bool starts_with(const std::string& s, const std::string& prefix) {
  return s.rfind(prefix, 0) == 0;
}

}  // namespace

TEST_CASE("empty suites render as empty") {
  const auto rows = run_bench({});
  CHECK(rows.empty());
  CHECK(bench_text(rows) == "no rows\n");
  CHECK(bench_csv(rows) == "op,shape,n,density,seed,millis,outcome\n");
}

TEST_CASE("errors become outcome labels instead of aborting the suite") {
  BenchCase c;
  c.spec.agent_count = 4;
  c.spec.seed = 1;
  c.spec.shape = Shape::Complete;
  c.ops = {"solve", "frobnicate"};
  const auto rows = run_bench({c});
  REQUIRE(rows.size() == 2);
  CHECK(rows[0].outcome == "NotATree");
  CHECK(rows[1].outcome == "unknown-op");
}

TEST_CASE("a two-agent exchange cycle times all three operations") {
  BenchCase c;
  c.spec.agent_count = 2;
  c.spec.seed = 7;
  c.spec.shape = Shape::PmrCycle;
  c.ops = {"solve", "witness", "oracle"};
  const auto rows = run_bench({c});
  REQUIRE(rows.size() == 3);
  CHECK(rows[0].outcome == "yes");
  CHECK(rows[1].outcome == "ok(1)");
  CHECK(rows[2].outcome == "reachable(1)");
  for (const auto& r : rows) CHECK(r.millis >= 0.0);

  const std::string csv = bench_csv(rows);
  CHECK(starts_with(csv, "op,shape,n,density,seed,millis,outcome\n"));
  CHECK(csv.find("solve,pmr-cycle,2,") != std::string::npos);
  const std::string text = bench_text(rows);
  CHECK(text.find("ok(1)") != std::string::npos);
}
