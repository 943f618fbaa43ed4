#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "swapreach/gen.hpp"

namespace swapreach {

struct BenchCase {
  GenSpec spec;
  std::vector<std::string> ops;  // any of: solve, witness, oracle
  std::uint64_t cap = 1'000'000;
  std::uint64_t budget = 10'000'000;
};

struct BenchRow {
  GenSpec spec;
  std::string op;
  double millis = 0.0;
  std::string outcome;  // answer on success, error name otherwise
};

/// Generates each case's instance (untimed) and times each requested
/// operation on it. Failures become rows marked with the error name;
/// runs cases sequentially in order.
std::vector<BenchRow> run_bench(const std::vector<BenchCase>& suite);

std::string bench_csv(const std::vector<BenchRow>& rows);
std::string bench_text(const std::vector<BenchRow>& rows);

}  // namespace swapreach
