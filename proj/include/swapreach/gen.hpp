#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "swapreach/core.hpp"
#include "swapreach/reduction.hpp"

namespace swapreach {

/// SplitMix64: the sole random source of the generators, fixed so other
/// implementations can reproduce fixtures bit for bit. Bounded draws use
/// next() % n, unit draws use the top 53 bits.
struct SplitMix64 {
  std::uint64_t state;

  explicit SplitMix64(std::uint64_t seed) : state(seed) {}

  std::uint64_t next() {
    state += 0x9E3779B97F4A7C15ull;
    std::uint64_t z = state;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
  }

  std::uint64_t below(std::uint64_t n) { return next() % n; }

  double unit() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }
};

enum class Shape { Tree, Path, Star, Complete, PmrCycle };

std::optional<Shape> parse_shape(const std::string& name);
const char* shape_name(Shape s);

struct GenSpec {
  int agent_count = 1;
  std::uint64_t seed = 0;
  double accept_density = 0.5;
  Shape shape = Shape::Tree;
};

/// Deterministic random instance. The communication graph follows the
/// shape; the source assignment is a uniform permutation; acceptability
/// grows connected around each item's source holder by one density coin
/// per reached agent; the target is sampled by a random legal-swap walk
/// with probability one half, otherwise as an independent matching.
/// The pmr-cycle shape generates a 2n-cycle matching-reconfiguration
/// input plus density extra edges and reduces it.
Instance gen_instance(const GenSpec& spec);

/// Deterministic random PMR input: identity first matching, density
/// extra edges, second matching by exchange walk or fresh matching.
PMRInstance gen_pmr(int n, std::uint64_t seed, double density);

}  // namespace swapreach
