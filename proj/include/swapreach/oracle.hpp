#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <unordered_set>
#include <vector>

#include "swapreach/core.hpp"
#include "swapreach/stable_sets.hpp"

namespace swapreach {

enum class SearchStatus { Reachable, Unreachable, Exhausted };

struct OracleResult {
  SearchStatus status = SearchStatus::Exhausted;
  int distance = -1;                // set when Reachable
  std::vector<SwapMove> shortest;   // a shortest move sequence when Reachable
  std::uint64_t explored = 0;       // assignments placed in the visited set
};

/// Assignment states keyed by their agent->item vector.
using StateKey = std::vector<ItemId>;
struct StateHash {
  std::size_t operator()(const StateKey& v) const noexcept {
    std::size_t h = 1469598103934665603ull;
    for (ItemId x : v)
      h ^= static_cast<std::size_t>(static_cast<std::uint32_t>(x)) + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
    return h;
  }
};
using StateSet = std::unordered_set<StateKey, StateHash>;

/// Breadth-first search over the assignment space from source to target.
/// Neighbor moves are generated over edges (u, v) with u < v in ascending
/// order, so the shortest sequence returned is deterministic. Stops with
/// Exhausted once the visited set would outgrow node_budget.
OracleResult bfs_reachable(const Instance& inst, std::uint64_t node_budget = 10'000'000);

/// Every assignment reachable from `from`, or incomplete=true when the
/// budget cut exploration short.
struct ComponentResult {
  StateSet states;
  bool complete = true;
};
ComponentResult reachable_component(const Instance& inst, const Assignment& from,
                                    std::uint64_t node_budget = 10'000'000);

/// Calls fn for every assignment respecting acceptability, in
/// lexicographic agent-then-item order; stops early when fn returns false.
void for_each_assignment(const Instance& inst, const std::function<bool(const Assignment&)>& fn);

/// All assignments respecting acceptability, in lexicographic order.
/// Throws LimitExceeded when there are more than limit of them.
std::vector<Assignment> enumerate_assignments(const Instance& inst, std::uint64_t limit);

/// Minimum proper stable set by exhaustive subset enumeration, with the
/// same size-then-lexicographic tie-break as min_proper_stable. Intended
/// as an independent check; throws TooLarge beyond 20 items.
std::optional<StableSet> brute_min_stable(const Instance& inst);

}  // namespace swapreach
