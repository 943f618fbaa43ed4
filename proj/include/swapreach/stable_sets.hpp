#pragma once

#include <optional>
#include <vector>

#include "swapreach/core.hpp"

namespace swapreach {

/// A set of items together with the union of their accepting agents,
/// where both sets have the same size. Vectors are sorted ascending.
struct StableSet {
  std::vector<ItemId> items;
  std::vector<AgentId> agents;
  friend bool operator==(const StableSet&, const StableSet&) = default;
};

/// Strongly connected components of a digraph in adjacency-list form.
/// Fills comp with a component index per vertex, numbered sinks first
/// (every edge between components goes from a higher to a lower index),
/// and returns the component count.
int scc_components(const std::vector<std::vector<int>>& g, std::vector<int>& comp);

/// |N_{X + j}| - |X + j| for an item j outside X. Throws ItemInSet when
/// j already belongs to X. The value is nonnegative on instances that
/// admit an assignment and zero exactly when X + j is stable.
int f_value(const Instance& inst, ItemId j, const std::vector<ItemId>& X);

/// True iff X is nonempty and |N_X| = |X|. Throws EmptySet on empty input.
bool is_stable(const Instance& inst, const std::vector<ItemId>& X);

/// The unique smallest stable set containing j: the closure of j under
/// "an item pulls in its accepting agents; an agent pulls in the item it
/// holds". Which valid assignment seeds the holder lookup does not change
/// the result; this overload uses the instance source.
StableSet min_stable_containing(const Instance& inst, ItemId j);

/// Closure as above but under an explicit assignment, exposed so callers
/// can check seed independence directly.
StableSet closure_from(const Instance& inst, ItemId j, const Assignment& matching);

/// The smallest stable set overall, allowing the full item set. Ties on
/// size break toward the lexicographically smallest sorted item sequence.
StableSet min_tight_set(const Instance& inst);

/// Smallest stable set that is a proper subset of the items, or nullopt
/// when none exists. Same tie-break as min_tight_set.
std::optional<StableSet> min_proper_stable(const Instance& inst);

}  // namespace swapreach
