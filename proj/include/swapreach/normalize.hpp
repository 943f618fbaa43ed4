#pragma once

#include <optional>

#include "swapreach/core.hpp"

namespace swapreach {

/// Outcome of connectivity preprocessing. When ok(), instance holds a copy
/// of the input whose acceptability sets were shrunk so that every
/// G[N_j] is connected. Otherwise blocked_item names an item whose target
/// holder sits in a different component of G[N_j] than its source holder,
/// which settles the answer as unreachable.
struct NormalizeResult {
  std::optional<Instance> instance;
  std::optional<ItemId> blocked_item;
  bool ok() const { return instance.has_value(); }
};

/// Shrinks each N_j to the connected component of G[N_j] holding the
/// source owner of j. An item can never leave that component, so the
/// shrink preserves the reachability answer exactly; if some target owner
/// falls outside it the instance is decided on the spot.
NormalizeResult normalize(const Instance& inst);

}  // namespace swapreach
