#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "swapreach/core.hpp"

namespace swapreach {

/// Finds a bijection between the restricted agents (minus excluded ones)
/// and the restricted items that respects acceptability and contains every
/// forced pair, or returns nullopt when none exists.
///
/// Deterministic: agents are scanned in ascending id order and each
/// augmenting search tries items in ascending id order, so equal inputs
/// always produce the same matching.
///
/// Throws InconsistentConstraints when the forced pairs clash with each
/// other, with acceptability, or with the restriction sets, and when the
/// free agents and free items differ in number.
std::optional<std::vector<std::pair<AgentId, ItemId>>> constrained_matching(
    const Instance& inst,
    const std::vector<AgentId>& restrict_agents,
    const std::vector<ItemId>& restrict_items,
    const std::vector<std::pair<AgentId, ItemId>>& forced = {},
    const std::vector<AgentId>& excluded_agents = {});

}  // namespace swapreach
