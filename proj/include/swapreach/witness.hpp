#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <tuple>
#include <utility>
#include <vector>

#include "swapreach/core.hpp"

namespace swapreach {

/// A stable set's items together with the agents that can ever hold them.
/// Those agents form a connected block of the tree that no item of the
/// set can leave; reconfiguration inside it is independent of the rest.
struct Region {
  std::vector<AgentId> agents;  // sorted
  std::vector<ItemId> items;    // sorted
};

/// The agents accepting anything in X, paired with X itself.
Region region_of(const Instance& inst, std::vector<ItemId> X);

/// Produces a move sequence from source to target, replay-validated
/// during construction. Throws NotYesInstance when the instance is not
/// reachable, NotATree on non-tree graphs, CapExceeded past cap moves.
ReconfigSequence build_witness(const Instance& inst, std::uint64_t cap = 1'000'000);

/// Streaming variant: sink receives each move as soon as it is known.
void build_witness_stream(const Instance& inst, std::uint64_t cap,
                          const std::function<void(SwapMove)>& sink);

/// On an instance without a proper stable subset, finds an item set X
/// whose agent hood N_X has exactly one agent more than X and misses some
/// agent, inclusion-minimal with those properties; nullopt when no such
/// set exists. Deterministic: smallest size first, then lexicographically
/// smallest item sequence.
std::optional<std::vector<ItemId>> find_case1_set(const Instance& inst);

/// Routes source to target on a normalized tree instance without proper
/// stable subsets, given such an X: reconfigure the contracted instance
/// where N_X collapses to one vertex, replay each contracted move with
/// in-region detours, and finish inside the region.
ReconfigSequence witness_case1(const Instance& inst, const std::vector<ItemId>& X,
                               std::uint64_t cap = 1'000'000);

/// Routes source to target on a normalized tree instance without proper
/// stable subsets when no case-1 set exists: peel off a leaf that already
/// agrees (possibly after routing through an intermediate assignment
/// fixing two leaves) and recurse on the rest.
ReconfigSequence witness_case2(const Instance& inst, std::uint64_t cap = 1'000'000);

/// An assignment of the region agents to the region items plus j that
/// places j at agent i, as (agent, item) pairs sorted by agent.
std::vector<std::pair<AgentId, ItemId>> region_assignment(const Instance& inst, const Region& reg,
                                                          ItemId j, AgentId i);

/// Moves between two assignments that differ only inside the region and
/// hold the same floating item there. Requires at least two region agents
/// to accept that item unless from already equals to.
ReconfigSequence region_route(const Instance& inst, const Region& reg, const Assignment& from,
                              const Assignment& to, std::uint64_t cap = 1'000'000);

/// Relocates the region's floating item under c so that at least two
/// region agents accept the item floating afterwards. Returns the moves
/// (from c to the returned assignment) and the staged item.
std::tuple<ReconfigSequence, Assignment, ItemId> normalize_component_item(
    const Instance& inst, const Region& reg, const Assignment& c, std::uint64_t cap = 1'000'000);

/// Expands one move of the contracted instance into moves of the full
/// one, starting from `current`: a move not touching the contracted
/// vertex maps to itself; a move trading with it becomes an in-region
/// detour that carries the floating item to the boundary plus the
/// boundary swap. Throws IllegalSwap when the move is not legal in the
/// contracted instance at the image of current.
ReconfigSequence lift_step(const Instance& inst, const Region& reg, SwapMove shrunk_move,
                           const Assignment& current, std::uint64_t cap = 1'000'000);

}  // namespace swapreach
