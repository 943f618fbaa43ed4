#pragma once

#include <optional>
#include <vector>

#include "swapreach/core.hpp"
#include "swapreach/stable_sets.hpp"

namespace swapreach {

/// Yes certificate leaf: a sub-instance (given by parent ids) with no
/// proper stable subset, where every pair of assignments is reachable.
struct LeafCert {
  std::vector<AgentId> agents;
  std::vector<ItemId> items;
};

/// No certificate: inside the named sub-instance, splitting on the stable
/// set leaves item `item` held inside one component under the source but
/// demanded elsewhere by the target.
struct CrossingCert {
  std::vector<AgentId> sub_agents;
  std::vector<ItemId> sub_items;
  std::vector<ItemId> stable_items;
  std::vector<AgentId> stable_agents;
  int component_index = -1;
  std::vector<AgentId> component_agents;
  ItemId item = -1;
};

struct Decision {
  bool yes = false;
  std::vector<LeafCert> leaves;                  // when yes
  std::optional<CrossingCert> crossing;          // when no, split found a crossing item
  std::optional<ItemId> disconnected_item;       // when no, preprocessing decided it
};

/// Split outcome for one stable set: either the ordered components of the
/// graph minus the stable agents (each an independent sub-problem), or
/// the first item whose target holder leaves its component. Components
/// are ordered by smallest agent id; the reported violation is the one
/// with the smallest component index, then the smallest item id.
struct SplitOutcome {
  std::optional<CrossingCert> crossing;                 // local ids of the checked instance
  std::vector<std::vector<AgentId>> components;         // when no crossing
};

/// Validates that X is stable with a connected agent region, then checks
/// each component. Errors: NotStable, NotConnectedRegion.
SplitOutcome split_check(const Instance& inst, const StableSet& X);

/// Splits the instance into the stable sub-instance plus one sub-instance
/// per component, in that order. Assignments restrict cleanly because no
/// swap ever moves an item across the stable boundary.
std::vector<SubInstance> decompose(const Instance& inst, const StableSet& X,
                                   const std::vector<std::vector<AgentId>>& components);

/// Decides reachability on a tree instance. Runs connectivity
/// preprocessing first, throws NotATree when the graph is not a tree, and
/// otherwise recurses along stable-set splits; certificates use the ids
/// of the given instance. Empty instances are trivially yes.
Decision solve_tree(const Instance& inst);

/// Re-derives a decision's evidence against the instance: leaf
/// sub-instances must have no proper stable subset, a crossing
/// certificate must reproduce under split_check, and a disconnected item
/// must really have its target holder outside the source component.
bool verify_decision(const Instance& inst, const Decision& d);

}  // namespace swapreach
