#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace swapreach {

using AgentId = std::int32_t;
using ItemId = std::int32_t;

enum class Errc {
  ParseError,
  SizeMismatch,
  NotBijection,
  UnacceptableItem,
  BadEdge,
  DuplicateEdge,
  IllegalSwap,
  InconsistentConstraints,
  ItemInSet,
  EmptySet,
  NotATree,
  NotStable,
  NotConnectedRegion,
  CapExceeded,
  NotYesInstance,
  NotPerfectMatching,
  InvalidExchange,
  InvalidSequence,
  LimitExceeded,
  TooLarge,
  GenerationFailed,
  Internal,
};

const char* errc_name(Errc c);

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& msg);
  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

[[noreturn]] void fail(Errc code, const std::string& msg);

/// One step: two distinct agents trade their current items.
struct SwapMove {
  AgentId first = -1;
  AgentId second = -1;
  friend bool operator==(const SwapMove&, const SwapMove&) = default;
};

/// Bijection agent -> item with the inverse kept alongside.
/// Immutable once built; all mutating operations return a new value.
class Assignment {
 public:
  Assignment() = default;

  /// Builds from an agent->item vector; throws NotBijection unless every
  /// item in 0..n-1 appears exactly once.
  static Assignment from_items(std::vector<ItemId> agent_to_item);

  int size() const { return static_cast<int>(agent_to_item_.size()); }
  ItemId item_of(AgentId i) const { return agent_to_item_[static_cast<std::size_t>(i)]; }
  AgentId agent_of(ItemId j) const { return item_to_agent_[static_cast<std::size_t>(j)]; }
  const std::vector<ItemId>& items() const { return agent_to_item_; }

  /// The exchanged counterpart; callers must have checked legality.
  Assignment exchanged(AgentId u, AgentId v) const;

  friend bool operator==(const Assignment& a, const Assignment& b) {
    return a.agent_to_item_ == b.agent_to_item_;
  }

 private:
  std::vector<ItemId> agent_to_item_;
  std::vector<AgentId> item_to_agent_;
};

/// Unchecked description of an instance with dense ids; run through
/// make_instance to obtain a validated Instance.
struct InstanceData {
  int n = 0;
  std::vector<std::vector<AgentId>> item_agents;         // per item: accepting agents
  std::vector<std::pair<AgentId, AgentId>> edges;        // communication graph
  std::vector<ItemId> source;                            // agent -> item
  std::vector<ItemId> target;                            // agent -> item
  std::vector<std::string> agent_names;                  // optional, defaults to decimals
  std::vector<std::string> item_names;
};

/// A validated instance: as many items as agents, acceptability sets,
/// an undirected simple communication graph, and two assignments that
/// both respect acceptability.
struct Instance {
  int n = 0;
  std::vector<std::vector<AgentId>> item_agents;  // N_j, sorted ascending
  std::vector<std::vector<ItemId>> agent_items;   // M_i, derived, sorted ascending
  std::vector<std::vector<AgentId>> adj;          // sorted adjacency lists
  Assignment source;
  Assignment target;
  std::vector<std::string> agent_names;
  std::vector<std::string> item_names;

  bool accepts(AgentId i, ItemId j) const;
  bool has_edge(AgentId u, AgentId v) const;
  std::size_t edge_count() const;
  /// Connected with exactly n-1 edges; the empty graph counts as a tree.
  bool is_tree() const;

  const std::string& agent_name(AgentId i) const { return agent_names[static_cast<std::size_t>(i)]; }
  const std::string& item_name(ItemId j) const { return item_names[static_cast<std::size_t>(j)]; }
};

/// Checks every structural invariant and returns the finished instance.
/// Errors: SizeMismatch, NotBijection, UnacceptableItem, BadEdge, DuplicateEdge.
Instance make_instance(InstanceData data);

/// True iff the two agents are joined by an edge and each accepts the
/// other's current item.
bool legal_swap(const Instance& inst, const Assignment& c, SwapMove m);

/// Applies a swap; throws IllegalSwap unless legal_swap holds.
Assignment apply_swap(const Instance& inst, const Assignment& c, SwapMove m);

struct ReconfigSequence {
  std::vector<SwapMove> moves;
  Assignment start;
  Assignment end;
};

/// Replays moves from start checking legality at every step; true iff the
/// final assignment equals end.
bool replay_ok(const Instance& inst, const ReconfigSequence& seq);

/// An induced sub-instance together with the parent ids of its rows.
/// agents[k] / items[k] give the parent id of local agent/item k.
struct SubInstance {
  Instance inst;
  std::vector<AgentId> agents;
  std::vector<ItemId> items;
};

/// Restricts base to the given agent and item subsets. The two assignment
/// vectors give, for each local agent (in the sorted order of `agents`),
/// the parent item it holds; both must map onto `items` exactly.
SubInstance restrict_instance(const Instance& base,
                              std::vector<AgentId> agents,
                              std::vector<ItemId> items,
                              const std::vector<ItemId>& source_parent_items,
                              const std::vector<ItemId>& target_parent_items);

/// Convenience overload restricting two full assignments of base.
SubInstance restrict_instance(const Instance& base,
                              std::vector<AgentId> agents,
                              std::vector<ItemId> items,
                              const Assignment& a,
                              const Assignment& b);

}  // namespace swapreach
