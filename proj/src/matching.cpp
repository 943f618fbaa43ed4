#include "swapreach/matching.hpp"

#include <algorithm>

namespace swapreach {

namespace {

// Augmenting search from agent i over in-play items, trying items in
// ascending id order. item_agent holds the current partial matching.
bool augment(const Instance& inst, AgentId i, const std::vector<char>& item_in_play,
             std::vector<char>& item_seen, std::vector<AgentId>& item_agent) {
  for (ItemId j : inst.agent_items[static_cast<std::size_t>(i)]) {
    if (!item_in_play[static_cast<std::size_t>(j)] || item_seen[static_cast<std::size_t>(j)]) continue;
    item_seen[static_cast<std::size_t>(j)] = 1;
    const AgentId holder = item_agent[static_cast<std::size_t>(j)];
    if (holder == -1 || augment(inst, holder, item_in_play, item_seen, item_agent)) {
      item_agent[static_cast<std::size_t>(j)] = i;
      return true;
    }
  }
  return false;
}

}  // namespace

std::optional<std::vector<std::pair<AgentId, ItemId>>> constrained_matching(
    const Instance& inst,
    const std::vector<AgentId>& restrict_agents,
    const std::vector<ItemId>& restrict_items,
    const std::vector<std::pair<AgentId, ItemId>>& forced,
    const std::vector<AgentId>& excluded_agents) {
  const std::size_t nn = static_cast<std::size_t>(inst.n);
  std::vector<char> agent_in(nn, 0), item_in(nn, 0), agent_out(nn, 0);
  for (AgentId i : restrict_agents) {
    if (i < 0 || i >= inst.n) fail(Errc::InconsistentConstraints, "agent id out of range");
    agent_in[static_cast<std::size_t>(i)] = 1;
  }
  for (ItemId j : restrict_items) {
    if (j < 0 || j >= inst.n) fail(Errc::InconsistentConstraints, "item id out of range");
    item_in[static_cast<std::size_t>(j)] = 1;
  }
  for (AgentId i : excluded_agents) {
    if (i < 0 || i >= inst.n) fail(Errc::InconsistentConstraints, "excluded agent out of range");
    agent_out[static_cast<std::size_t>(i)] = 1;
  }

  std::vector<char> agent_forced(nn, 0), item_forced(nn, 0);
  for (auto [i, j] : forced) {
    if (i < 0 || i >= inst.n || j < 0 || j >= inst.n)
      fail(Errc::InconsistentConstraints, "forced pair out of range");
    if (!agent_in[static_cast<std::size_t>(i)] || agent_out[static_cast<std::size_t>(i)])
      fail(Errc::InconsistentConstraints, "forced agent not available");
    if (!item_in[static_cast<std::size_t>(j)])
      fail(Errc::InconsistentConstraints, "forced item not available");
    if (agent_forced[static_cast<std::size_t>(i)] || item_forced[static_cast<std::size_t>(j)])
      fail(Errc::InconsistentConstraints, "forced pair repeats an agent or item");
    if (!inst.accepts(i, j)) fail(Errc::InconsistentConstraints, "forced pair breaks acceptability");
    agent_forced[static_cast<std::size_t>(i)] = 1;
    item_forced[static_cast<std::size_t>(j)] = 1;
  }

  std::vector<AgentId> free_agents;
  for (AgentId i : restrict_agents)
    if (!agent_out[static_cast<std::size_t>(i)] && !agent_forced[static_cast<std::size_t>(i)])
      free_agents.push_back(i);
  std::sort(free_agents.begin(), free_agents.end());
  free_agents.erase(std::unique(free_agents.begin(), free_agents.end()), free_agents.end());

  std::size_t free_items = 0;
  std::vector<char> item_play(nn, 0);
  for (ItemId j = 0; j < inst.n; ++j) {
    if (item_in[static_cast<std::size_t>(j)] && !item_forced[static_cast<std::size_t>(j)]) {
      item_play[static_cast<std::size_t>(j)] = 1;
      ++free_items;
    }
  }
  if (free_agents.size() != free_items)
    fail(Errc::InconsistentConstraints, "free agents and free items differ in number");

  std::vector<AgentId> item_agent(nn, -1);
  for (AgentId i : free_agents) {
    std::vector<char> item_seen(nn, 0);
    if (!augment(inst, i, item_play, item_seen, item_agent)) return std::nullopt;
  }

  std::vector<std::pair<AgentId, ItemId>> out(forced.begin(), forced.end());
  for (ItemId j = 0; j < inst.n; ++j)
    if (item_agent[static_cast<std::size_t>(j)] != -1) out.emplace_back(item_agent[static_cast<std::size_t>(j)], j);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace swapreach
