#include "swapreach/oracle.hpp"

#include <algorithm>
#include <bit>
#include <unordered_map>

namespace swapreach {

namespace {

// Swaps legal at `state`, in ascending (u, v) order with u < v.
template <typename Fn>
void for_each_legal_move(const Instance& inst, const std::vector<ItemId>& state, Fn&& fn) {
  for (AgentId u = 0; u < inst.n; ++u) {
    for (AgentId v : inst.adj[static_cast<std::size_t>(u)]) {
      if (v <= u) continue;
      if (inst.accepts(u, state[static_cast<std::size_t>(v)]) &&
          inst.accepts(v, state[static_cast<std::size_t>(u)]))
        fn(u, v);
    }
  }
}

}  // namespace

OracleResult bfs_reachable(const Instance& inst, std::uint64_t node_budget) {
  OracleResult res;
  const StateKey start = inst.source.items();
  const StateKey goal = inst.target.items();
  if (start == goal) {
    res.status = SearchStatus::Reachable;
    res.distance = 0;
    res.explored = 1;
    return res;
  }
  if (node_budget == 0) {
    res.status = SearchStatus::Exhausted;
    return res;
  }

  std::vector<StateKey> states;
  std::vector<std::int64_t> parent;
  std::vector<SwapMove> via;
  std::unordered_map<StateKey, std::int64_t, StateHash> index;

  states.push_back(start);
  parent.push_back(-1);
  via.push_back({});
  index.emplace(start, 0);

  std::size_t head = 0;
  bool exhausted = false;
  std::int64_t found = -1;
  while (head < states.size() && found < 0 && !exhausted) {
    const std::int64_t cur = static_cast<std::int64_t>(head);
    const StateKey state = states[head++];
    for_each_legal_move(inst, state, [&](AgentId u, AgentId v) {
      if (found >= 0 || exhausted) return;
      StateKey next = state;
      std::swap(next[static_cast<std::size_t>(u)], next[static_cast<std::size_t>(v)]);
      if (index.count(next)) return;
      if (states.size() >= node_budget) {
        exhausted = true;
        return;
      }
      const std::int64_t id = static_cast<std::int64_t>(states.size());
      index.emplace(next, id);
      states.push_back(std::move(next));
      parent.push_back(cur);
      via.push_back({u, v});
      if (states.back() == goal) found = id;
    });
  }

  res.explored = states.size();
  if (found >= 0) {
    res.status = SearchStatus::Reachable;
    std::vector<SwapMove> path;
    for (std::int64_t at = found; parent[static_cast<std::size_t>(at)] != -1;
         at = parent[static_cast<std::size_t>(at)])
      path.push_back(via[static_cast<std::size_t>(at)]);
    std::reverse(path.begin(), path.end());
    res.distance = static_cast<int>(path.size());
    res.shortest = std::move(path);
  } else if (exhausted) {
    res.status = SearchStatus::Exhausted;
  } else {
    res.status = SearchStatus::Unreachable;
  }
  return res;
}

ComponentResult reachable_component(const Instance& inst, const Assignment& from,
                                    std::uint64_t node_budget) {
  ComponentResult res;
  std::vector<StateKey> queue;
  queue.push_back(from.items());
  res.states.insert(queue.back());
  std::size_t head = 0;
  while (head < queue.size()) {
    const StateKey state = queue[head++];
    bool over = false;
    for_each_legal_move(inst, state, [&](AgentId u, AgentId v) {
      if (over) return;
      StateKey next = state;
      std::swap(next[static_cast<std::size_t>(u)], next[static_cast<std::size_t>(v)]);
      if (res.states.count(next)) return;
      if (res.states.size() >= node_budget) {
        over = true;
        return;
      }
      res.states.insert(next);
      queue.push_back(std::move(next));
    });
    if (over) {
      res.complete = false;
      break;
    }
  }
  return res;
}

void for_each_assignment(const Instance& inst, const std::function<bool(const Assignment&)>& fn) {
  std::vector<ItemId> held(static_cast<std::size_t>(inst.n), -1);
  std::vector<char> taken(static_cast<std::size_t>(inst.n), 0);
  bool stop = false;
  auto rec = [&](auto&& self, AgentId i) -> void {
    if (stop) return;
    if (i == inst.n) {
      if (!fn(Assignment::from_items(held))) stop = true;
      return;
    }
    for (ItemId j : inst.agent_items[static_cast<std::size_t>(i)]) {
      if (taken[static_cast<std::size_t>(j)]) continue;
      taken[static_cast<std::size_t>(j)] = 1;
      held[static_cast<std::size_t>(i)] = j;
      self(self, i + 1);
      taken[static_cast<std::size_t>(j)] = 0;
      if (stop) return;
    }
  };
  rec(rec, 0);
}

std::vector<Assignment> enumerate_assignments(const Instance& inst, std::uint64_t limit) {
  std::vector<Assignment> out;
  bool over = false;
  for_each_assignment(inst, [&](const Assignment& a) {
    if (static_cast<std::uint64_t>(out.size()) == limit) {
      over = true;
      return false;
    }
    out.push_back(a);
    return true;
  });
  if (over) fail(Errc::LimitExceeded, "more than " + std::to_string(limit) + " assignments");
  return out;
}

std::optional<StableSet> brute_min_stable(const Instance& inst) {
  if (inst.n > 20) fail(Errc::TooLarge, "subset enumeration beyond 20 items");
  if (inst.n <= 1) return std::nullopt;
  const int n = inst.n;
  std::vector<std::uint32_t> agent_mask(static_cast<std::size_t>(n), 0);
  for (ItemId j = 0; j < n; ++j)
    for (AgentId i : inst.item_agents[static_cast<std::size_t>(j)])
      agent_mask[static_cast<std::size_t>(j)] |= (1u << i);

  std::optional<std::vector<ItemId>> best;
  const std::uint32_t full = (1u << n) - 1;
  for (std::uint32_t mask = 1; mask < full; ++mask) {
    std::uint32_t agents = 0;
    for (int j = 0; j < n; ++j)
      if (mask & (1u << j)) agents |= agent_mask[static_cast<std::size_t>(j)];
    if (std::popcount(mask) != std::popcount(agents)) continue;
    std::vector<ItemId> items;
    for (int j = 0; j < n; ++j)
      if (mask & (1u << j)) items.push_back(j);
    if (!best || items.size() < best->size() || (items.size() == best->size() && items < *best))
      best = std::move(items);
  }
  if (!best) return std::nullopt;
  StableSet s;
  s.items = std::move(*best);
  std::vector<char> seen(static_cast<std::size_t>(n), 0);
  for (ItemId j : s.items)
    for (AgentId i : inst.item_agents[static_cast<std::size_t>(j)])
      if (!seen[static_cast<std::size_t>(i)]) {
        seen[static_cast<std::size_t>(i)] = 1;
        s.agents.push_back(i);
      }
  std::sort(s.agents.begin(), s.agents.end());
  return s;
}

}  // namespace swapreach
