#include "swapreach/normalize.hpp"

#include <algorithm>
#include <queue>

namespace swapreach {

NormalizeResult normalize(const Instance& inst) {
  const std::size_t nn = static_cast<std::size_t>(inst.n);
  std::vector<char> member(nn, 0), reached(nn, 0);
  InstanceData d;
  d.n = inst.n;
  d.item_agents.assign(nn, {});

  for (ItemId j = 0; j < inst.n; ++j) {
    const auto& nj = inst.item_agents[static_cast<std::size_t>(j)];
    for (AgentId i : nj) member[static_cast<std::size_t>(i)] = 1;

    std::vector<AgentId> comp;
    std::queue<AgentId> q;
    const AgentId seed = inst.source.agent_of(j);
    q.push(seed);
    reached[static_cast<std::size_t>(seed)] = 1;
    while (!q.empty()) {
      const AgentId u = q.front();
      q.pop();
      comp.push_back(u);
      for (AgentId v : inst.adj[static_cast<std::size_t>(u)]) {
        if (member[static_cast<std::size_t>(v)] && !reached[static_cast<std::size_t>(v)]) {
          reached[static_cast<std::size_t>(v)] = 1;
          q.push(v);
        }
      }
    }
    const bool blocked = !reached[static_cast<std::size_t>(inst.target.agent_of(j))];
    for (AgentId i : nj) {
      member[static_cast<std::size_t>(i)] = 0;
      reached[static_cast<std::size_t>(i)] = 0;
    }
    if (blocked) return NormalizeResult{std::nullopt, j};
    std::sort(comp.begin(), comp.end());
    d.item_agents[static_cast<std::size_t>(j)] = std::move(comp);
  }

  for (AgentId i = 0; i < inst.n; ++i)
    for (AgentId v : inst.adj[static_cast<std::size_t>(i)])
      if (v > i) d.edges.emplace_back(i, v);
  d.source = inst.source.items();
  d.target = inst.target.items();
  d.agent_names = inst.agent_names;
  d.item_names = inst.item_names;
  return NormalizeResult{make_instance(std::move(d)), std::nullopt};
}

}  // namespace swapreach
