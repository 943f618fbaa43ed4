#include "swapreach/stable_sets.hpp"

#include <algorithm>
#include <queue>

namespace swapreach {

// Iterative Tarjan. Components come out in reverse topological order.
int scc_components(const std::vector<std::vector<int>>& g, std::vector<int>& comp) {
  const int n = static_cast<int>(g.size());
  std::vector<int> order(static_cast<std::size_t>(n), -1), low(static_cast<std::size_t>(n), 0);
  comp.assign(static_cast<std::size_t>(n), -1);
  std::vector<int> stck;
  std::vector<char> on(static_cast<std::size_t>(n), 0);
  struct Frame {
    int v;
    std::size_t edge;
  };
  std::vector<Frame> call;
  int next = 0;
  int comp_count = 0;
  for (int s = 0; s < n; ++s) {
    if (order[static_cast<std::size_t>(s)] != -1) continue;
    call.push_back({s, 0});
    while (!call.empty()) {
      Frame& f = call.back();
      const int v = f.v;
      if (f.edge == 0) {
        order[static_cast<std::size_t>(v)] = low[static_cast<std::size_t>(v)] = next++;
        stck.push_back(v);
        on[static_cast<std::size_t>(v)] = 1;
      }
      bool descended = false;
      while (f.edge < g[static_cast<std::size_t>(v)].size()) {
        const int w = g[static_cast<std::size_t>(v)][f.edge++];
        if (order[static_cast<std::size_t>(w)] == -1) {
          call.push_back({w, 0});
          descended = true;
          break;
        }
        if (on[static_cast<std::size_t>(w)])
          low[static_cast<std::size_t>(v)] =
              std::min(low[static_cast<std::size_t>(v)], order[static_cast<std::size_t>(w)]);
      }
      if (descended) continue;
      if (low[static_cast<std::size_t>(v)] == order[static_cast<std::size_t>(v)]) {
        while (true) {
          const int w = stck.back();
          stck.pop_back();
          on[static_cast<std::size_t>(w)] = 0;
          comp[static_cast<std::size_t>(w)] = comp_count;
          if (w == v) break;
        }
        ++comp_count;
      }
      call.pop_back();
      if (!call.empty())
        low[static_cast<std::size_t>(call.back().v)] =
            std::min(low[static_cast<std::size_t>(call.back().v)], low[static_cast<std::size_t>(v)]);
    }
  }
  return comp_count;
}

namespace {

std::vector<std::vector<int>> item_digraph(const Instance& inst, const Assignment& matching) {
  std::vector<std::vector<int>> g(static_cast<std::size_t>(inst.n));
  for (ItemId j = 0; j < inst.n; ++j) {
    auto& out = g[static_cast<std::size_t>(j)];
    for (AgentId i : inst.item_agents[static_cast<std::size_t>(j)]) out.push_back(matching.item_of(i));
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
  }
  return g;
}

StableSet finish_set(const Instance& inst, std::vector<ItemId> items) {
  std::sort(items.begin(), items.end());
  std::vector<char> seen(static_cast<std::size_t>(inst.n), 0);
  StableSet s;
  s.items = std::move(items);
  for (ItemId j : s.items)
    for (AgentId i : inst.item_agents[static_cast<std::size_t>(j)])
      if (!seen[static_cast<std::size_t>(i)]) {
        seen[static_cast<std::size_t>(i)] = 1;
        s.agents.push_back(i);
      }
  std::sort(s.agents.begin(), s.agents.end());
  return s;
}

}  // namespace

int f_value(const Instance& inst, ItemId j, const std::vector<ItemId>& X) {
  if (j < 0 || j >= inst.n) fail(Errc::ItemInSet, "item id out of range");
  std::vector<char> in_set(static_cast<std::size_t>(inst.n), 0);
  for (ItemId x : X) {
    if (x < 0 || x >= inst.n) fail(Errc::ItemInSet, "item id out of range");
    in_set[static_cast<std::size_t>(x)] = 1;
  }
  if (in_set[static_cast<std::size_t>(j)]) fail(Errc::ItemInSet, "item already in the set");
  in_set[static_cast<std::size_t>(j)] = 1;

  std::vector<char> seen(static_cast<std::size_t>(inst.n), 0);
  int agents = 0, items = 0;
  for (ItemId x = 0; x < inst.n; ++x) {
    if (!in_set[static_cast<std::size_t>(x)]) continue;
    ++items;
    for (AgentId i : inst.item_agents[static_cast<std::size_t>(x)])
      if (!seen[static_cast<std::size_t>(i)]) {
        seen[static_cast<std::size_t>(i)] = 1;
        ++agents;
      }
  }
  return agents - items;
}

bool is_stable(const Instance& inst, const std::vector<ItemId>& X) {
  if (X.empty()) fail(Errc::EmptySet, "stability is defined for nonempty sets");
  std::vector<char> in_set(static_cast<std::size_t>(inst.n), 0);
  int items = 0;
  for (ItemId x : X) {
    if (x < 0 || x >= inst.n) fail(Errc::ItemInSet, "item id out of range");
    if (!in_set[static_cast<std::size_t>(x)]) {
      in_set[static_cast<std::size_t>(x)] = 1;
      ++items;
    }
  }
  std::vector<char> seen(static_cast<std::size_t>(inst.n), 0);
  int agents = 0;
  for (ItemId x = 0; x < inst.n; ++x)
    if (in_set[static_cast<std::size_t>(x)])
      for (AgentId i : inst.item_agents[static_cast<std::size_t>(x)])
        if (!seen[static_cast<std::size_t>(i)]) {
          seen[static_cast<std::size_t>(i)] = 1;
          ++agents;
        }
  return agents == items;
}

StableSet closure_from(const Instance& inst, ItemId j, const Assignment& matching) {
  if (j < 0 || j >= inst.n) fail(Errc::ItemInSet, "item id out of range");
  std::vector<char> item_seen(static_cast<std::size_t>(inst.n), 0);
  std::vector<ItemId> items;
  std::queue<ItemId> q;
  q.push(j);
  item_seen[static_cast<std::size_t>(j)] = 1;
  while (!q.empty()) {
    const ItemId x = q.front();
    q.pop();
    items.push_back(x);
    for (AgentId i : inst.item_agents[static_cast<std::size_t>(x)]) {
      const ItemId held = matching.item_of(i);
      if (!item_seen[static_cast<std::size_t>(held)]) {
        item_seen[static_cast<std::size_t>(held)] = 1;
        q.push(held);
      }
    }
  }
  return finish_set(inst, std::move(items));
}

StableSet min_stable_containing(const Instance& inst, ItemId j) {
  return closure_from(inst, j, inst.source);
}

StableSet min_tight_set(const Instance& inst) {
  if (inst.n == 0) fail(Errc::EmptySet, "no items");
  const auto g = item_digraph(inst, inst.source);
  std::vector<int> comp;
  const int comp_count = scc_components(g, comp);

  // A component is a sink when no edge leaves it; sink components are
  // exactly the inclusion-minimal stable sets.
  std::vector<char> sink(static_cast<std::size_t>(comp_count), 1);
  for (int v = 0; v < inst.n; ++v)
    for (int w : g[static_cast<std::size_t>(v)])
      if (comp[static_cast<std::size_t>(v)] != comp[static_cast<std::size_t>(w)])
        sink[static_cast<std::size_t>(comp[static_cast<std::size_t>(v)])] = 0;

  std::vector<std::vector<ItemId>> members(static_cast<std::size_t>(comp_count));
  for (ItemId j = 0; j < inst.n; ++j) members[static_cast<std::size_t>(comp[static_cast<std::size_t>(j)])].push_back(j);

  const std::vector<ItemId>* best = nullptr;
  for (int c = 0; c < comp_count; ++c) {
    if (!sink[static_cast<std::size_t>(c)]) continue;
    const auto& cand = members[static_cast<std::size_t>(c)];
    if (best == nullptr || cand.size() < best->size() || (cand.size() == best->size() && cand < *best))
      best = &cand;
  }
  if (best == nullptr) fail(Errc::Internal, "digraph without sink component");
  return finish_set(inst, *best);
}

std::optional<StableSet> min_proper_stable(const Instance& inst) {
  if (inst.n == 0) return std::nullopt;
  StableSet t = min_tight_set(inst);
  if (static_cast<int>(t.items.size()) == inst.n) return std::nullopt;
  return t;
}

}  // namespace swapreach
