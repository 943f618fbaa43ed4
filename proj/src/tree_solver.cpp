#include "swapreach/tree_solver.hpp"

#include <algorithm>
#include <queue>

#include "swapreach/normalize.hpp"

namespace swapreach {

namespace {

bool connected_in(const Instance& inst, const std::vector<AgentId>& set) {
  if (set.empty()) return true;
  std::vector<char> member(static_cast<std::size_t>(inst.n), 0), seen(static_cast<std::size_t>(inst.n), 0);
  for (AgentId i : set) member[static_cast<std::size_t>(i)] = 1;
  std::queue<AgentId> q;
  q.push(set[0]);
  seen[static_cast<std::size_t>(set[0])] = 1;
  std::size_t cnt = 0;
  while (!q.empty()) {
    const AgentId u = q.front();
    q.pop();
    ++cnt;
    for (AgentId v : inst.adj[static_cast<std::size_t>(u)])
      if (member[static_cast<std::size_t>(v)] && !seen[static_cast<std::size_t>(v)]) {
        seen[static_cast<std::size_t>(v)] = 1;
        q.push(v);
      }
  }
  return cnt == set.size();
}

}  // namespace

SplitOutcome split_check(const Instance& inst, const StableSet& X) {
  if (!is_stable(inst, X.items)) fail(Errc::NotStable, "split set is not stable");
  if (!connected_in(inst, X.agents)) fail(Errc::NotConnectedRegion, "stable agents are disconnected");

  // Components of the graph minus the stable agents, ordered by smallest
  // agent id; scanning agents in ascending order gives that for free.
  std::vector<char> in_region(static_cast<std::size_t>(inst.n), 0);
  for (AgentId i : X.agents) in_region[static_cast<std::size_t>(i)] = 1;
  std::vector<int> comp_of(static_cast<std::size_t>(inst.n), -1);
  std::vector<std::vector<AgentId>> components;
  for (AgentId s = 0; s < inst.n; ++s) {
    if (in_region[static_cast<std::size_t>(s)] || comp_of[static_cast<std::size_t>(s)] != -1) continue;
    const int c = static_cast<int>(components.size());
    components.push_back({});
    std::queue<AgentId> q;
    q.push(s);
    comp_of[static_cast<std::size_t>(s)] = c;
    while (!q.empty()) {
      const AgentId u = q.front();
      q.pop();
      components[static_cast<std::size_t>(c)].push_back(u);
      for (AgentId v : inst.adj[static_cast<std::size_t>(u)])
        if (!in_region[static_cast<std::size_t>(v)] && comp_of[static_cast<std::size_t>(v)] == -1) {
          comp_of[static_cast<std::size_t>(v)] = c;
          q.push(v);
        }
    }
    std::sort(components.back().begin(), components.back().end());
  }

  for (int c = 0; c < static_cast<int>(components.size()); ++c) {
    std::vector<ItemId> held;
    for (AgentId i : components[static_cast<std::size_t>(c)]) held.push_back(inst.source.item_of(i));
    std::sort(held.begin(), held.end());
    for (ItemId j : held) {
      const AgentId tb = inst.target.agent_of(j);
      if (comp_of[static_cast<std::size_t>(tb)] != c) {
        CrossingCert cert;
        cert.stable_items = X.items;
        cert.stable_agents = X.agents;
        cert.component_index = c;
        cert.component_agents = components[static_cast<std::size_t>(c)];
        cert.item = j;
        return SplitOutcome{std::move(cert), {}};
      }
    }
  }
  return SplitOutcome{std::nullopt, std::move(components)};
}

std::vector<SubInstance> decompose(const Instance& inst, const StableSet& X,
                                   const std::vector<std::vector<AgentId>>& components) {
  std::vector<SubInstance> out;
  out.push_back(restrict_instance(inst, X.agents, X.items, inst.source, inst.target));
  for (const auto& comp : components) {
    std::vector<ItemId> items;
    for (AgentId i : comp) items.push_back(inst.source.item_of(i));
    out.push_back(restrict_instance(inst, comp, std::move(items), inst.source, inst.target));
  }
  return out;
}

Decision solve_tree(const Instance& raw) {
  const NormalizeResult nr = normalize(raw);
  if (!nr.ok()) {
    Decision d;
    d.yes = false;
    d.disconnected_item = nr.blocked_item;
    return d;
  }
  const Instance& root = *nr.instance;
  if (!root.is_tree()) fail(Errc::NotATree, "communication graph is not a tree");

  Decision d;
  d.yes = true;
  if (root.n == 0) return d;

  struct Node {
    SubInstance sub;  // inst plus mapping of local ids to root ids
  };
  std::vector<Node> work;
  {
    std::vector<AgentId> agents(static_cast<std::size_t>(root.n));
    std::vector<ItemId> items(static_cast<std::size_t>(root.n));
    for (int i = 0; i < root.n; ++i) agents[static_cast<std::size_t>(i)] = i;
    for (int j = 0; j < root.n; ++j) items[static_cast<std::size_t>(j)] = j;
    work.push_back({SubInstance{root, std::move(agents), std::move(items)}});
  }

  while (!work.empty()) {
    Node node = std::move(work.back());
    work.pop_back();
    const Instance& inst = node.sub.inst;
    const auto stable = min_proper_stable(inst);
    if (!stable) {
      d.leaves.push_back({node.sub.agents, node.sub.items});
      continue;
    }
    const SplitOutcome split = split_check(inst, *stable);
    if (split.crossing) {
      Decision no;
      no.yes = false;
      CrossingCert cert;
      cert.sub_agents = node.sub.agents;
      cert.sub_items = node.sub.items;
      for (ItemId j : split.crossing->stable_items)
        cert.stable_items.push_back(node.sub.items[static_cast<std::size_t>(j)]);
      for (AgentId i : split.crossing->stable_agents)
        cert.stable_agents.push_back(node.sub.agents[static_cast<std::size_t>(i)]);
      cert.component_index = split.crossing->component_index;
      for (AgentId i : split.crossing->component_agents)
        cert.component_agents.push_back(node.sub.agents[static_cast<std::size_t>(i)]);
      cert.item = node.sub.items[static_cast<std::size_t>(split.crossing->item)];
      no.crossing = std::move(cert);
      return no;
    }
    for (SubInstance& child : decompose(inst, *stable, split.components)) {
      // Compose the child's mapping with this node's to reach root ids.
      for (AgentId& i : child.agents) i = node.sub.agents[static_cast<std::size_t>(i)];
      for (ItemId& j : child.items) j = node.sub.items[static_cast<std::size_t>(j)];
      work.push_back({std::move(child)});
    }
  }
  return d;
}

bool verify_decision(const Instance& raw, const Decision& d) {
  if (d.disconnected_item) {
    if (d.yes) return false;
    const ItemId j = *d.disconnected_item;
    if (j < 0 || j >= raw.n) return false;
    // The target holder must be outside the source holder's component of
    // the graph induced on the item's accepting agents.
    std::vector<char> member(static_cast<std::size_t>(raw.n), 0), seen(static_cast<std::size_t>(raw.n), 0);
    for (AgentId i : raw.item_agents[static_cast<std::size_t>(j)]) member[static_cast<std::size_t>(i)] = 1;
    std::queue<AgentId> q;
    const AgentId seed = raw.source.agent_of(j);
    q.push(seed);
    seen[static_cast<std::size_t>(seed)] = 1;
    while (!q.empty()) {
      const AgentId u = q.front();
      q.pop();
      for (AgentId v : raw.adj[static_cast<std::size_t>(u)])
        if (member[static_cast<std::size_t>(v)] && !seen[static_cast<std::size_t>(v)]) {
          seen[static_cast<std::size_t>(v)] = 1;
          q.push(v);
        }
    }
    return !seen[static_cast<std::size_t>(raw.target.agent_of(j))];
  }

  const NormalizeResult nr = normalize(raw);
  if (!nr.ok()) return false;
  const Instance& root = *nr.instance;

  if (!d.yes) {
    if (!d.crossing) return false;
    const CrossingCert& c = *d.crossing;
    SubInstance sub;
    try {
      sub = restrict_instance(root, c.sub_agents, c.sub_items, root.source, root.target);
    } catch (const Error&) {
      return false;
    }
    std::vector<ItemId> item_local(static_cast<std::size_t>(root.n), -1);
    for (int k = 0; k < sub.inst.n; ++k) item_local[static_cast<std::size_t>(sub.items[static_cast<std::size_t>(k)])] = k;
    std::vector<AgentId> agent_local(static_cast<std::size_t>(root.n), -1);
    for (int k = 0; k < sub.inst.n; ++k) agent_local[static_cast<std::size_t>(sub.agents[static_cast<std::size_t>(k)])] = k;

    StableSet X;
    for (ItemId j : c.stable_items) {
      if (j < 0 || j >= root.n || item_local[static_cast<std::size_t>(j)] == -1) return false;
      X.items.push_back(item_local[static_cast<std::size_t>(j)]);
    }
    for (AgentId i : c.stable_agents) {
      if (i < 0 || i >= root.n || agent_local[static_cast<std::size_t>(i)] == -1) return false;
      X.agents.push_back(agent_local[static_cast<std::size_t>(i)]);
    }
    std::sort(X.items.begin(), X.items.end());
    std::sort(X.agents.begin(), X.agents.end());
    if (X.items.empty() || static_cast<int>(X.items.size()) == sub.inst.n) return false;
    SplitOutcome split;
    try {
      split = split_check(sub.inst, X);
    } catch (const Error&) {
      return false;
    }
    if (!split.crossing) return false;
    const CrossingCert& got = *split.crossing;
    if (got.component_index != c.component_index) return false;
    if (sub.items[static_cast<std::size_t>(got.item)] != c.item) return false;
    std::vector<AgentId> got_agents;
    for (AgentId i : got.component_agents) got_agents.push_back(sub.agents[static_cast<std::size_t>(i)]);
    std::vector<AgentId> want = c.component_agents;
    std::sort(want.begin(), want.end());
    return got_agents == want;
  }

  for (const LeafCert& leaf : d.leaves) {
    SubInstance sub;
    try {
      sub = restrict_instance(root, leaf.agents, leaf.items, root.source, root.target);
    } catch (const Error&) {
      return false;
    }
    if (min_proper_stable(sub.inst)) return false;
  }
  return true;
}

}  // namespace swapreach
