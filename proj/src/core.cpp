#include "swapreach/core.hpp"

#include <algorithm>
#include <queue>

namespace swapreach {

const char* errc_name(Errc c) {
  switch (c) {
    case Errc::ParseError: return "ParseError";
    case Errc::SizeMismatch: return "SizeMismatch";
    case Errc::NotBijection: return "NotBijection";
    case Errc::UnacceptableItem: return "UnacceptableItem";
    case Errc::BadEdge: return "BadEdge";
    case Errc::DuplicateEdge: return "DuplicateEdge";
    case Errc::IllegalSwap: return "IllegalSwap";
    case Errc::InconsistentConstraints: return "InconsistentConstraints";
    case Errc::ItemInSet: return "ItemInSet";
    case Errc::EmptySet: return "EmptySet";
    case Errc::NotATree: return "NotATree";
    case Errc::NotStable: return "NotStable";
    case Errc::NotConnectedRegion: return "NotConnectedRegion";
    case Errc::CapExceeded: return "CapExceeded";
    case Errc::NotYesInstance: return "NotYesInstance";
    case Errc::NotPerfectMatching: return "NotPerfectMatching";
    case Errc::InvalidExchange: return "InvalidExchange";
    case Errc::InvalidSequence: return "InvalidSequence";
    case Errc::LimitExceeded: return "LimitExceeded";
    case Errc::TooLarge: return "TooLarge";
    case Errc::GenerationFailed: return "GenerationFailed";
    case Errc::Internal: return "Internal";
  }
  return "Unknown";
}

Error::Error(Errc code, const std::string& msg)
    : std::runtime_error(std::string(errc_name(code)) + ": " + msg), code_(code) {}

void fail(Errc code, const std::string& msg) { throw Error(code, msg); }

Assignment Assignment::from_items(std::vector<ItemId> agent_to_item) {
  const int n = static_cast<int>(agent_to_item.size());
  std::vector<AgentId> inv(static_cast<std::size_t>(n), -1);
  for (AgentId i = 0; i < n; ++i) {
    const ItemId j = agent_to_item[static_cast<std::size_t>(i)];
    if (j < 0 || j >= n) fail(Errc::NotBijection, "item id out of range");
    if (inv[static_cast<std::size_t>(j)] != -1) fail(Errc::NotBijection, "item held twice");
    inv[static_cast<std::size_t>(j)] = i;
  }
  Assignment a;
  a.agent_to_item_ = std::move(agent_to_item);
  a.item_to_agent_ = std::move(inv);
  return a;
}

Assignment Assignment::exchanged(AgentId u, AgentId v) const {
  Assignment out = *this;
  std::swap(out.agent_to_item_[static_cast<std::size_t>(u)],
            out.agent_to_item_[static_cast<std::size_t>(v)]);
  out.item_to_agent_[static_cast<std::size_t>(out.agent_to_item_[static_cast<std::size_t>(u)])] = u;
  out.item_to_agent_[static_cast<std::size_t>(out.agent_to_item_[static_cast<std::size_t>(v)])] = v;
  return out;
}

bool Instance::accepts(AgentId i, ItemId j) const {
  const auto& v = item_agents[static_cast<std::size_t>(j)];
  return std::binary_search(v.begin(), v.end(), i);
}

bool Instance::has_edge(AgentId u, AgentId v) const {
  const auto& a = adj[static_cast<std::size_t>(u)];
  return std::binary_search(a.begin(), a.end(), v);
}

std::size_t Instance::edge_count() const {
  std::size_t deg = 0;
  for (const auto& a : adj) deg += a.size();
  return deg / 2;
}

bool Instance::is_tree() const {
  if (n == 0) return true;
  if (edge_count() != static_cast<std::size_t>(n) - 1) return false;
  std::vector<char> seen(static_cast<std::size_t>(n), 0);
  std::queue<AgentId> q;
  q.push(0);
  seen[0] = 1;
  int cnt = 1;
  while (!q.empty()) {
    const AgentId u = q.front();
    q.pop();
    for (AgentId v : adj[static_cast<std::size_t>(u)]) {
      if (!seen[static_cast<std::size_t>(v)]) {
        seen[static_cast<std::size_t>(v)] = 1;
        ++cnt;
        q.push(v);
      }
    }
  }
  return cnt == n;
}

Instance make_instance(InstanceData data) {
  const int n = data.n;
  if (n < 0) fail(Errc::SizeMismatch, "negative size");
  if (static_cast<int>(data.item_agents.size()) != n)
    fail(Errc::SizeMismatch, "item count differs from agent count");
  if (static_cast<int>(data.source.size()) != n || static_cast<int>(data.target.size()) != n)
    fail(Errc::SizeMismatch, "assignment length differs from agent count");

  Instance inst;
  inst.n = n;
  inst.item_agents.assign(static_cast<std::size_t>(n), {});
  for (ItemId j = 0; j < n; ++j) {
    auto v = data.item_agents[static_cast<std::size_t>(j)];
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
    for (AgentId i : v)
      if (i < 0 || i >= n) fail(Errc::SizeMismatch, "acceptability references unknown agent");
    inst.item_agents[static_cast<std::size_t>(j)] = std::move(v);
  }

  inst.adj.assign(static_cast<std::size_t>(n), {});
  for (auto [u, v] : data.edges) {
    if (u < 0 || u >= n || v < 0 || v >= n) fail(Errc::BadEdge, "edge references unknown agent");
    if (u == v) fail(Errc::BadEdge, "self-loop");
    inst.adj[static_cast<std::size_t>(u)].push_back(v);
    inst.adj[static_cast<std::size_t>(v)].push_back(u);
  }
  for (AgentId u = 0; u < n; ++u) {
    auto& a = inst.adj[static_cast<std::size_t>(u)];
    std::sort(a.begin(), a.end());
    if (std::adjacent_find(a.begin(), a.end()) != a.end())
      fail(Errc::DuplicateEdge, "edge listed twice");
  }

  inst.source = Assignment::from_items(std::move(data.source));
  inst.target = Assignment::from_items(std::move(data.target));

  inst.agent_items.assign(static_cast<std::size_t>(n), {});
  for (ItemId j = 0; j < n; ++j)
    for (AgentId i : inst.item_agents[static_cast<std::size_t>(j)])
      inst.agent_items[static_cast<std::size_t>(i)].push_back(j);

  for (AgentId i = 0; i < n; ++i) {
    if (!inst.accepts(i, inst.source.item_of(i)))
      fail(Errc::UnacceptableItem, "source assigns an unacceptable item to agent " + std::to_string(i));
    if (!inst.accepts(i, inst.target.item_of(i)))
      fail(Errc::UnacceptableItem, "target assigns an unacceptable item to agent " + std::to_string(i));
  }

  if (data.agent_names.empty()) {
    for (AgentId i = 0; i < n; ++i) data.agent_names.push_back(std::to_string(i));
  }
  if (data.item_names.empty()) {
    for (ItemId j = 0; j < n; ++j) data.item_names.push_back("i" + std::to_string(j));
  }
  if (static_cast<int>(data.agent_names.size()) != n || static_cast<int>(data.item_names.size()) != n)
    fail(Errc::SizeMismatch, "name table length mismatch");
  inst.agent_names = std::move(data.agent_names);
  inst.item_names = std::move(data.item_names);
  return inst;
}

bool legal_swap(const Instance& inst, const Assignment& c, SwapMove m) {
  const AgentId u = m.first, v = m.second;
  if (u < 0 || v < 0 || u >= inst.n || v >= inst.n || u == v) return false;
  if (!inst.has_edge(u, v)) return false;
  return inst.accepts(u, c.item_of(v)) && inst.accepts(v, c.item_of(u));
}

Assignment apply_swap(const Instance& inst, const Assignment& c, SwapMove m) {
  if (!legal_swap(inst, c, m))
    fail(Errc::IllegalSwap, "agents " + std::to_string(m.first) + " and " + std::to_string(m.second));
  return c.exchanged(m.first, m.second);
}

bool replay_ok(const Instance& inst, const ReconfigSequence& seq) {
  Assignment c = seq.start;
  for (SwapMove m : seq.moves) {
    if (!legal_swap(inst, c, m)) return false;
    c = c.exchanged(m.first, m.second);
  }
  return c == seq.end;
}

namespace {

std::vector<ItemId> restrict_items_to_local(const std::vector<ItemId>& parent_items_per_agent,
                                            const std::vector<ItemId>& items,
                                            const char* which) {
  std::vector<ItemId> local;
  local.reserve(parent_items_per_agent.size());
  for (ItemId pj : parent_items_per_agent) {
    auto it = std::lower_bound(items.begin(), items.end(), pj);
    if (it == items.end() || *it != pj)
      fail(Errc::Internal, std::string(which) + " assignment leaves the restricted item set");
    local.push_back(static_cast<ItemId>(it - items.begin()));
  }
  return local;
}

}  // namespace

SubInstance restrict_instance(const Instance& base,
                              std::vector<AgentId> agents,
                              std::vector<ItemId> items,
                              const std::vector<ItemId>& source_parent_items,
                              const std::vector<ItemId>& target_parent_items) {
  std::sort(agents.begin(), agents.end());
  std::sort(items.begin(), items.end());
  if (agents.size() != items.size()) fail(Errc::SizeMismatch, "restriction is not square");
  const int n = static_cast<int>(agents.size());

  std::vector<AgentId> agent_local(static_cast<std::size_t>(base.n), -1);
  for (int k = 0; k < n; ++k) agent_local[static_cast<std::size_t>(agents[static_cast<std::size_t>(k)])] = k;

  InstanceData d;
  d.n = n;
  d.item_agents.assign(static_cast<std::size_t>(n), {});
  for (int k = 0; k < n; ++k) {
    const ItemId pj = items[static_cast<std::size_t>(k)];
    for (AgentId pi : base.item_agents[static_cast<std::size_t>(pj)]) {
      const AgentId li = agent_local[static_cast<std::size_t>(pi)];
      if (li != -1) d.item_agents[static_cast<std::size_t>(k)].push_back(li);
    }
  }
  for (int k = 0; k < n; ++k) {
    const AgentId pu = agents[static_cast<std::size_t>(k)];
    for (AgentId pv : base.adj[static_cast<std::size_t>(pu)]) {
      const AgentId lv = agent_local[static_cast<std::size_t>(pv)];
      if (lv != -1 && lv > k) d.edges.emplace_back(k, lv);
    }
  }
  d.source = restrict_items_to_local(source_parent_items, items, "source");
  d.target = restrict_items_to_local(target_parent_items, items, "target");
  for (AgentId pi : agents) d.agent_names.push_back(base.agent_name(pi));
  for (ItemId pj : items) d.item_names.push_back(base.item_name(pj));

  SubInstance out;
  out.inst = make_instance(std::move(d));
  out.agents = std::move(agents);
  out.items = std::move(items);
  return out;
}

SubInstance restrict_instance(const Instance& base,
                              std::vector<AgentId> agents,
                              std::vector<ItemId> items,
                              const Assignment& a,
                              const Assignment& b) {
  std::sort(agents.begin(), agents.end());
  std::sort(items.begin(), items.end());
  std::vector<ItemId> sa, sb;
  sa.reserve(agents.size());
  sb.reserve(agents.size());
  for (AgentId pi : agents) {
    sa.push_back(a.item_of(pi));
    sb.push_back(b.item_of(pi));
  }
  return restrict_instance(base, std::move(agents), std::move(items), sa, sb);
}

}  // namespace swapreach
