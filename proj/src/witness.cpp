#include "swapreach/witness.hpp"

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <queue>
#include <set>
#include <string>
#include <utility>

#include "swapreach/matching.hpp"
#include "swapreach/normalize.hpp"
#include "swapreach/stable_sets.hpp"
#include "swapreach/tree_solver.hpp"

namespace swapreach {

namespace {

using Emit = std::function<void(SwapMove)>;

struct MoveBudget {
  std::uint64_t cap;
  std::uint64_t used = 0;

  void charge() {
    if (used >= cap) fail(Errc::CapExceeded, "witness longer than " + std::to_string(cap) + " moves");
    ++used;
  }
};

// One recursion frame's view: applies moves to its own state, then
// forwards them upward. Every emitted move is replay-checked here.
struct FrameSink {
  const Instance& inst;
  Assignment& cur;
  const Emit& emit;

  void deliver(SwapMove m) {
    if (m.first > m.second) std::swap(m.first, m.second);
    cur = apply_swap(inst, cur, m);
    emit(m);
  }
};

void route_no_stable(const Instance& inst, Assignment& cur, const Assignment& goal,
                     const Emit& emit, MoveBudget& budget);

std::vector<char> mark_of(int size, const std::vector<int>& members) {
  std::vector<char> in(static_cast<std::size_t>(size), 0);
  for (int m : members) in[static_cast<std::size_t>(m)] = 1;
  return in;
}

// Turns (agent, item) pairs covering 0..n-1 into an Assignment.
Assignment pairs_assignment(const std::vector<std::pair<AgentId, ItemId>>& pairs, int n) {
  std::vector<ItemId> items(static_cast<std::size_t>(n), -1);
  for (auto [agent, item] : pairs) items[static_cast<std::size_t>(agent)] = item;
  return Assignment::from_items(items);
}

// The one region agent holding an item outside X under c.
AgentId floating_holder(const Region& reg, const std::vector<char>& in_X, const Assignment& c) {
  AgentId holder = -1;
  for (AgentId r : reg.agents) {
    if (!in_X[static_cast<std::size_t>(c.item_of(r))]) {
      if (holder != -1) fail(Errc::Internal, "region holds two items outside its set");
      holder = r;
    }
  }
  if (holder == -1) fail(Errc::Internal, "region holds no item outside its set");
  return holder;
}

int accept_count_in(const Instance& inst, ItemId j, const std::vector<char>& in_region) {
  int count = 0;
  for (AgentId i : inst.item_agents[static_cast<std::size_t>(j)])
    if (in_region[static_cast<std::size_t>(i)]) ++count;
  return count;
}

// Routes c|A -> pairs via a sub-instance on (A, items held by A under c),
// translating child moves through sink. Charges happen inside recursion.
void route_subset(const Instance& inst, const std::vector<AgentId>& agents,
                  const std::vector<ItemId>& items, const Assignment& c,
                  const std::vector<std::pair<AgentId, ItemId>>& pairs, FrameSink& sink,
                  MoveBudget& budget) {
  std::vector<ItemId> from, to;
  from.reserve(agents.size());
  to.reserve(agents.size());
  for (std::size_t k = 0; k < agents.size(); ++k) {
    from.push_back(c.item_of(agents[k]));
    if (pairs[k].first != agents[k]) fail(Errc::Internal, "subset route pairs misaligned");
    to.push_back(pairs[k].second);
  }
  SubInstance sub = restrict_instance(inst, agents, items, from, to);
  Assignment scur = sub.inst.source;
  route_no_stable(sub.inst, scur, sub.inst.target,
                  [&sub, &sink](SwapMove m) {
                    sink.deliver({sub.agents[static_cast<std::size_t>(m.first)],
                                  sub.agents[static_cast<std::size_t>(m.second)]});
                  },
                  budget);
}

// Moves the region's floating item under c until at least two region
// agents accept it. Appends the staging moves to buf (charged), mutates
// c accordingly, returns the staged item.
ItemId stage_floating(const Instance& inst, const Region& reg, Assignment& c,
                      std::vector<SwapMove>& buf, MoveBudget& budget) {
  std::vector<char> in_region = mark_of(inst.n, reg.agents);
  std::vector<char> in_X = mark_of(inst.n, reg.items);
  AgentId q = floating_holder(reg, in_X, c);
  ItemId j0 = c.item_of(q);
  if (accept_count_in(inst, j0, in_region) >= 2) return j0;

  // Component of q when edges inside the region are cut.
  std::vector<char> seen(static_cast<std::size_t>(inst.n), 0);
  std::vector<AgentId> comp;
  std::queue<AgentId> bfs;
  seen[static_cast<std::size_t>(q)] = 1;
  bfs.push(q);
  while (!bfs.empty()) {
    AgentId u = bfs.front();
    bfs.pop();
    comp.push_back(u);
    for (AgentId v : inst.adj[static_cast<std::size_t>(u)]) {
      if (in_region[static_cast<std::size_t>(u)] && in_region[static_cast<std::size_t>(v)]) continue;
      if (!seen[static_cast<std::size_t>(v)]) {
        seen[static_cast<std::size_t>(v)] = 1;
        bfs.push(v);
      }
    }
  }
  std::sort(comp.begin(), comp.end());
  std::vector<ItemId> comp_items;
  comp_items.reserve(comp.size());
  for (AgentId u : comp) comp_items.push_back(c.item_of(u));
  std::sort(comp_items.begin(), comp_items.end());

  // The smallest tight set of the component system pins down items that
  // cannot all leave the component; one of them is accepted outside and
  // becomes the staged item.
  SubInstance qsys = restrict_instance(inst, comp, comp_items, c, c);
  StableSet tight = min_tight_set(qsys.inst);
  std::vector<ItemId> Y;
  Y.reserve(tight.items.size());
  for (ItemId j : tight.items) Y.push_back(qsys.items[static_cast<std::size_t>(j)]);
  std::sort(Y.begin(), Y.end());
  std::vector<AgentId> holders;
  holders.reserve(tight.agents.size());
  for (AgentId i : tight.agents) holders.push_back(qsys.agents[static_cast<std::size_t>(i)]);
  std::sort(holders.begin(), holders.end());

  ItemId jstar = -1;
  for (ItemId j : Y) {
    for (AgentId i : inst.item_agents[static_cast<std::size_t>(j)]) {
      if (!seen[static_cast<std::size_t>(i)]) {
        jstar = j;
        break;
      }
    }
    if (jstar != -1) break;
  }
  if (jstar == -1) fail(Errc::Internal, "tight set accepted only inside its component");

  auto pairs = constrained_matching(inst, holders, Y, {{q, jstar}});
  if (!pairs) fail(Errc::Internal, "no assignment stages the floating item");

  Emit record = [&buf](SwapMove m) { buf.push_back(m); };
  FrameSink sink{inst, c, record};
  route_subset(inst, holders, Y, c, *pairs, sink, budget);
  return jstar;
}

// Contracted instance: the region collapses to one trailing vertex that
// accepts exactly the items the region accepts (besides its own set) and
// inherits every edge leaving the region.
struct Shrunk {
  Instance inst;
  std::vector<AgentId> orig;  // local agent -> parent agent, hub slot -1
  std::vector<ItemId> items;  // local item -> parent item
  AgentId hub;
};

Shrunk build_shrunk(const Instance& inst, const Region& reg, const Assignment& cur,
                    const Assignment& goal, ItemId goal_float) {
  std::vector<char> in_region = mark_of(inst.n, reg.agents);
  std::vector<char> in_X = mark_of(inst.n, reg.items);

  Shrunk sh;
  std::vector<AgentId> agent_local(static_cast<std::size_t>(inst.n), -1);
  for (AgentId i = 0; i < inst.n; ++i) {
    if (in_region[static_cast<std::size_t>(i)]) continue;
    agent_local[static_cast<std::size_t>(i)] = static_cast<AgentId>(sh.orig.size());
    sh.orig.push_back(i);
  }
  sh.hub = static_cast<AgentId>(sh.orig.size());
  sh.orig.push_back(-1);

  std::vector<ItemId> item_local(static_cast<std::size_t>(inst.n), -1);
  for (ItemId j = 0; j < inst.n; ++j) {
    if (in_X[static_cast<std::size_t>(j)]) continue;
    item_local[static_cast<std::size_t>(j)] = static_cast<ItemId>(sh.items.size());
    sh.items.push_back(j);
  }

  InstanceData d;
  d.n = static_cast<int>(sh.orig.size());
  d.item_agents.resize(sh.items.size());
  for (std::size_t k = 0; k < sh.items.size(); ++k) {
    bool region_accepts = false;
    for (AgentId i : inst.item_agents[static_cast<std::size_t>(sh.items[k])]) {
      if (in_region[static_cast<std::size_t>(i)])
        region_accepts = true;
      else
        d.item_agents[k].push_back(agent_local[static_cast<std::size_t>(i)]);
    }
    if (region_accepts) d.item_agents[k].push_back(sh.hub);
  }

  std::set<std::pair<AgentId, AgentId>> edges;
  for (AgentId u = 0; u < inst.n; ++u) {
    for (AgentId v : inst.adj[static_cast<std::size_t>(u)]) {
      if (v <= u) continue;
      bool ru = in_region[static_cast<std::size_t>(u)],
           rv = in_region[static_cast<std::size_t>(v)];
      if (ru && rv) continue;
      AgentId lu = ru ? sh.hub : agent_local[static_cast<std::size_t>(u)];
      AgentId lv = rv ? sh.hub : agent_local[static_cast<std::size_t>(v)];
      edges.insert({std::min(lu, lv), std::max(lu, lv)});
    }
  }
  d.edges.assign(edges.begin(), edges.end());

  AgentId holder = floating_holder(reg, in_X, cur);
  d.source.resize(sh.orig.size());
  d.target.resize(sh.orig.size());
  for (std::size_t k = 0; k + 1 < sh.orig.size(); ++k) {
    d.source[k] = item_local[static_cast<std::size_t>(cur.item_of(sh.orig[k]))];
    d.target[k] = item_local[static_cast<std::size_t>(goal.item_of(sh.orig[k]))];
  }
  d.source[static_cast<std::size_t>(sh.hub)] =
      item_local[static_cast<std::size_t>(cur.item_of(holder))];
  d.target[static_cast<std::size_t>(sh.hub)] = item_local[static_cast<std::size_t>(goal_float)];

  d.agent_names.reserve(sh.orig.size());
  for (std::size_t k = 0; k + 1 < sh.orig.size(); ++k)
    d.agent_names.push_back(inst.agent_name(sh.orig[k]));
  d.agent_names.push_back("#region");
  d.item_names.reserve(sh.items.size());
  for (ItemId j : sh.items) d.item_names.push_back(inst.item_name(j));

  sh.inst = make_instance(std::move(d));
  return sh;
}

// Replays one contracted move on the full instance. A move with the hub
// first parks the floating item at the boundary agent next to i, then
// swaps across the boundary edge; that final swap inherits the charge of
// the contracted move, so only the detour charges anew.
void lift_one(const Instance& inst, const Region& reg, const std::vector<char>& in_region,
              const std::vector<char>& in_X, const Shrunk& sh, SwapMove mo, FrameSink& sink,
              MoveBudget& budget) {
  bool first_hub = mo.first == sh.hub;
  bool second_hub = mo.second == sh.hub;
  if (!first_hub && !second_hub) {
    sink.deliver({sh.orig[static_cast<std::size_t>(mo.first)],
                  sh.orig[static_cast<std::size_t>(mo.second)]});
    return;
  }
  AgentId i = sh.orig[static_cast<std::size_t>(first_hub ? mo.second : mo.first)];

  ItemId floating = sink.cur.item_of(floating_holder(reg, in_X, sink.cur));
  AgentId boundary = -1;
  for (AgentId v : inst.adj[static_cast<std::size_t>(i)]) {
    if (in_region[static_cast<std::size_t>(v)]) {
      if (boundary != -1) fail(Errc::Internal, "two region neighbours across a tree edge");
      boundary = v;
    }
  }
  if (boundary == -1) fail(Errc::Internal, "contracted edge without a boundary neighbour");

  if (sink.cur.agent_of(floating) != boundary) {
    std::vector<ItemId> pool = reg.items;
    pool.insert(std::lower_bound(pool.begin(), pool.end(), floating), floating);
    auto pairs = constrained_matching(inst, reg.agents, pool, {{boundary, floating}});
    if (!pairs) fail(Errc::Internal, "floating item cannot reach the boundary");
    route_subset(inst, reg.agents, pool, sink.cur, *pairs, sink, budget);
  }
  sink.deliver({i, boundary});
}

void case1_route(const Instance& inst, const std::vector<ItemId>& X, Assignment& cur,
                 const Assignment& goal, const Emit& emit, MoveBudget& budget) {
  Region reg = region_of(inst, X);
  std::vector<char> in_region = mark_of(inst.n, reg.agents);
  std::vector<char> in_X = mark_of(inst.n, reg.items);
  FrameSink sink{inst, cur, emit};

  // Stage the goal first: move its floating item until two region agents
  // accept it. The staging moves run goal -> staged goal, so they are
  // replayed backwards at the very end.
  std::vector<SwapMove> staged;
  Assignment goal_star = goal;
  ItemId jstar = stage_floating(inst, reg, goal_star, staged, budget);

  Shrunk sh = build_shrunk(inst, reg, cur, goal_star, jstar);
  Assignment shrunk_cur = sh.inst.source;
  route_no_stable(sh.inst, shrunk_cur, sh.inst.target,
                  [&](SwapMove m) { lift_one(inst, reg, in_region, in_X, sh, m, sink, budget); },
                  budget);

  // Outside the region cur now matches goal_star; finish inside.
  std::vector<ItemId> pool = reg.items;
  pool.insert(std::lower_bound(pool.begin(), pool.end(), jstar), jstar);
  bool differ = false;
  for (AgentId r : reg.agents)
    if (cur.item_of(r) != goal_star.item_of(r)) {
      differ = true;
      break;
    }
  if (differ) {
    std::vector<std::pair<AgentId, ItemId>> pairs;
    pairs.reserve(reg.agents.size());
    for (AgentId r : reg.agents) pairs.emplace_back(r, goal_star.item_of(r));
    route_subset(inst, reg.agents, pool, cur, pairs, sink, budget);
  }

  for (auto it = staged.rbegin(); it != staged.rend(); ++it) sink.deliver(*it);
  if (!(cur == goal)) fail(Errc::Internal, "case-1 route missed its goal");
}

// Strips a leaf whose item already matches goal and recurses on the rest.
void strip_route(const Instance& inst, Assignment& cur, const Assignment& goal, AgentId leaf,
                 FrameSink& sink, MoveBudget& budget) {
  std::vector<AgentId> agents;
  agents.reserve(static_cast<std::size_t>(inst.n) - 1);
  for (AgentId i = 0; i < inst.n; ++i)
    if (i != leaf) agents.push_back(i);
  std::vector<ItemId> items;
  items.reserve(static_cast<std::size_t>(inst.n) - 1);
  ItemId gone = cur.item_of(leaf);
  for (ItemId j = 0; j < inst.n; ++j)
    if (j != gone) items.push_back(j);
  SubInstance sub = restrict_instance(inst, agents, items, cur, goal);
  Assignment scur = sub.inst.source;
  route_no_stable(sub.inst, scur, sub.inst.target,
                  [&sub, &sink](SwapMove m) {
                    sink.deliver({sub.agents[static_cast<std::size_t>(m.first)],
                                  sub.agents[static_cast<std::size_t>(m.second)]});
                  },
                  budget);
}

void case2_route(const Instance& inst, Assignment& cur, const Assignment& goal, const Emit& emit,
                 MoveBudget& budget) {
  FrameSink sink{inst, cur, emit};
  std::vector<AgentId> all_agents(static_cast<std::size_t>(inst.n));
  std::vector<ItemId> all_items(static_cast<std::size_t>(inst.n));
  for (int k = 0; k < inst.n; ++k) all_agents[static_cast<std::size_t>(k)] = all_items[static_cast<std::size_t>(k)] = k;
  std::vector<AgentId> leaves;
  for (AgentId i = 0; i < inst.n; ++i)
    if (inst.adj[static_cast<std::size_t>(i)].size() == 1) leaves.push_back(i);

  for (AgentId leaf : leaves) {
    if (cur.item_of(leaf) == goal.item_of(leaf)) {
      strip_route(inst, cur, goal, leaf, sink, budget);
      return;
    }
  }

  auto via_pair = [&](AgentId hold, AgentId fix, const Assignment& to) {
    // First fix `hold` on its current item while handing goal(fix)'s item
    // to fix, then strip both in turn.
    auto mid = constrained_matching(inst, all_agents, all_items,
                                    {{hold, cur.item_of(hold)}, {fix, to.item_of(fix)}});
    if (!mid) fail(Errc::Internal, "no intermediate assignment fixes two leaves");
    Assignment c = pairs_assignment(*mid, inst.n);
    strip_route(inst, cur, c, hold, sink, budget);
    strip_route(inst, cur, to, fix, sink, budget);
  };

  for (AgentId leaf : leaves) {
    for (AgentId other : leaves) {
      if (other == leaf || cur.item_of(other) == goal.item_of(leaf)) continue;
      via_pair(other, leaf, goal);
      return;
    }
  }

  // Only a path reaches here: each leaf holds exactly what the other
  // needs. Park one leaf's item next to it first, then the pair step
  // above applies.
  if (leaves.size() != 2) fail(Errc::Internal, "leaf exchange outside a path");
  AgentId leaf = leaves[0], other = leaves[1];
  AgentId q = inst.adj[static_cast<std::size_t>(leaf)][0];
  auto mid = constrained_matching(inst, all_agents, all_items,
                                  {{leaf, cur.item_of(leaf)}, {q, cur.item_of(other)}});
  if (!mid) fail(Errc::Internal, "no intermediate assignment unblocks the path");
  Assignment c = pairs_assignment(*mid, inst.n);
  strip_route(inst, cur, c, leaf, sink, budget);
  via_pair(other, leaf, goal);
}

void route_no_stable(const Instance& inst, Assignment& cur, const Assignment& goal,
                     const Emit& emit, MoveBudget& budget) {
  if (cur == goal) return;
  if (inst.n <= 1) fail(Errc::Internal, "distinct assignments on a trivial instance");
  if (min_proper_stable(inst)) fail(Errc::Internal, "proper stable subset inside a route");
  if (inst.n == 2) {
    FrameSink sink{inst, cur, emit};
    budget.charge();
    sink.deliver({0, 1});
    if (!(cur == goal)) fail(Errc::Internal, "two-agent route missed its goal");
    return;
  }
  if (auto X = find_case1_set(inst))
    case1_route(inst, *X, cur, goal, emit, budget);
  else
    case2_route(inst, cur, goal, emit, budget);
}

void check_region(const Instance& inst, const Region& reg) {
  if (reg.items.empty()) fail(Errc::EmptySet, "region without items");
  Region expect = region_of(inst, reg.items);
  if (expect.agents != reg.agents) fail(Errc::InconsistentConstraints, "region agents do not match its items");
  if (static_cast<int>(reg.agents.size()) != static_cast<int>(reg.items.size()) + 1)
    fail(Errc::InconsistentConstraints, "region must have one agent more than items");
}

}  // namespace

Region region_of(const Instance& inst, std::vector<ItemId> X) {
  std::sort(X.begin(), X.end());
  X.erase(std::unique(X.begin(), X.end()), X.end());
  std::vector<char> seen(static_cast<std::size_t>(inst.n), 0);
  Region reg;
  reg.items = std::move(X);
  for (ItemId j : reg.items) {
    if (j < 0 || j >= inst.n) fail(Errc::ItemInSet, "item out of range");
    for (AgentId i : inst.item_agents[static_cast<std::size_t>(j)]) {
      if (!seen[static_cast<std::size_t>(i)]) {
        seen[static_cast<std::size_t>(i)] = 1;
        reg.agents.push_back(i);
      }
    }
  }
  std::sort(reg.agents.begin(), reg.agents.end());
  return reg;
}

std::optional<std::vector<ItemId>> find_case1_set(const Instance& inst) {
  const int n = inst.n;
  std::optional<std::vector<ItemId>> best;
  auto better = [&](const std::vector<ItemId>& cand) {
    if (!best) return true;
    if (cand.size() != best->size()) return cand.size() < best->size();
    return cand < *best;
  };

  // Dropping one agent h: sink components of "item -> holder's other
  // items" over M minus h's item are exactly the sets whose agent hood is
  // themselves plus h. Sets reaching every agent are skipped.
  for (AgentId h = 0; h < n; ++h) {
    ItemId jh = inst.source.item_of(h);
    auto local = [jh](ItemId j) { return j < jh ? j : j - 1; };
    std::vector<std::vector<int>> out(static_cast<std::size_t>(n - 1));
    for (ItemId j = 0; j < n; ++j) {
      if (j == jh) continue;
      auto& row = out[static_cast<std::size_t>(local(j))];
      for (AgentId i : inst.item_agents[static_cast<std::size_t>(j)]) {
        if (i == h) continue;
        row.push_back(local(inst.source.item_of(i)));
      }
      std::sort(row.begin(), row.end());
      row.erase(std::unique(row.begin(), row.end()), row.end());
    }

    std::vector<int> comp_of;
    int comp_count = scc_components(out, comp_of);
    std::vector<char> is_sink(static_cast<std::size_t>(comp_count), 1);
    for (int v = 0; v < n - 1; ++v)
      for (int w : out[static_cast<std::size_t>(v)])
        if (comp_of[static_cast<std::size_t>(v)] != comp_of[static_cast<std::size_t>(w)])
          is_sink[static_cast<std::size_t>(comp_of[static_cast<std::size_t>(v)])] = 0;

    std::vector<std::vector<ItemId>> members(static_cast<std::size_t>(comp_count));
    for (ItemId j = 0; j < n; ++j) {
      if (j == jh) continue;
      int c = comp_of[static_cast<std::size_t>(local(j))];
      if (is_sink[static_cast<std::size_t>(c)]) members[static_cast<std::size_t>(c)].push_back(j);
    }
    for (int c = 0; c < comp_count; ++c) {
      auto& cand = members[static_cast<std::size_t>(c)];
      if (cand.empty() || static_cast<int>(cand.size()) > n - 2) continue;
      if (better(cand)) best = cand;
    }
  }
  return best;
}

std::vector<std::pair<AgentId, ItemId>> region_assignment(const Instance& inst, const Region& reg,
                                                          ItemId j, AgentId i) {
  check_region(inst, reg);
  if (std::binary_search(reg.items.begin(), reg.items.end(), j))
    fail(Errc::ItemInSet, "floating item lies in the region's set");
  std::vector<ItemId> pool = reg.items;
  pool.insert(std::lower_bound(pool.begin(), pool.end(), j), j);
  auto pairs = constrained_matching(inst, reg.agents, pool, {{i, j}});
  if (!pairs) fail(Errc::InconsistentConstraints, "region admits no such assignment");
  return *pairs;
}

ReconfigSequence region_route(const Instance& inst, const Region& reg, const Assignment& from,
                              const Assignment& to, std::uint64_t cap) {
  check_region(inst, reg);
  std::vector<char> in_region = mark_of(inst.n, reg.agents);
  for (AgentId i = 0; i < inst.n; ++i) {
    if (in_region[static_cast<std::size_t>(i)]) continue;
    if (from.item_of(i) != to.item_of(i))
      fail(Errc::InconsistentConstraints, "assignments differ outside the region");
  }
  std::vector<char> in_X = mark_of(inst.n, reg.items);
  AgentId hf = floating_holder(reg, in_X, from);
  AgentId ht = floating_holder(reg, in_X, to);
  if (from.item_of(hf) != to.item_of(ht))
    fail(Errc::InconsistentConstraints, "region floats different items");

  ReconfigSequence seq;
  seq.start = from;
  seq.end = to;
  MoveBudget budget{cap};
  Assignment cur = from;
  Emit record = [&seq](SwapMove m) { seq.moves.push_back(m); };
  FrameSink sink{inst, cur, record};
  std::vector<ItemId> pool = reg.items;
  ItemId extra = from.item_of(hf);
  pool.insert(std::lower_bound(pool.begin(), pool.end(), extra), extra);
  std::vector<std::pair<AgentId, ItemId>> pairs;
  pairs.reserve(reg.agents.size());
  for (AgentId r : reg.agents) pairs.emplace_back(r, to.item_of(r));
  route_subset(inst, reg.agents, pool, cur, pairs, sink, budget);
  if (!(cur == to)) fail(Errc::Internal, "region route missed its goal");
  return seq;
}

std::tuple<ReconfigSequence, Assignment, ItemId> normalize_component_item(const Instance& inst,
                                                                          const Region& reg,
                                                                          const Assignment& c,
                                                                          std::uint64_t cap) {
  check_region(inst, reg);
  MoveBudget budget{cap};
  ReconfigSequence seq;
  seq.start = c;
  Assignment staged = c;
  ItemId jstar = stage_floating(inst, reg, staged, seq.moves, budget);
  seq.end = staged;
  return {std::move(seq), std::move(staged), jstar};
}

ReconfigSequence lift_step(const Instance& inst, const Region& reg, SwapMove shrunk_move,
                           const Assignment& current, std::uint64_t cap) {
  check_region(inst, reg);
  std::vector<char> in_region = mark_of(inst.n, reg.agents);
  std::vector<char> in_X = mark_of(inst.n, reg.items);
  AgentId holder = floating_holder(reg, in_X, current);
  Shrunk sh = build_shrunk(inst, reg, current, current, current.item_of(holder));
  if (!legal_swap(sh.inst, sh.inst.source, shrunk_move))
    fail(Errc::IllegalSwap, "move is not legal in the contracted instance");

  ReconfigSequence seq;
  seq.start = current;
  MoveBudget budget{cap};
  budget.charge();  // the contracted move itself
  Assignment cur = current;
  Emit record = [&seq](SwapMove m) { seq.moves.push_back(m); };
  FrameSink sink{inst, cur, record};
  lift_one(inst, reg, in_region, in_X, sh, shrunk_move, sink, budget);
  seq.end = cur;
  return seq;
}

ReconfigSequence witness_case1(const Instance& inst, const std::vector<ItemId>& X,
                               std::uint64_t cap) {
  ReconfigSequence seq;
  seq.start = inst.source;
  seq.end = inst.target;
  if (inst.source == inst.target) return seq;
  MoveBudget budget{cap};
  Assignment cur = inst.source;
  std::vector<ItemId> items = X;
  std::sort(items.begin(), items.end());
  case1_route(inst, items, cur, inst.target, [&seq](SwapMove m) { seq.moves.push_back(m); },
              budget);
  return seq;
}

ReconfigSequence witness_case2(const Instance& inst, std::uint64_t cap) {
  ReconfigSequence seq;
  seq.start = inst.source;
  seq.end = inst.target;
  if (inst.source == inst.target) return seq;
  MoveBudget budget{cap};
  Assignment cur = inst.source;
  Emit emit = [&seq](SwapMove m) { seq.moves.push_back(m); };
  if (inst.n == 2) {
    FrameSink sink{inst, cur, emit};
    budget.charge();
    sink.deliver({0, 1});
  } else {
    case2_route(inst, cur, inst.target, emit, budget);
  }
  if (!(cur == inst.target)) fail(Errc::Internal, "case-2 route missed its goal");
  return seq;
}

void build_witness_stream(const Instance& inst, std::uint64_t cap,
                          const std::function<void(SwapMove)>& sink) {
  NormalizeResult nr = normalize(inst);
  if (!nr.ok())
    fail(Errc::NotYesInstance,
         "item " + inst.item_name(*nr.blocked_item) + " cannot reach its target holder");
  const Instance& root = *nr.instance;
  if (root.n == 0) return;
  if (!root.is_tree()) fail(Errc::NotATree, "witness construction needs a tree");

  MoveBudget budget{cap};
  Assignment state = root.source;

  std::function<void(const Instance&, const Emit&)> rec = [&](const Instance& node,
                                                              const Emit& emit) {
    auto stable = min_proper_stable(node);
    if (!stable) {
      Assignment cur = node.source;
      route_no_stable(node, cur, node.target, emit, budget);
      return;
    }
    SplitOutcome split = split_check(node, *stable);
    if (split.crossing)
      fail(Errc::NotYesInstance, "an item would have to leave a stable set's block");
    for (const SubInstance& child : decompose(node, *stable, split.components)) {
      const std::vector<AgentId> up = child.agents;
      rec(child.inst, [up, &emit](SwapMove m) {
        emit({up[static_cast<std::size_t>(m.first)], up[static_cast<std::size_t>(m.second)]});
      });
    }
  };

  rec(root, [&](SwapMove m) {
    state = apply_swap(root, state, m);
    sink(m);
  });
  if (!(state == root.target)) fail(Errc::Internal, "witness does not reach the target");
}

ReconfigSequence build_witness(const Instance& inst, std::uint64_t cap) {
  ReconfigSequence seq;
  seq.start = inst.source;
  seq.end = inst.target;
  build_witness_stream(inst, cap, [&seq](SwapMove m) { seq.moves.push_back(m); });
  return seq;
}

}  // namespace swapreach
