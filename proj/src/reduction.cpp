#include "swapreach/reduction.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <sstream>

namespace swapreach {

namespace {

std::vector<std::string> tokenize(const std::string& line) {
  std::vector<std::string> toks;
  std::istringstream in(line);
  std::string t;
  while (in >> t) {
    if (t[0] == '#') break;
    toks.push_back(t);
  }
  return toks;
}

// Checks that pairs form a perfect matching within adj; returns the
// left -> right map.
std::vector<ItemId> check_matching(const PMRInstance& p,
                                   const std::vector<std::pair<AgentId, ItemId>>& pairs,
                                   const char* which) {
  std::vector<ItemId> of(static_cast<std::size_t>(p.n), -1);
  std::vector<char> right_used(static_cast<std::size_t>(p.n), 0);
  for (auto [l, r] : pairs) {
    if (l < 0 || l >= p.n || r < 0 || r >= p.n)
      fail(Errc::NotPerfectMatching, std::string(which) + " endpoint out of range");
    if (of[static_cast<std::size_t>(l)] != -1)
      fail(Errc::NotPerfectMatching, std::string(which) + " matches a left vertex twice");
    if (right_used[static_cast<std::size_t>(r)])
      fail(Errc::NotPerfectMatching, std::string(which) + " matches a right vertex twice");
    if (!p.has_edge(l, r))
      fail(Errc::NotPerfectMatching, std::string(which) + " uses a non-edge");
    of[static_cast<std::size_t>(l)] = r;
    right_used[static_cast<std::size_t>(r)] = 1;
  }
  for (int l = 0; l < p.n; ++l)
    if (of[static_cast<std::size_t>(l)] == -1)
      fail(Errc::NotPerfectMatching, std::string(which) + " leaves a left vertex unmatched");
  return of;
}

}  // namespace

bool PMRInstance::has_edge(AgentId l, ItemId r) const {
  if (l < 0 || l >= n || r < 0 || r >= n) return false;
  const auto& row = adj[static_cast<std::size_t>(l)];
  return std::binary_search(row.begin(), row.end(), r);
}

PMRInstance make_pmr(PMRData d) {
  if (d.left_n != d.right_n) fail(Errc::SizeMismatch, "left and right sides differ in size");
  if (d.left_n < 0) fail(Errc::SizeMismatch, "negative side size");
  PMRInstance p;
  p.n = d.left_n;
  p.adj.assign(static_cast<std::size_t>(p.n), {});
  for (auto [l, r] : d.edges) {
    if (l < 0 || l >= p.n || r < 0 || r >= p.n) fail(Errc::BadEdge, "edge endpoint out of range");
    p.adj[static_cast<std::size_t>(l)].push_back(r);
  }
  for (auto& row : p.adj) {
    std::sort(row.begin(), row.end());
    if (std::adjacent_find(row.begin(), row.end()) != row.end())
      fail(Errc::DuplicateEdge, "edge listed twice");
  }

  if (d.left_names.empty()) {
    p.left_names.reserve(static_cast<std::size_t>(p.n));
    for (int l = 0; l < p.n; ++l) p.left_names.push_back(std::to_string(l));
  } else if (static_cast<int>(d.left_names.size()) == p.n) {
    p.left_names = std::move(d.left_names);
  } else {
    fail(Errc::SizeMismatch, "left name count differs from side size");
  }
  if (d.right_names.empty()) {
    p.right_names.reserve(static_cast<std::size_t>(p.n));
    for (int r = 0; r < p.n; ++r) p.right_names.push_back("i" + std::to_string(r));
  } else if (static_cast<int>(d.right_names.size()) == p.n) {
    p.right_names = std::move(d.right_names);
  } else {
    fail(Errc::SizeMismatch, "right name count differs from side size");
  }

  p.m1 = check_matching(p, d.m1, "m1");
  p.m2 = check_matching(p, d.m2, "m2");
  return p;
}

Instance reduce_pmr(const PMRInstance& p) {
  InstanceData d;
  d.n = p.n;
  d.item_agents.assign(static_cast<std::size_t>(p.n), {});
  for (AgentId l = 0; l < p.n; ++l)
    for (ItemId r : p.adj[static_cast<std::size_t>(l)])
      d.item_agents[static_cast<std::size_t>(r)].push_back(l);
  for (AgentId u = 0; u < p.n; ++u)
    for (AgentId v = u + 1; v < p.n; ++v) d.edges.emplace_back(u, v);
  d.source = p.m1;
  d.target = p.m2;
  d.agent_names = p.left_names;
  d.item_names = p.right_names;
  return make_instance(std::move(d));
}

std::optional<SwapMove> map_move_forward(const PMRInstance& p, const std::vector<ItemId>& matching,
                                         const std::optional<Exchange>& step) {
  if (!step) return std::nullopt;
  const Exchange& e = *step;
  if (static_cast<int>(matching.size()) != p.n)
    fail(Errc::InvalidExchange, "matching size does not fit the instance");
  if (e.left1 < 0 || e.left1 >= p.n || e.left2 < 0 || e.left2 >= p.n || e.left1 == e.left2)
    fail(Errc::InvalidExchange, "exchange needs two distinct left vertices");
  if (matching[static_cast<std::size_t>(e.left1)] != e.right1 ||
      matching[static_cast<std::size_t>(e.left2)] != e.right2)
    fail(Errc::InvalidExchange, "exchange edges are not in the current matching");
  if (!p.has_edge(e.left1, e.right2) || !p.has_edge(e.left2, e.right1))
    fail(Errc::InvalidExchange, "crossing edges missing from the graph");
  return SwapMove{std::min(e.left1, e.left2), std::max(e.left1, e.left2)};
}

std::vector<Exchange> map_sequence_backward(const PMRInstance& p, const ReconfigSequence& seq) {
  const Instance inst = reduce_pmr(p);
  if (!(seq.start == inst.source) || !(seq.end == inst.target))
    fail(Errc::InvalidSequence, "sequence endpoints do not match the matchings");
  std::vector<Exchange> out;
  out.reserve(seq.moves.size());
  Assignment cur = inst.source;
  for (SwapMove m : seq.moves) {
    if (!legal_swap(inst, cur, m)) fail(Errc::InvalidSequence, "illegal move in sequence");
    AgentId u = std::min(m.first, m.second), v = std::max(m.first, m.second);
    out.push_back({u, cur.item_of(u), v, cur.item_of(v)});
    cur = apply_swap(inst, cur, m);
  }
  if (!(cur == inst.target)) fail(Errc::InvalidSequence, "sequence does not reach the target");
  return out;
}

PMRReachability pmr_bfs_reachable(const PMRInstance& p, std::uint64_t node_budget) {
  PMRReachability res;
  if (p.m1 == p.m2) {
    res.status = SearchStatus::Reachable;
    res.distance = 0;
    res.explored = 1;
    return res;
  }

  std::vector<StateKey> states{p.m1};
  std::vector<std::int64_t> parent{-1};
  std::vector<Exchange> via{{-1, -1, -1, -1}};
  std::unordered_map<StateKey, std::size_t, StateHash> index;
  index.emplace(p.m1, 0);
  bool exhausted = false;

  for (std::size_t head = 0; head < states.size(); ++head) {
    const StateKey cur = states[head];
    for (AgentId l1 = 0; l1 < p.n && !exhausted; ++l1) {
      for (AgentId l2 = l1 + 1; l2 < p.n; ++l2) {
        const ItemId r1 = cur[static_cast<std::size_t>(l1)], r2 = cur[static_cast<std::size_t>(l2)];
        if (!p.has_edge(l1, r2) || !p.has_edge(l2, r1)) continue;
        StateKey next = cur;
        next[static_cast<std::size_t>(l1)] = r2;
        next[static_cast<std::size_t>(l2)] = r1;
        if (index.count(next)) continue;
        if (states.size() >= node_budget) {
          exhausted = true;
          break;
        }
        index.emplace(next, states.size());
        states.push_back(next);
        parent.push_back(static_cast<std::int64_t>(head));
        via.push_back({l1, r1, l2, r2});
        if (next == p.m2) {
          std::vector<Exchange> path;
          std::size_t at = states.size() - 1;
          while (parent[at] != -1) {
            path.push_back(via[at]);
            at = static_cast<std::size_t>(parent[at]);
          }
          std::reverse(path.begin(), path.end());
          res.status = SearchStatus::Reachable;
          res.distance = static_cast<int>(path.size());
          res.shortest = std::move(path);
          res.explored = states.size();
          return res;
        }
      }
    }
    if (exhausted) break;
  }
  res.status = exhausted ? SearchStatus::Exhausted : SearchStatus::Unreachable;
  res.explored = states.size();
  return res;
}

PMRInstance parse_pmr(std::istream& in) {
  long long left_count = -1, right_count = -1;
  std::vector<std::pair<std::string, std::string>> medges, m1, m2;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const auto toks = tokenize(line);
    if (toks.empty()) continue;
    const std::string& kind = toks[0];
    if (kind == "left" || kind == "right") {
      if (toks.size() != 2) fail(Errc::ParseError, "line " + std::to_string(lineno) + ": expected one count");
      long long& slot = (kind == "left") ? left_count : right_count;
      if (slot != -1) fail(Errc::ParseError, "line " + std::to_string(lineno) + ": repeated " + kind + " header");
      try {
        std::size_t used = 0;
        slot = std::stoll(toks[1], &used);
        if (used != toks[1].size() || slot < 0) throw std::invalid_argument(toks[1]);
      } catch (const std::exception&) {
        fail(Errc::ParseError, "line " + std::to_string(lineno) + ": bad count '" + toks[1] + "'");
      }
    } else if (kind == "medge" || kind == "m1" || kind == "m2") {
      if (toks.size() != 3)
        fail(Errc::ParseError, "line " + std::to_string(lineno) + ": expected '" + kind + " <left> <right>'");
      auto& dst = (kind == "medge") ? medges : (kind == "m1") ? m1 : m2;
      dst.emplace_back(toks[1], toks[2]);
    } else {
      fail(Errc::ParseError, "line " + std::to_string(lineno) + ": unknown directive '" + kind + "'");
    }
  }
  if (left_count < 0) fail(Errc::ParseError, "missing 'left' header");
  if (right_count < 0) fail(Errc::ParseError, "missing 'right' header");

  // The m1 lines define both vertex rosters, as the source assignment
  // does for instances.
  std::map<std::string, AgentId> left_id;
  std::map<std::string, ItemId> right_id;
  for (const auto& [l, r] : m1) {
    left_id.emplace(l, 0);
    right_id.emplace(r, 0);
  }
  if (static_cast<long long>(left_id.size()) != left_count)
    fail(Errc::SizeMismatch, "left header says " + std::to_string(left_count) + ", m1 covers " +
                                 std::to_string(left_id.size()));
  if (static_cast<long long>(right_id.size()) != right_count)
    fail(Errc::SizeMismatch, "right header says " + std::to_string(right_count) + ", m1 covers " +
                                 std::to_string(right_id.size()));
  {
    AgentId next = 0;
    for (auto& [name, id] : left_id) id = next++;
  }
  {
    ItemId next = 0;
    for (auto& [name, id] : right_id) id = next++;
  }
  auto lookup = [&](const std::map<std::string, int>& ids, const std::string& name) {
    const auto it = ids.find(name);
    if (it == ids.end()) fail(Errc::BadEdge, "unknown vertex '" + name + "'");
    return it->second;
  };

  PMRData d;
  d.left_n = static_cast<int>(left_count);
  d.right_n = static_cast<int>(right_count);
  for (const auto& [l, r] : medges) d.edges.emplace_back(lookup(left_id, l), lookup(right_id, r));
  for (const auto& [l, r] : m1) d.m1.emplace_back(left_id.at(l), right_id.at(r));
  for (const auto& [l, r] : m2) d.m2.emplace_back(lookup(left_id, l), lookup(right_id, r));
  d.left_names.resize(left_id.size());
  for (const auto& [name, id] : left_id) d.left_names[static_cast<std::size_t>(id)] = name;
  d.right_names.resize(right_id.size());
  for (const auto& [name, id] : right_id) d.right_names[static_cast<std::size_t>(id)] = name;
  return make_pmr(std::move(d));
}

PMRInstance parse_pmr_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(Errc::ParseError, "cannot open '" + path + "'");
  return parse_pmr(in);
}

std::string serialize_pmr(const PMRInstance& p) {
  std::vector<int> left_order(static_cast<std::size_t>(p.n)), right_order(static_cast<std::size_t>(p.n));
  for (int k = 0; k < p.n; ++k) left_order[static_cast<std::size_t>(k)] = right_order[static_cast<std::size_t>(k)] = k;
  std::sort(left_order.begin(), left_order.end(),
            [&](int a, int b) { return p.left_name(a) < p.left_name(b); });
  std::sort(right_order.begin(), right_order.end(),
            [&](int a, int b) { return p.right_name(a) < p.right_name(b); });

  std::ostringstream out;
  out << "left " << p.n << "\n";
  out << "right " << p.n << "\n";
  std::vector<std::pair<std::string, std::string>> lines;
  for (int l = 0; l < p.n; ++l)
    for (ItemId r : p.adj[static_cast<std::size_t>(l)]) lines.emplace_back(p.left_name(l), p.right_name(r));
  std::sort(lines.begin(), lines.end());
  for (const auto& [l, r] : lines) out << "medge " << l << " " << r << "\n";
  for (int l : left_order) out << "m1 " << p.left_name(l) << " " << p.right_name(p.m1[static_cast<std::size_t>(l)]) << "\n";
  for (int l : left_order) out << "m2 " << p.left_name(l) << " " << p.right_name(p.m2[static_cast<std::size_t>(l)]) << "\n";
  return out.str();
}

}  // namespace swapreach
