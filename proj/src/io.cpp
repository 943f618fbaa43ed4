#include "swapreach/io.hpp"

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

long long parse_count(const std::string& tok, int lineno) {
  try {
    std::size_t used = 0;
    const long long v = std::stoll(tok, &used);
    if (used != tok.size() || v < 0) throw std::invalid_argument(tok);
    return v;
  } catch (const std::exception&) {
    fail(Errc::ParseError, "line " + std::to_string(lineno) + ": bad count '" + tok + "'");
  }
}

}  // namespace

RawInstance parse_raw(std::istream& in) {
  RawInstance raw;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const auto toks = tokenize(line);
    if (toks.empty()) continue;
    const std::string& kind = toks[0];
    if (kind == "agents" || kind == "items") {
      if (toks.size() != 2) fail(Errc::ParseError, "line " + std::to_string(lineno) + ": expected one count");
      long long& slot = (kind == "agents") ? raw.agent_count : raw.item_count;
      if (slot != -1) fail(Errc::ParseError, "line " + std::to_string(lineno) + ": repeated " + kind + " header");
      slot = parse_count(toks[1], lineno);
    } else if (kind == "accept") {
      if (toks.size() < 2) fail(Errc::ParseError, "line " + std::to_string(lineno) + ": accept needs an item");
      raw.accepts.emplace_back(toks[1], std::vector<std::string>(toks.begin() + 2, toks.end()));
    } else if (kind == "edge") {
      if (toks.size() != 3) fail(Errc::ParseError, "line " + std::to_string(lineno) + ": edge needs two agents");
      raw.edges.emplace_back(toks[1], toks[2]);
    } else if (kind == "assign") {
      if (toks.size() != 4 || (toks[1] != "a" && toks[1] != "b"))
        fail(Errc::ParseError, "line " + std::to_string(lineno) + ": expected 'assign a|b <agent> <item>'");
      auto& dst = (toks[1] == "a") ? raw.assign_a : raw.assign_b;
      dst.emplace_back(toks[2], toks[3]);
    } else {
      fail(Errc::ParseError, "line " + std::to_string(lineno) + ": unknown directive '" + kind + "'");
    }
  }
  if (raw.agent_count < 0) fail(Errc::ParseError, "missing 'agents' header");
  if (raw.item_count < 0) fail(Errc::ParseError, "missing 'items' header");
  return raw;
}

Instance validate_instance(const RawInstance& raw) {
  // The source assignment lines define the agent and item rosters.
  std::map<std::string, AgentId> agent_id;
  std::map<std::string, ItemId> item_id;
  for (const auto& [agent, item] : raw.assign_a) {
    if (!agent_id.emplace(agent, 0).second)
      fail(Errc::NotBijection, "agent '" + agent + "' assigned twice in source");
    if (!item_id.emplace(item, 0).second)
      fail(Errc::NotBijection, "item '" + item + "' assigned twice in source");
  }
  if (static_cast<long long>(agent_id.size()) != raw.agent_count)
    fail(Errc::SizeMismatch, "agents header says " + std::to_string(raw.agent_count) + ", source assigns " +
                                 std::to_string(agent_id.size()));
  if (static_cast<long long>(item_id.size()) != raw.item_count)
    fail(Errc::SizeMismatch, "items header says " + std::to_string(raw.item_count) + ", source assigns " +
                                 std::to_string(item_id.size()));
  if (raw.agent_count != raw.item_count)
    fail(Errc::SizeMismatch, "agent and item counts differ");

  const int n = static_cast<int>(raw.agent_count);
  {
    AgentId next = 0;
    for (auto& [name, id] : agent_id) id = next++;
  }
  {
    ItemId next = 0;
    for (auto& [name, id] : item_id) id = next++;
  }

  InstanceData d;
  d.n = n;
  d.item_agents.assign(static_cast<std::size_t>(n), {});
  for (const auto& [item, agents] : raw.accepts) {
    const auto it = item_id.find(item);
    if (it == item_id.end()) fail(Errc::ParseError, "accept line names unknown item '" + item + "'");
    for (const auto& agent : agents) {
      const auto at = agent_id.find(agent);
      if (at == agent_id.end()) fail(Errc::ParseError, "accept line names unknown agent '" + agent + "'");
      d.item_agents[static_cast<std::size_t>(it->second)].push_back(at->second);
    }
  }
  for (const auto& [u, v] : raw.edges) {
    const auto ut = agent_id.find(u), vt = agent_id.find(v);
    if (ut == agent_id.end()) fail(Errc::BadEdge, "edge names unknown agent '" + u + "'");
    if (vt == agent_id.end()) fail(Errc::BadEdge, "edge names unknown agent '" + v + "'");
    d.edges.emplace_back(ut->second, vt->second);
  }

  d.source.assign(static_cast<std::size_t>(n), -1);
  for (const auto& [agent, item] : raw.assign_a)
    d.source[static_cast<std::size_t>(agent_id.at(agent))] = item_id.at(item);

  d.target.assign(static_cast<std::size_t>(n), -1);
  std::vector<char> covered(static_cast<std::size_t>(n), 0);
  for (const auto& [agent, item] : raw.assign_b) {
    const auto at = agent_id.find(agent);
    const auto it = item_id.find(item);
    if (at == agent_id.end()) fail(Errc::NotBijection, "target names unknown agent '" + agent + "'");
    if (it == item_id.end()) fail(Errc::NotBijection, "target names unknown item '" + item + "'");
    if (covered[static_cast<std::size_t>(at->second)])
      fail(Errc::NotBijection, "agent '" + agent + "' assigned twice in target");
    covered[static_cast<std::size_t>(at->second)] = 1;
    d.target[static_cast<std::size_t>(at->second)] = it->second;
  }
  for (int i = 0; i < n; ++i)
    if (!covered[static_cast<std::size_t>(i)]) fail(Errc::NotBijection, "target misses an agent");

  d.agent_names.resize(static_cast<std::size_t>(n));
  for (const auto& [name, id] : agent_id) d.agent_names[static_cast<std::size_t>(id)] = name;
  d.item_names.resize(static_cast<std::size_t>(n));
  for (const auto& [name, id] : item_id) d.item_names[static_cast<std::size_t>(id)] = name;
  return make_instance(std::move(d));
}

Instance parse_instance(std::istream& in) { return validate_instance(parse_raw(in)); }

Instance parse_instance_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(Errc::ParseError, "cannot open '" + path + "'");
  return parse_instance(in);
}

std::string serialize_instance(const Instance& inst) {
  const int n = inst.n;
  std::vector<int> agent_order(static_cast<std::size_t>(n)), item_order(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) agent_order[static_cast<std::size_t>(i)] = i;
  for (int j = 0; j < n; ++j) item_order[static_cast<std::size_t>(j)] = j;
  std::sort(agent_order.begin(), agent_order.end(),
            [&](int a, int b) { return inst.agent_name(a) < inst.agent_name(b); });
  std::sort(item_order.begin(), item_order.end(),
            [&](int a, int b) { return inst.item_name(a) < inst.item_name(b); });

  std::ostringstream out;
  out << "agents " << n << "\n";
  out << "items " << n << "\n";
  for (int j : item_order) {
    if (inst.item_agents[static_cast<std::size_t>(j)].empty()) continue;
    std::vector<std::string> names;
    for (AgentId i : inst.item_agents[static_cast<std::size_t>(j)]) names.push_back(inst.agent_name(i));
    std::sort(names.begin(), names.end());
    out << "accept " << inst.item_name(j);
    for (const auto& nm : names) out << " " << nm;
    out << "\n";
  }
  std::vector<std::pair<std::string, std::string>> edges;
  for (AgentId u = 0; u < n; ++u)
    for (AgentId v : inst.adj[static_cast<std::size_t>(u)])
      if (v > u) {
        std::string a = inst.agent_name(u), b = inst.agent_name(v);
        if (b < a) std::swap(a, b);
        edges.emplace_back(std::move(a), std::move(b));
      }
  std::sort(edges.begin(), edges.end());
  for (const auto& [u, v] : edges) out << "edge " << u << " " << v << "\n";
  for (int i : agent_order)
    out << "assign a " << inst.agent_name(i) << " " << inst.item_name(inst.source.item_of(i)) << "\n";
  for (int i : agent_order)
    out << "assign b " << inst.agent_name(i) << " " << inst.item_name(inst.target.item_of(i)) << "\n";
  return out.str();
}

}  // namespace swapreach
