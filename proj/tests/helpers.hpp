#pragma once

#include <string>
#include <vector>

#include "swapreach/core.hpp"
#include "swapreach/io.hpp"

namespace swapreach::test {

inline std::string data_path(const std::string& name) {
  return std::string(TEST_DATA_DIR) + "/" + name;
}

inline Instance load_fixture(const std::string& name) {
  return parse_instance_file(data_path(name));
}

// Path graph with edges (k, k+1); acceptability given per item.
inline Instance path_instance(std::vector<std::vector<AgentId>> item_agents,
                              std::vector<ItemId> a, std::vector<ItemId> b) {
  InstanceData d;
  d.n = static_cast<int>(item_agents.size());
  d.item_agents = std::move(item_agents);
  for (int k = 0; k + 1 < d.n; ++k) d.edges.push_back({k, k + 1});
  d.source = std::move(a);
  d.target = std::move(b);
  return make_instance(std::move(d));
}

// Star with the given center; acceptability given per item.
inline Instance star_instance(int center, std::vector<std::vector<AgentId>> item_agents,
                              std::vector<ItemId> a, std::vector<ItemId> b) {
  InstanceData d;
  d.n = static_cast<int>(item_agents.size());
  d.item_agents = std::move(item_agents);
  for (int k = 0; k < d.n; ++k)
    if (k != center) d.edges.push_back({center, k});
  d.source = std::move(a);
  d.target = std::move(b);
  return make_instance(std::move(d));
}

}  // namespace swapreach::test
