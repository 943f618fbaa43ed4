#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "swapreach/core.hpp"
#include "swapreach/oracle.hpp"

namespace swapreach {

/// Bipartite perfect matching reconfiguration input: a bipartite graph
/// with equal sides and two perfect matchings inside its edge set.
struct PMRData {
  int left_n = 0;
  int right_n = 0;
  std::vector<std::pair<AgentId, ItemId>> edges;
  std::vector<std::pair<AgentId, ItemId>> m1;
  std::vector<std::pair<AgentId, ItemId>> m2;
  std::vector<std::string> left_names;   // optional, defaults to decimal ids
  std::vector<std::string> right_names;  // optional, defaults to i<decimal>
};

struct PMRInstance {
  int n = 0;                          // size of either side
  std::vector<std::vector<ItemId>> adj;  // left vertex -> sorted right neighbours
  std::vector<ItemId> m1, m2;            // left vertex -> matched right vertex
  std::vector<std::string> left_names, right_names;

  bool has_edge(AgentId l, ItemId r) const;
  const std::string& left_name(AgentId l) const { return left_names[static_cast<std::size_t>(l)]; }
  const std::string& right_name(ItemId r) const { return right_names[static_cast<std::size_t>(r)]; }
};

/// Validates and freezes PMR data. Throws SizeMismatch on unequal or
/// inconsistent side sizes, BadEdge on out-of-range endpoints,
/// DuplicateEdge on repeated edges, NotPerfectMatching when m1 or m2
/// fails to be a perfect matching inside the edge set.
PMRInstance make_pmr(PMRData d);

/// Swapping the partners of two left vertices along a 4-cycle: the two
/// matched edges recorded here leave the matching, the two crossed ones
/// enter it.
struct Exchange {
  AgentId left1;
  ItemId right1;
  AgentId left2;
  ItemId right2;
  friend bool operator==(const Exchange&, const Exchange&) = default;
};

/// The instance whose reachability question matches the PMR question:
/// left vertices become agents on a complete communication graph, right
/// vertices become items accepted by their graph neighbours, the two
/// matchings become the two assignments.
Instance reduce_pmr(const PMRInstance& p);

/// The swap mirroring one exchange, applied at `matching` (left vertex ->
/// right vertex). No step (nullopt) maps to no move. Throws
/// InvalidExchange when the exchange does not fit the matching or the
/// graph.
std::optional<SwapMove> map_move_forward(const PMRInstance& p, const std::vector<ItemId>& matching,
                                         const std::optional<Exchange>& step);

/// Translates a move sequence on reduce_pmr(p) back into the exchange
/// list transforming m1 into m2, step for step. Throws InvalidSequence
/// when the sequence does not start at m1, end at m2, or replay legally.
std::vector<Exchange> map_sequence_backward(const PMRInstance& p, const ReconfigSequence& seq);

struct PMRReachability {
  SearchStatus status = SearchStatus::Unreachable;
  int distance = -1;
  std::vector<Exchange> shortest;
  std::uint64_t explored = 0;
};

/// Breadth-first search over perfect matchings connected by exchanges,
/// from m1 to m2. Exists to check the reduction against an independent
/// ground truth; desk scale only.
PMRReachability pmr_bfs_reachable(const PMRInstance& p, std::uint64_t node_budget = 10'000'000);

/// PMR file format, mirroring the instance format: `left <n>` and
/// `right <n>` headers, one `medge <l> <r>` line per graph edge, one
/// `m1 <l> <r>` / `m2 <l> <r>` line per matching edge, `#` comments.
/// Vertex rosters come from the m1 lines.
PMRInstance parse_pmr(std::istream& in);
PMRInstance parse_pmr_file(const std::string& path);
std::string serialize_pmr(const PMRInstance& p);

}  // namespace swapreach
