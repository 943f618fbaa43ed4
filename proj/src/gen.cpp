#include "swapreach/gen.hpp"

#include <algorithm>
#include <utility>
#include <vector>

namespace swapreach {

namespace {

// Fisher-Yates, high index down, one below() per position.
template <class T>
void shuffle_vec(std::vector<T>& v, SplitMix64& rng) {
  for (std::size_t k = v.size(); k > 1; --k)
    std::swap(v[k - 1], v[static_cast<std::size_t>(rng.below(k))]);
}

void check_density(double density) {
  if (!(density >= 0.0 && density <= 1.0))
    fail(Errc::InconsistentConstraints, "density must lie in [0,1]");
}

// Kuhn augmentation over per-agent preference lists.
bool augment_prefs(const std::vector<std::vector<ItemId>>& prefs, AgentId i,
                   std::vector<char>& item_seen, std::vector<AgentId>& item_agent) {
  for (ItemId j : prefs[static_cast<std::size_t>(i)]) {
    if (item_seen[static_cast<std::size_t>(j)]) continue;
    item_seen[static_cast<std::size_t>(j)] = 1;
    const AgentId holder = item_agent[static_cast<std::size_t>(j)];
    if (holder == -1 || augment_prefs(prefs, holder, item_seen, item_agent)) {
      item_agent[static_cast<std::size_t>(j)] = i;
      return true;
    }
  }
  return false;
}

Instance gen_pmr_cycle(int n, std::uint64_t seed, double density) {
  SplitMix64 rng(seed);
  PMRData d;
  d.left_n = d.right_n = n;
  std::vector<std::vector<char>> present(static_cast<std::size_t>(n),
                                         std::vector<char>(static_cast<std::size_t>(n), 0));
  for (int l = 0; l < n; ++l) {
    present[static_cast<std::size_t>(l)][static_cast<std::size_t>(l)] = 1;
    d.edges.emplace_back(l, l);
    d.m1.emplace_back(l, l);
  }
  if (n >= 2) {
    for (int l = 0; l < n; ++l) {
      const int r = (l + 1) % n;
      present[static_cast<std::size_t>(l)][static_cast<std::size_t>(r)] = 1;
      d.edges.emplace_back(l, r);
      d.m2.emplace_back(l, r);
    }
  } else {
    d.m2 = d.m1;
  }
  for (int l = 0; l < n; ++l)
    for (int r = 0; r < n; ++r) {
      if (present[static_cast<std::size_t>(l)][static_cast<std::size_t>(r)]) continue;
      if (rng.unit() < density) d.edges.emplace_back(l, r);
    }
  return reduce_pmr(make_pmr(std::move(d)));
}

}  // namespace

std::optional<Shape> parse_shape(const std::string& name) {
  if (name == "tree") return Shape::Tree;
  if (name == "path") return Shape::Path;
  if (name == "star") return Shape::Star;
  if (name == "complete") return Shape::Complete;
  if (name == "pmr-cycle") return Shape::PmrCycle;
  return std::nullopt;
}

const char* shape_name(Shape s) {
  switch (s) {
    case Shape::Tree: return "tree";
    case Shape::Path: return "path";
    case Shape::Star: return "star";
    case Shape::Complete: return "complete";
    case Shape::PmrCycle: return "pmr-cycle";
  }
  return "?";
}

Instance gen_instance(const GenSpec& spec) {
  if (spec.agent_count < 1) fail(Errc::InconsistentConstraints, "agent count must be positive");
  check_density(spec.accept_density);
  if (spec.shape == Shape::PmrCycle)
    return gen_pmr_cycle(spec.agent_count, spec.seed, spec.accept_density);

  const int n = spec.agent_count;
  SplitMix64 rng(spec.seed);

  // Draw order: graph, source permutation, acceptability coins per item,
  // method coin, then the walk or the matching shuffles. Changing it
  // breaks fixture reproducibility.
  std::vector<std::pair<AgentId, AgentId>> edges;
  switch (spec.shape) {
    case Shape::Tree:
      for (AgentId v = 1; v < n; ++v)
        edges.emplace_back(static_cast<AgentId>(rng.below(static_cast<std::uint64_t>(v))), v);
      break;
    case Shape::Path:
      for (AgentId v = 0; v + 1 < n; ++v) edges.emplace_back(v, v + 1);
      break;
    case Shape::Star:
      for (AgentId v = 1; v < n; ++v) edges.emplace_back(0, v);
      break;
    case Shape::Complete:
      for (AgentId u = 0; u < n; ++u)
        for (AgentId v = u + 1; v < n; ++v) edges.emplace_back(u, v);
      break;
    case Shape::PmrCycle: break;  // handled above
  }
  std::vector<std::vector<AgentId>> adj(static_cast<std::size_t>(n));
  for (auto [u, v] : edges) {
    adj[static_cast<std::size_t>(u)].push_back(v);
    adj[static_cast<std::size_t>(v)].push_back(u);
  }
  for (auto& row : adj) std::sort(row.begin(), row.end());

  std::vector<ItemId> source(static_cast<std::size_t>(n));
  for (int k = 0; k < n; ++k) source[static_cast<std::size_t>(k)] = k;
  shuffle_vec(source, rng);
  std::vector<AgentId> holder(static_cast<std::size_t>(n));
  for (AgentId i = 0; i < n; ++i) holder[static_cast<std::size_t>(source[static_cast<std::size_t>(i)])] = i;

  // Acceptability percolation: starting from the source holder, every
  // newly reached agent joins with one density coin; members expose
  // their neighbours. Keeps G[N_j] connected by construction.
  std::vector<std::vector<AgentId>> item_agents(static_cast<std::size_t>(n));
  std::vector<char> exposed(static_cast<std::size_t>(n));
  for (ItemId j = 0; j < n; ++j) {
    std::fill(exposed.begin(), exposed.end(), 0);
    std::vector<AgentId> frontier{holder[static_cast<std::size_t>(j)]};
    exposed[static_cast<std::size_t>(frontier[0])] = 1;
    auto& members = item_agents[static_cast<std::size_t>(j)];
    members.push_back(frontier[0]);
    for (std::size_t head = 0; head < frontier.size(); ++head) {
      const AgentId u = frontier[head];
      for (AgentId v : adj[static_cast<std::size_t>(u)]) {
        if (exposed[static_cast<std::size_t>(v)]) continue;
        exposed[static_cast<std::size_t>(v)] = 1;
        if (rng.unit() < spec.accept_density) {
          members.push_back(v);
          frontier.push_back(v);
        }
      }
    }
    std::sort(members.begin(), members.end());
  }

  InstanceData d0;
  d0.n = n;
  d0.item_agents = item_agents;
  d0.edges = edges;
  d0.source = source;
  d0.target = source;
  const Instance base = make_instance(std::move(d0));

  std::vector<ItemId> target;
  if (rng.unit() < 0.5) {
    // Random walk of legal swaps from the source.
    Assignment cur = base.source;
    const std::uint64_t steps =
        static_cast<std::uint64_t>(n) + rng.below(3 * static_cast<std::uint64_t>(n) + 1);
    for (std::uint64_t s = 0; s < steps; ++s) {
      std::vector<SwapMove> moves;
      for (AgentId u = 0; u < n; ++u)
        for (AgentId v : base.adj[static_cast<std::size_t>(u)])
          if (v > u && legal_swap(base, cur, {u, v})) moves.push_back({u, v});
      if (moves.empty()) break;
      cur = apply_swap(base, cur, moves[static_cast<std::size_t>(rng.below(moves.size()))]);
    }
    target = cur.items();
  } else {
    // Independent matching: Kuhn over shuffled preference lists.
    std::vector<std::vector<ItemId>> prefs(static_cast<std::size_t>(n));
    for (AgentId i = 0; i < n; ++i) {
      prefs[static_cast<std::size_t>(i)] = base.agent_items[static_cast<std::size_t>(i)];
      shuffle_vec(prefs[static_cast<std::size_t>(i)], rng);
    }
    std::vector<AgentId> item_agent(static_cast<std::size_t>(n), -1);
    for (AgentId i = 0; i < n; ++i) {
      std::vector<char> item_seen(static_cast<std::size_t>(n), 0);
      if (!augment_prefs(prefs, i, item_seen, item_agent))
        fail(Errc::GenerationFailed, "no independent matching found");
    }
    target.assign(static_cast<std::size_t>(n), -1);
    for (ItemId j = 0; j < n; ++j) target[static_cast<std::size_t>(item_agent[static_cast<std::size_t>(j)])] = j;
  }

  InstanceData d1;
  d1.n = n;
  d1.item_agents = std::move(item_agents);
  d1.edges = std::move(edges);
  d1.source = std::move(source);
  d1.target = std::move(target);
  return make_instance(std::move(d1));
}

PMRInstance gen_pmr(int n, std::uint64_t seed, double density) {
  if (n < 1) fail(Errc::InconsistentConstraints, "side size must be positive");
  check_density(density);
  SplitMix64 rng(seed);

  PMRData d;
  d.left_n = d.right_n = n;
  for (int l = 0; l < n; ++l) {
    d.edges.emplace_back(l, l);
    d.m1.emplace_back(l, l);
  }
  for (int l = 0; l < n; ++l)
    for (int r = 0; r < n; ++r) {
      if (r == l) continue;
      if (rng.unit() < density) d.edges.emplace_back(l, r);
    }

  std::vector<std::vector<char>> has(static_cast<std::size_t>(n),
                                     std::vector<char>(static_cast<std::size_t>(n), 0));
  for (auto [l, r] : d.edges) has[static_cast<std::size_t>(l)][static_cast<std::size_t>(r)] = 1;

  std::vector<ItemId> m(static_cast<std::size_t>(n));
  if (rng.unit() < 0.5) {
    // Exchange walk from the identity matching.
    for (int l = 0; l < n; ++l) m[static_cast<std::size_t>(l)] = l;
    const std::uint64_t steps =
        static_cast<std::uint64_t>(n) + rng.below(3 * static_cast<std::uint64_t>(n) + 1);
    for (std::uint64_t s = 0; s < steps; ++s) {
      std::vector<std::pair<AgentId, AgentId>> options;
      for (AgentId l1 = 0; l1 < n; ++l1)
        for (AgentId l2 = l1 + 1; l2 < n; ++l2) {
          const ItemId r1 = m[static_cast<std::size_t>(l1)], r2 = m[static_cast<std::size_t>(l2)];
          if (has[static_cast<std::size_t>(l1)][static_cast<std::size_t>(r2)] &&
              has[static_cast<std::size_t>(l2)][static_cast<std::size_t>(r1)])
            options.emplace_back(l1, l2);
        }
      if (options.empty()) break;
      auto [l1, l2] = options[static_cast<std::size_t>(rng.below(options.size()))];
      std::swap(m[static_cast<std::size_t>(l1)], m[static_cast<std::size_t>(l2)]);
    }
  } else {
    // Independent matching over shuffled neighbour lists.
    std::vector<std::vector<ItemId>> prefs(static_cast<std::size_t>(n));
    for (int l = 0; l < n; ++l) {
      for (int r = 0; r < n; ++r)
        if (has[static_cast<std::size_t>(l)][static_cast<std::size_t>(r)])
          prefs[static_cast<std::size_t>(l)].push_back(r);
      shuffle_vec(prefs[static_cast<std::size_t>(l)], rng);
    }
    std::vector<AgentId> item_agent(static_cast<std::size_t>(n), -1);
    for (AgentId l = 0; l < n; ++l) {
      std::vector<char> item_seen(static_cast<std::size_t>(n), 0);
      if (!augment_prefs(prefs, l, item_seen, item_agent))
        fail(Errc::GenerationFailed, "no independent matching found");
    }
    for (ItemId r = 0; r < n; ++r) m[static_cast<std::size_t>(item_agent[static_cast<std::size_t>(r)])] = r;
  }
  for (int l = 0; l < n; ++l) d.m2.emplace_back(l, m[static_cast<std::size_t>(l)]);
  return make_pmr(std::move(d));
}

}  // namespace swapreach
