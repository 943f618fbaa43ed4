#include "doctest.h"

#include <vector>

#include "helpers.hpp"
#include "swapreach/core.hpp"

using namespace swapreach;
using test::load_fixture;

namespace {

InstanceData tiny_pair() {
  InstanceData d;
  d.n = 2;
  d.item_agents = {{0, 1}, {0, 1}};
  d.edges = {{0, 1}};
  d.source = {0, 1};
  d.target = {1, 0};
  return d;
}

}  // namespace

TEST_CASE("fixture e1 parses into the expected structure") {
  // ids follow sorted name order: agents 1,2,3 -> 0,1,2; items x,y,z -> 0,1,2
  const Instance inst = load_fixture("e1.txt");
  CHECK(inst.n == 3);
  CHECK(inst.item_agents[0] == std::vector<AgentId>{0, 1});
  CHECK(inst.item_agents[1] == std::vector<AgentId>{0, 1, 2});
  CHECK(inst.item_agents[2] == std::vector<AgentId>{1, 2});
  CHECK(inst.agent_items[0] == std::vector<ItemId>{0, 1});
  CHECK(inst.has_edge(0, 1));
  CHECK(inst.has_edge(1, 0));
  CHECK_FALSE(inst.has_edge(0, 2));
  CHECK(inst.edge_count() == 2);
  CHECK(inst.is_tree());
  CHECK(inst.source.items() == std::vector<ItemId>{0, 1, 2});
  CHECK(inst.target.items() == std::vector<ItemId>{1, 0, 2});
  CHECK(inst.agent_name(0) == "1");
  CHECK(inst.item_name(2) == "z");
}

TEST_CASE("make_instance rejects malformed data with the right code") {
  auto code_of = [](InstanceData d) {
    try {
      make_instance(std::move(d));
    } catch (const Error& e) {
      return e.code();
    }
    return Errc::Internal;
  };

  auto d = tiny_pair();
  d.item_agents.pop_back();
  CHECK(code_of(d) == Errc::SizeMismatch);

  d = tiny_pair();
  d.source = {0, 0};
  CHECK(code_of(d) == Errc::NotBijection);

  d = tiny_pair();
  d.source = {0};
  CHECK(code_of(d) == Errc::SizeMismatch);

  d = tiny_pair();
  d.edges = {{0, 2}};
  CHECK(code_of(d) == Errc::BadEdge);

  d = tiny_pair();
  d.edges = {{1, 1}};
  CHECK(code_of(d) == Errc::BadEdge);

  d = tiny_pair();
  d.edges = {{0, 1}, {1, 0}};
  CHECK(code_of(d) == Errc::DuplicateEdge);

  d = tiny_pair();
  d.item_agents = {{0, 1}, {0}};  // agent 1 holds item 1 in source but rejects it
  CHECK(code_of(d) == Errc::UnacceptableItem);

  d = tiny_pair();
  d.item_agents = {{0, 1}, {0, 7}};
  CHECK(code_of(d) == Errc::SizeMismatch);
}

TEST_CASE("assignment inverse stays consistent under exchange") {
  const Assignment a = Assignment::from_items({2, 0, 1});
  CHECK(a.item_of(0) == 2);
  CHECK(a.agent_of(2) == 0);
  const Assignment b = a.exchanged(0, 2);
  CHECK(b.item_of(0) == 1);
  CHECK(b.item_of(2) == 2);
  CHECK(b.agent_of(2) == 2);
  CHECK(b.exchanged(0, 2) == a);
  CHECK_THROWS_AS(Assignment::from_items({0, 0, 1}), Error);
  CHECK_THROWS_AS(Assignment::from_items({0, 3, 1}), Error);
}

TEST_CASE("legal_swap needs an edge and mutual acceptability") {
  const Instance e1 = load_fixture("e1.txt");
  CHECK(legal_swap(e1, e1.source, {0, 1}));
  CHECK(legal_swap(e1, e1.source, {1, 0}));
  CHECK_FALSE(legal_swap(e1, e1.source, {0, 2}));  // no edge
  CHECK_FALSE(legal_swap(e1, e1.source, {0, 0}));
  CHECK_FALSE(legal_swap(e1, e1.source, {-1, 1}));

  const Instance e3 = load_fixture("e3.txt");
  // agent 0 does not accept w, held by its only neighbour
  CHECK_FALSE(legal_swap(e3, e3.source, {0, 1}));
  CHECK_FALSE(legal_swap(e3, e3.source, {1, 2}));
}

TEST_CASE("apply_swap round-trips and rejects illegal moves") {
  const Instance e1 = load_fixture("e1.txt");
  const Assignment mid = apply_swap(e1, e1.source, {0, 1});
  CHECK(mid == e1.target);
  CHECK(apply_swap(e1, mid, {0, 1}) == e1.source);
  CHECK_THROWS_AS(apply_swap(e1, e1.source, {0, 2}), Error);
}

TEST_CASE("replay_ok validates every step and the endpoint") {
  const Instance e1 = load_fixture("e1.txt");
  ReconfigSequence seq{{{0, 1}}, e1.source, e1.target};
  CHECK(replay_ok(e1, seq));
  seq.end = e1.source;
  CHECK_FALSE(replay_ok(e1, seq));
  seq = {{{0, 2}}, e1.source, e1.target};
  CHECK_FALSE(replay_ok(e1, seq));
  seq = {{}, e1.source, e1.source};
  CHECK(replay_ok(e1, seq));
}

TEST_CASE("restrict_instance keeps structure and names") {
  const Instance e2 = load_fixture("e2.txt");
  const SubInstance sub = restrict_instance(e2, {2, 3}, {2, 3}, e2.source, e2.target);
  CHECK(sub.inst.n == 2);
  CHECK(sub.agents == std::vector<AgentId>{2, 3});
  CHECK(sub.items == std::vector<ItemId>{2, 3});
  CHECK(sub.inst.item_agents[0] == std::vector<AgentId>{0, 1});
  CHECK(sub.inst.has_edge(0, 1));
  CHECK(sub.inst.source.items() == std::vector<ItemId>{0, 1});
  CHECK(sub.inst.target.items() == std::vector<ItemId>{1, 0});
  CHECK(sub.inst.agent_name(0) == "3");
  CHECK(sub.inst.item_name(0) == "y");

  // an assignment that leaves the item subset is an internal error
  CHECK_THROWS_AS(restrict_instance(e2, {0, 1}, {2, 3}, e2.source, e2.target), Error);
}
