#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <map>

#include "popmatch/instances.hpp"
#include "popmatch/popularity.hpp"
#include "popmatch/topchoice.hpp"
#include "test_support.hpp"

using namespace popmatch;
using test_support::from_text;

namespace {

constexpr Vertex A = 0, B = 1, C = 2, X = 3, Y = 4;

// Exhaustive feasibility oracle: try every assignment of each agent to one
// of its favourite houses and accept when no house holds three agents.
bool feasible_by_enumeration(const Instance& inst,
                             const std::vector<Vertex>& agents,
                             const std::vector<Vertex>& houses) {
  std::vector<std::vector<Vertex>> choices;
  for (Vertex a : agents) {
    choices.push_back(favorites(inst, a, houses));
    if (choices.back().empty()) return false;
  }
  std::vector<std::size_t> pick(agents.size(), 0);
  while (true) {
    std::map<Vertex, int> load;
    bool ok = true;
    for (std::size_t i = 0; i < agents.size(); ++i) {
      if (++load[choices[i][pick[i]]] > 2) {
        ok = false;
        break;
      }
    }
    if (ok) return true;
    std::size_t pos = 0;
    while (pos < pick.size() && ++pick[pos] == choices[pos].size()) {
      pick[pos] = 0;
      ++pos;
    }
    if (pos == pick.size()) return false;
  }
}

}  // namespace

TEST_CASE("two agents share their favourite house under capacity 2") {
  Instance inst = gadget("house_lower");
  auto result = find_top_choice_12(inst, {A, B}, {X, Y});
  REQUIRE(result.has_value());
  CHECK(result->edges == std::vector<Edge>{{A, X}, {B, X}});
}

TEST_CASE("three agents chasing one favourite house are infeasible") {
  Instance inst = gadget("house_lower");
  CHECK_FALSE(find_top_choice_12(inst, {A, B, C}, {X, Y}).has_value());
}

TEST_CASE("a tied favourite resolves to the first house in item order") {
  Instance inst = from_text(
      "problem: house\n"
      "agent i\n"
      "item x\n"
      "item y\n"
      "pref i: (x y)\n");
  auto result = find_top_choice_12(inst, {0}, {1, 2});
  REQUIRE(result.has_value());
  CHECK(result->edges == std::vector<Edge>{{0, 1}});
  CHECK(feasible_by_enumeration(inst, {0}, {1, 2}));
}

TEST_CASE("find_top_choice_12 rejects unknown identifiers") {
  Instance inst = gadget("house_lower");
  CHECK_THROWS_AS(find_top_choice_12(inst, {A}, {99}), ValidationError);
  CHECK_THROWS_AS(find_top_choice_12(inst, {99}, {X}), ValidationError);
}

TEST_CASE("feasibility agrees with the enumeration oracle on small sets") {
  std::vector<Instance> instances;
  instances.push_back(gadget("house_lower"));
  for (std::uint64_t seed = 0; seed < 12; ++seed) {
    GeneratorConfig config;
    config.kind = Kind::House;
    config.num_agents = 4;
    config.num_items = 3;
    config.ties_enabled = seed % 2 == 0;
    config.density = 0.8;
    config.seed = seed;
    instances.push_back(random_instance(config));
  }
  for (const Instance& inst : instances) {
    int n = inst.agent_count();
    int m = inst.item_count();
    for (int agent_bits = 0; agent_bits < (1 << n); ++agent_bits) {
      for (int house_bits = 0; house_bits < (1 << m); ++house_bits) {
        std::vector<Vertex> agents, houses;
        for (int a = 0; a < n; ++a) {
          if (agent_bits & (1 << a)) agents.push_back(a);
        }
        for (int h = 0; h < m; ++h) {
          if (house_bits & (1 << h)) houses.push_back(n + h);
        }
        bool expected = feasible_by_enumeration(inst, agents, houses);
        auto got = find_top_choice_12(inst, agents, houses);
        CHECK(got.has_value() == expected);
        if (got.has_value()) {
          // every agent placed on a favourite, capacity respected
          std::map<Vertex, int> load;
          REQUIRE(got->edges.size() == agents.size());
          for (const auto& [agent, house] : got->edges) {
            std::vector<Vertex> favs = favorites(inst, agent, houses);
            CHECK(std::find(favs.begin(), favs.end(), house) != favs.end());
            CHECK(++load[house] <= 2);
          }
        }
      }
    }
  }
}

TEST_CASE("feasibility is preserved under taking subsets") {
  for (std::uint64_t seed = 50; seed < 62; ++seed) {
    GeneratorConfig config;
    config.kind = Kind::House;
    config.num_agents = 5;
    config.num_items = 3;
    config.ties_enabled = seed % 2 == 1;
    config.density = 0.9;
    config.seed = seed;
    Instance inst = random_instance(config);
    std::vector<Vertex> all_houses;
    for (int h = 0; h < inst.item_count(); ++h) {
      all_houses.push_back(inst.agent_count() + h);
    }
    std::vector<Vertex> agents;
    for (Vertex a = 0; a < inst.agent_count(); ++a) {
      if (!favorites(inst, a, all_houses).empty()) agents.push_back(a);
    }
    if (!find_top_choice_12(inst, agents, all_houses).has_value()) continue;
    int n = static_cast<int>(agents.size());
    for (int bits = 0; bits < (1 << n); ++bits) {
      std::vector<Vertex> subset;
      for (int i = 0; i < n; ++i) {
        if (bits & (1 << i)) subset.push_back(agents[i]);
      }
      CHECK(find_top_choice_12(inst, subset, all_houses).has_value());
    }
  }
}

TEST_CASE("max_top_choice_prefix finds the step point") {
  Instance inst = gadget("house_lower");
  CHECK(max_top_choice_prefix(inst, {A, B, C}, {X, Y}) == 2);
}

TEST_CASE("distinct favourites admit the whole prefix") {
  Instance inst = from_text(
      "problem: house\n"
      "agent a\n"
      "agent b\n"
      "item x\n"
      "item y\n"
      "pref a: x y\n"
      "pref b: y x\n");
  CHECK(max_top_choice_prefix(inst, {0, 1}, {2, 3}) == 2);
}

TEST_CASE("max_top_choice_prefix requires placeable agents") {
  Instance inst = gadget("house_lower");
  CHECK_THROWS_AS(max_top_choice_prefix(inst, {A}, {}), ValidationError);
  CHECK(max_top_choice_prefix(inst, {A}, {X}) == 1);
}

TEST_CASE("max_top_choice_prefix equals the largest feasible prefix") {
  for (std::uint64_t seed = 80; seed < 92; ++seed) {
    GeneratorConfig config;
    config.kind = Kind::House;
    config.num_agents = 4;
    config.num_items = 2;
    config.ties_enabled = seed % 2 == 0;
    config.density = 1.0;
    config.seed = seed;
    Instance inst = random_instance(config);
    std::vector<Vertex> houses;
    for (int h = 0; h < inst.item_count(); ++h) {
      houses.push_back(inst.agent_count() + h);
    }
    std::vector<Vertex> order;
    for (Vertex a = 0; a < inst.agent_count(); ++a) order.push_back(a);
    int k = max_top_choice_prefix(inst, order, houses);
    for (int len = 1; len <= inst.agent_count(); ++len) {
      std::vector<Vertex> prefix(order.begin(), order.begin() + len);
      CHECK(feasible_by_enumeration(inst, prefix, houses) == (len <= k));
    }
  }
}

TEST_CASE("decompose_12 splits shared houses by agent index") {
  OneTwoMatching input;
  input.edges = {{A, X}, {B, X}, {C, Y}};
  auto [first, second] = decompose_12(input);
  CHECK(first.edges() == std::vector<Edge>{{A, X}, {C, Y}});
  CHECK(second.edges() == std::vector<Edge>{{B, X}});
}

TEST_CASE("decompose_12 handles empty and single-edge inputs") {
  auto [e1, e2] = decompose_12(OneTwoMatching{});
  CHECK(e1.empty());
  CHECK(e2.empty());
  OneTwoMatching single;
  single.edges = {{A, X}};
  auto [s1, s2] = decompose_12(single);
  CHECK(s1.edges() == std::vector<Edge>{{A, X}});
  CHECK(s2.empty());
}

TEST_CASE("decompose_12 rejects degree violations") {
  OneTwoMatching overfull;
  overfull.edges = {{A, X}, {B, X}, {C, X}};
  CHECK_THROWS_AS(decompose_12(overfull), ValidationError);
  OneTwoMatching doubled;
  doubled.edges = {{A, X}, {A, Y}};
  CHECK_THROWS_AS(decompose_12(doubled), ValidationError);
}

TEST_CASE("decompose_12 yields disjoint matchings covering the input") {
  for (std::uint64_t seed = 120; seed < 132; ++seed) {
    GeneratorConfig config;
    config.kind = Kind::House;
    config.num_agents = 6;
    config.num_items = 4;
    config.ties_enabled = seed % 2 == 0;
    config.density = 0.7;
    config.seed = seed;
    Instance inst = random_instance(config);
    std::vector<Vertex> houses;
    for (int h = 0; h < inst.item_count(); ++h) {
      houses.push_back(inst.agent_count() + h);
    }
    std::vector<Vertex> agents;
    for (Vertex a = 0; a < inst.agent_count(); ++a) {
      if (!favorites(inst, a, houses).empty()) agents.push_back(a);
    }
    auto assignment = find_top_choice_12(inst, agents, houses);
    if (!assignment.has_value()) continue;
    auto [first, second] = decompose_12(*assignment);
    std::vector<Edge> together = first.edges();
    together.insert(together.end(), second.edges().begin(),
                    second.edges().end());
    std::sort(together.begin(), together.end());
    std::vector<Edge> expected = assignment->edges;
    std::sort(expected.begin(), expected.end());
    CHECK(together == expected);
    CHECK(first.size() + second.size() == assignment->edges.size());
  }
}
