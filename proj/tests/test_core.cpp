#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "popmatch/instances.hpp"
#include "popmatch/oracle.hpp"
#include "popmatch/popularity.hpp"
#include "test_support.hpp"

using namespace popmatch;
using test_support::from_text;

namespace {

// house_lower vertex ids: a=0 b=1 c=2 x=3 y=4
constexpr Vertex A = 0, B = 1, C = 2, X = 3, Y = 4;

Matching m(std::vector<Edge> edges) { return Matching(std::move(edges)); }

}  // namespace

TEST_CASE("compare_partners orders matched above unmatched") {
  Instance inst = gadget("house_lower");
  CHECK(compare_partners(inst, A, X, kUnmatched) ==
        PartnerComparison::FirstBetter);
  CHECK(compare_partners(inst, A, kUnmatched, X) ==
        PartnerComparison::SecondBetter);
  CHECK(compare_partners(inst, A, kUnmatched, kUnmatched) ==
        PartnerComparison::Equal);
}

TEST_CASE("compare_partners follows strict tiers") {
  Instance inst = gadget("house_lower");
  CHECK(compare_partners(inst, A, X, Y) == PartnerComparison::FirstBetter);
  CHECK(compare_partners(inst, B, Y, X) == PartnerComparison::SecondBetter);
}

TEST_CASE("compare_partners treats tied partners as equal") {
  Instance inst = from_text(
      "problem: house\n"
      "agent i\n"
      "item x\n"
      "item y\n"
      "pref i: (x y)\n");
  CHECK(compare_partners(inst, 0, 1, 2) == PartnerComparison::Equal);
}

TEST_CASE("compare_partners rejects bad arguments") {
  Instance inst = gadget("house_lower");
  CHECK_THROWS_AS(compare_partners(inst, 99, X, Y), ValidationError);
  Instance narrow = from_text(
      "problem: house\n"
      "agent a\n"
      "item x\n"
      "item y\n"
      "pref a: x\n");
  // y (vertex 2) is not acceptable to a
  CHECK_THROWS_AS(compare_partners(narrow, 0, 1, 2), ValidationError);
}

TEST_CASE("favorites picks the best available tier") {
  Instance inst = gadget("house_lower");
  CHECK(favorites(inst, A, {X, Y}) == std::vector<Vertex>{X});
  CHECK(favorites(inst, A, {Y}) == std::vector<Vertex>{Y});
  CHECK(favorites(inst, A, {}) == std::vector<Vertex>{});
}

TEST_CASE("favorites returns a whole tied tier") {
  Instance inst = from_text(
      "problem: house\n"
      "agent i\n"
      "item x\n"
      "item y\n"
      "item z\n"
      "pref i: (x y) z\n");
  CHECK(favorites(inst, 0, {1, 2, 3}) == std::vector<Vertex>{1, 2});
  CHECK(favorites(inst, 0, {3}) == std::vector<Vertex>{3});
}

TEST_CASE("phi of a matching against itself is all zeros") {
  Instance inst = gadget("house_lower");
  Matching mm = m({{A, X}, {B, Y}});
  PopularityTally t = phi(inst, mm, mm);
  CHECK(t.weight_for == 0);
  CHECK(t.weight_against == 0);
  for (Vote v : t.classification) CHECK(v == Vote::Indifferent);
}

TEST_CASE("phi counts the strictly happier voters on each side") {
  Instance inst = gadget("house_lower");
  Matching old_m = m({{A, X}, {B, Y}});
  Matching new_m = m({{B, X}, {C, Y}});
  PopularityTally t = phi(inst, new_m, old_m);
  CHECK(t.weight_for == 2);     // b and c
  CHECK(t.weight_against == 1); // a
  CHECK(t.classification[A] == Vote::PrefersSecond);
  CHECK(t.classification[B] == Vote::PrefersFirst);
  CHECK(t.classification[C] == Vote::PrefersFirst);
}

TEST_CASE("phi against a committee uses each agent's best member") {
  Instance inst = gadget("house_lower");
  WinningSet ws;
  ws.matchings.push_back(m({{A, X}, {C, Y}}));
  ws.matchings.push_back(m({{B, X}}));
  Matching alt = m({{B, X}, {C, Y}});
  PopularityTally t = phi(inst, ws, alt);
  CHECK(t.weight_for == 1);  // only a does better inside the committee
  CHECK(t.weight_against == 0);
}

TEST_CASE("phi rejects non-acceptable edges") {
  Instance inst = from_text(
      "problem: house\n"
      "agent a\n"
      "agent b\n"
      "item x\n"
      "pref a: x\n");
  CHECK_THROWS_AS(phi(inst, m({{1, 2}}), m({})), ValidationError);
}

TEST_CASE("is_at_least_as_popular on the lower-bound gadget") {
  Instance inst = gadget("house_lower");
  Matching mm = m({{A, X}, {B, Y}});
  CHECK(is_at_least_as_popular(inst, mm, mm));
  CHECK_FALSE(is_at_least_as_popular(inst, mm, m({{B, X}, {C, Y}})));
}

TEST_CASE("the house solver output survives every alternative") {
  Instance inst = gadget("house_lower");
  WinningSet ws;
  ws.matchings.push_back(m({{A, X}, {C, Y}}));
  ws.matchings.push_back(m({{B, X}}));
  for (const Matching& alt : enumerate_matchings(inst)) {
    CHECK(is_at_least_as_popular(inst, ws, alt));
  }
}

TEST_CASE("vote partition and weight bounds hold on random instances") {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    GeneratorConfig config;
    config.kind = seed % 2 == 0 ? Kind::House : Kind::Roommates;
    config.num_agents = 4;
    config.num_items = 3;
    config.ties_enabled = seed % 3 == 0;
    config.weight_min = 0;
    config.weight_max = 4;
    config.density = 0.8;
    config.seed = seed;
    Instance inst = random_instance(config);
    std::vector<Matching> all = enumerate_matchings(inst);
    Rational total = 0;
    for (Vertex a = 0; a < inst.agent_count(); ++a) total += inst.weight(a);
    for (std::size_t i = 0; i < all.size(); i += 3) {
      for (std::size_t j = 0; j < all.size(); j += 4) {
        PopularityTally t = phi(inst, all[i], all[j]);
        CHECK(t.weight_for + t.weight_against <= total);
        // zero-weight voters never move a sum
        Rational manual_for = 0, manual_against = 0;
        for (Vertex a = 0; a < inst.agent_count(); ++a) {
          if (t.classification[a] == Vote::PrefersFirst) {
            manual_for += inst.weight(a);
          } else if (t.classification[a] == Vote::PrefersSecond) {
            manual_against += inst.weight(a);
          }
        }
        CHECK(t.weight_for == manual_for);
        CHECK(t.weight_against == manual_against);
      }
    }
    for (const Matching& mm : all) {
      PopularityTally self = phi(inst, mm, mm);
      CHECK(self.weight_for == 0);
      CHECK(self.weight_against == 0);
    }
  }
}

TEST_CASE("scaling all weights preserves every verdict") {
  for (std::uint64_t seed = 100; seed < 106; ++seed) {
    GeneratorConfig config;
    config.kind = Kind::House;
    config.num_agents = 4;
    config.num_items = 3;
    config.ties_enabled = seed % 2 == 0;
    config.weight_min = 0;
    config.weight_max = 3;
    config.density = 0.9;
    config.seed = seed;
    Instance inst = random_instance(config);

    std::vector<AgentSpec> scaled_agents;
    std::vector<PreferenceOrder> prefs;
    for (Vertex a = 0; a < inst.agent_count(); ++a) {
      AgentSpec spec = inst.agent(a);
      spec.weight *= Rational(7, 3);
      scaled_agents.push_back(std::move(spec));
      prefs.push_back(inst.preferences(a));
    }
    std::vector<std::string> items;
    for (Vertex v = inst.agent_count(); v < inst.vertex_count(); ++v) {
      items.push_back(inst.name(v));
    }
    Instance scaled(Kind::House, std::move(scaled_agents), std::move(items),
                    std::move(prefs));

    std::vector<Matching> all = enumerate_matchings(inst);
    for (std::size_t i = 0; i < all.size(); i += 2) {
      for (std::size_t j = 0; j < all.size(); j += 3) {
        CHECK(is_at_least_as_popular(inst, all[i], all[j]) ==
              is_at_least_as_popular(scaled, all[i], all[j]));
      }
    }
  }
}

TEST_CASE("compare_partners is a total preorder on sampled triples") {
  for (std::uint64_t seed = 200; seed < 208; ++seed) {
    GeneratorConfig config;
    config.kind = Kind::Roommates;
    config.num_agents = 5;
    config.ties_enabled = true;
    config.density = 0.9;
    config.seed = seed;
    Instance inst = random_instance(config);
    for (Vertex a = 0; a < inst.agent_count(); ++a) {
      std::vector<Vertex> pool = inst.acceptable(a);
      pool.push_back(kUnmatched);
      auto leq = [&](Vertex p, Vertex q) {
        return compare_partners(inst, a, p, q) !=
               PartnerComparison::SecondBetter;
      };
      for (Vertex p : pool) {
        for (Vertex q : pool) {
          // completeness: p <= q or q <= p
          CHECK((leq(p, q) || leq(q, p)));
          for (Vertex r : pool) {
            if (leq(p, q) && leq(q, r)) CHECK(leq(p, r));
          }
        }
      }
    }
  }
}
