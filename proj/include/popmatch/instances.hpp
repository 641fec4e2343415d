#pragma once

#include <cstdint>
#include <string>

#include "popmatch/instance.hpp"

namespace popmatch {

// Named fixture instances:
//   house_lower             three agents chasing two houses, all preferring
//                           the same one; no single matching is popular
//   roommates_lower         three agents with cyclic strict preferences
//   roommates_lower_doubled two disjoint copies of roommates_lower
Instance gadget(const std::string& name);

// Rebuilds a strict unweighted house instance as a weighted marriage
// instance: agents become weight-1 men, items become weight-0 women who are
// indifferent among their acceptable men. A matching is popular in the
// output iff it is popular in the input.
Instance house_to_weighted_marriage(const Instance& instance);

// Rebuilds a strict unweighted house instance as an unweighted marriage
// instance with ties, padding both sides with indifferent dummies so that
// the original agents' votes alone decide popularity.
Instance house_to_ties_marriage(const Instance& instance);

struct GeneratorConfig {
  Kind kind = Kind::House;
  int num_agents = 0;        // house/roommates; left side for marriage
  int num_agents_right = 0;  // marriage only
  int num_items = 0;         // house only
  bool ties_enabled = false;
  int weight_min = 1;
  int weight_max = 1;
  double density = 1.0;      // acceptability probability per potential edge
  std::uint64_t seed = 0;
};

// Seed-deterministic random instance: edges sampled per pair at `density`
// (mutual by construction for two-sided kinds), integer weights uniform in
// [weight_min, weight_max], a uniform random permutation per agent, and,
// with ties enabled, adjacent entries merged into a tier with probability
// 1/2 per boundary.
Instance random_instance(const GeneratorConfig& config);

}  // namespace popmatch
