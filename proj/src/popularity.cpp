#include "popmatch/popularity.hpp"

#include <algorithm>

namespace popmatch {

namespace {

int level_or_throw(const Instance& instance, Vertex agent, Vertex partner) {
  if (partner == kUnmatched) return kUnmatchedLevel;
  return instance.tier_of(agent, partner);
}

// Per-agent achieved preference level under one matching.
std::vector<int> matching_levels(const Instance& instance, const Matching& m) {
  instance.check_matching(m);
  std::vector<int> level(instance.agent_count(), kUnmatchedLevel);
  for (const auto& [u, v] : m.edges()) {
    if (instance.is_agent(u)) level[u] = instance.tier_of(u, v);
    if (instance.is_agent(v)) level[v] = instance.tier_of(v, u);
  }
  return level;
}

// Best level each agent reaches across the members of a winning set.
std::vector<int> best_levels(const Instance& instance, const WinningSet& ws) {
  if (ws.matchings.empty()) {
    throw ValidationError("winning set must contain at least one matching");
  }
  std::vector<int> best(instance.agent_count(), kUnmatchedLevel);
  for (const Matching& m : ws.matchings) {
    std::vector<int> level = matching_levels(instance, m);
    for (Vertex a = 0; a < instance.agent_count(); ++a) {
      best[a] = std::min(best[a], level[a]);
    }
  }
  return best;
}

PopularityTally tally_from_levels(const Instance& instance,
                                  const std::vector<int>& first,
                                  const std::vector<int>& second) {
  PopularityTally tally;
  tally.weight_for = 0;
  tally.weight_against = 0;
  tally.classification.assign(instance.agent_count(), Vote::Indifferent);
  for (Vertex a = 0; a < instance.agent_count(); ++a) {
    if (first[a] < second[a]) {
      tally.classification[a] = Vote::PrefersFirst;
      tally.weight_for += instance.weight(a);
    } else if (second[a] < first[a]) {
      tally.classification[a] = Vote::PrefersSecond;
      tally.weight_against += instance.weight(a);
    }
  }
  return tally;
}

}  // namespace

PartnerComparison compare_partners(const Instance& instance, Vertex agent,
                                   Vertex first, Vertex second) {
  if (!instance.is_agent(agent)) throw ValidationError("unknown agent");
  int a = level_or_throw(instance, agent, first);
  int b = level_or_throw(instance, agent, second);
  if (a < b) return PartnerComparison::FirstBetter;
  if (b < a) return PartnerComparison::SecondBetter;
  return PartnerComparison::Equal;
}

std::vector<Vertex> favorites(const Instance& instance, Vertex agent,
                              const std::vector<Vertex>& available) {
  if (!instance.is_agent(agent)) throw ValidationError("unknown agent");
  std::vector<char> in(instance.vertex_count(), 0);
  for (Vertex v : available) {
    if (v >= 0 && v < instance.vertex_count()) in[v] = 1;
  }
  for (const auto& tier : instance.preferences(agent).tiers) {
    std::vector<Vertex> hits;
    for (Vertex p : tier) {
      if (in[p]) hits.push_back(p);
    }
    if (!hits.empty()) {
      std::sort(hits.begin(), hits.end());
      return hits;
    }
  }
  return {};
}

int preference_level(const Instance& instance, Vertex agent, Vertex partner) {
  if (!instance.is_agent(agent)) throw ValidationError("unknown agent");
  return level_or_throw(instance, agent, partner);
}

PopularityTally phi(const Instance& instance, const WinningSet& first,
                    const Matching& second) {
  return tally_from_levels(instance, best_levels(instance, first),
                           matching_levels(instance, second));
}

PopularityTally phi(const Instance& instance, const Matching& first,
                    const Matching& second) {
  return tally_from_levels(instance, matching_levels(instance, first),
                           matching_levels(instance, second));
}

bool is_at_least_as_popular(const Instance& instance, const WinningSet& first,
                            const Matching& second) {
  PopularityTally t = phi(instance, first, second);
  return t.weight_for >= t.weight_against;
}

bool is_at_least_as_popular(const Instance& instance, const Matching& first,
                            const Matching& second) {
  PopularityTally t = phi(instance, first, second);
  return t.weight_for >= t.weight_against;
}

}  // namespace popmatch
