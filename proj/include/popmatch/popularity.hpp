#pragma once

#include <limits>
#include <vector>

#include "popmatch/instance.hpp"

namespace popmatch {

enum class PartnerComparison { FirstBetter, SecondBetter, Equal };
enum class Vote { PrefersFirst, PrefersSecond, Indifferent };

// Being unmatched is strictly worse than any acceptable partner.
inline constexpr int kUnmatchedLevel = std::numeric_limits<int>::max();

struct PopularityTally {
  Rational weight_for;       // total weight of agents voting for `first`
  Rational weight_against;   // total weight of agents voting for `second`
  std::vector<Vote> classification;  // indexed by agent id
};

// Compares two potential partners (or kUnmatched) from one agent's point of
// view. Total preorder: any two arguments compare.
PartnerComparison compare_partners(const Instance& instance, Vertex agent,
                                   Vertex first, Vertex second);

// f_agent(available): the best tier of the agent's preferences restricted to
// `available`, sorted by vertex id. Empty iff no acceptable partner is
// available.
std::vector<Vertex> favorites(const Instance& instance, Vertex agent,
                              const std::vector<Vertex>& available);

// Tier rank of `partner` for `agent`, with kUnmatched mapping to
// kUnmatchedLevel. Lower is better.
int preference_level(const Instance& instance, Vertex agent, Vertex partner);

// Weighted vote between a committee of matchings and a single alternative:
// an agent votes for the committee iff its best match across the members
// beats its match in `second`.
PopularityTally phi(const Instance& instance, const WinningSet& first,
                    const Matching& second);
PopularityTally phi(const Instance& instance, const Matching& first,
                    const Matching& second);

bool is_at_least_as_popular(const Instance& instance, const WinningSet& first,
                            const Matching& second);
bool is_at_least_as_popular(const Instance& instance, const Matching& first,
                            const Matching& second);

}  // namespace popmatch
