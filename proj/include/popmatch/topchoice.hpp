#pragma once

#include <optional>
#include <vector>

#include "popmatch/instance.hpp"

namespace popmatch {

// Edge set in which every listed agent has degree exactly 1 and every house
// degree at most 2. Edges are (agent, house) pairs sorted by agent id.
struct OneTwoMatching {
  std::vector<Edge> edges;

  bool operator==(const OneTwoMatching&) const = default;
};

// Finds an assignment of every agent in `agents` to one of its favourite
// houses within `houses`, no house taking more than two agents; nullopt when
// none exists. Deterministic: agents are processed in the given order,
// candidate houses in instance item order, so repeated runs yield the same
// assignment. Capacity-2 feasibility by augmenting paths over favourite
// edges only.
std::optional<OneTwoMatching> find_top_choice_12(
    const Instance& instance, const std::vector<Vertex>& agents,
    const std::vector<Vertex>& houses);

// Largest k such that the first k agents of `ordered_agents` admit such an
// assignment. Requires every listed agent to have a nonempty favourites set
// in `houses`; computed by adding agents one at a time and augmenting.
int max_top_choice_prefix(const Instance& instance,
                          const std::vector<Vertex>& ordered_agents,
                          const std::vector<Vertex>& houses);

// Splits a (1,2)-assignment into two disjoint matchings covering it: at each
// degree-2 house the lower-indexed agent's edge goes to the first matching,
// the other to the second; degree-1 edges go to the first.
std::pair<Matching, Matching> decompose_12(const OneTwoMatching& m);

}  // namespace popmatch
