#pragma once

#include <map>
#include <string>
#include <vector>

#include "popmatch/house.hpp"
#include "popmatch/instance.hpp"

namespace popmatch {

struct ChainStep {
  int index = 0;                   // t
  std::vector<Vertex> remaining;   // unprocessed agents before this step
  Vertex chosen = kUnmatched;      // agent appended to the chain
  bool edge_added = false;
  int target_matching = 0;         // 1 or 2 when an edge was added
};

struct ChainTrace {
  std::vector<Vertex> sequence;
  std::vector<ChainStep> steps;
};

struct StrictRoommatesResult {
  WinningSet winning_set;
  ChainTrace trace;
};

// Greedy chain solver for roommates instances with equal weights and strict
// preferences. Output is a winning set of at most two matchings whose edges
// form vertex-disjoint paths alternating between the two.
StrictRoommatesResult solve_roommates_strict(const Instance& instance);

// House-allocation view of a roommates or marriage instance: one proposing
// copy and one house copy per agent, weights and preference tiers carried
// over. Agent i of the base maps to agent i and item i of the view.
struct AuxiliaryInstance {
  Instance house;

  Vertex plus_of(Vertex base_agent) const { return base_agent; }
  Vertex minus_of(Vertex base_agent) const {
    return house.agent_count() + base_agent;
  }
  Vertex base_of_item(Vertex item) const { return item - house.agent_count(); }
};

AuxiliaryInstance build_auxiliary(const Instance& instance);

// Proper edge coloring with colors {1,2,3}. Requires maximum degree <= 3 and
// at most one cycle per connected component.
struct EdgeColoring {
  std::map<Edge, int> color;
};

EdgeColoring three_edge_color(const std::vector<Edge>& edges);

struct GeneralRoommatesRun {
  WinningSet winning_set;
  std::vector<Edge> merged_edges;  // deduplicated, canonical order
  EdgeColoring coloring;
  HouseRunTrace auxiliary_trace;
};

// General solver (weights and ties allowed) for roommates and marriage
// instances: solves the house-allocation view, folds each house copy back
// onto its agent, and splits the folded edges by a proper 3-edge-coloring.
// At most three matchings.
GeneralRoommatesRun solve_roommates_general_run(const Instance& instance);
WinningSet solve_roommates_general(const Instance& instance);

// Deferred acceptance with the left side proposing. Requires a marriage
// instance with strict preferences and equal weights; returns the
// left-optimal stable matching.
Matching gale_shapley(const Instance& instance);

// Marriage dispatcher: stable matching as a singleton when preferences are
// strict and weights equal, otherwise the general solver.
WinningSet solve_marriage(const Instance& instance);

// Roommates dispatcher: greedy chain solver when preferences are strict and
// weights equal, otherwise the general solver.
WinningSet solve_roommates(const Instance& instance);

}  // namespace popmatch
