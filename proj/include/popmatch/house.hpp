#pragma once

#include <optional>
#include <string>
#include <vector>

#include "popmatch/instance.hpp"
#include "popmatch/topchoice.hpp"

namespace popmatch {

struct PruneEvent {
  Vertex agent;
  bool removed;

  bool operator==(const PruneEvent&) const = default;
};

// One round of the house solver. `agents`/`houses` are the working sets
// after unplaceable agents were dropped; `order` is the weight-descending
// relabeling the round works with.
struct HouseStep {
  int index = 0;                      // 1-based round number
  std::vector<Vertex> dropped;        // agents with no acceptable house left
  std::vector<Vertex> agents;         // working agent set, by id
  std::vector<Vertex> houses;         // available houses, by id
  std::vector<Vertex> order;          // agents by weight desc, id asc
  int feasible_prefix = 0;            // largest feasible prefix length
  std::vector<Vertex> top_block;      // the prefix the round starts from
  std::vector<PruneEvent> prune_events;
  std::vector<Vertex> matched_agents;     // agents assigned this round
  std::optional<Rational> cutoff_weight;  // weight of the first excluded agent
  OneTwoMatching round_assignment;
  std::vector<Vertex> closed_houses;      // houses filled to capacity 2
  std::vector<Edge> accumulated;          // all assignment edges so far
};

struct HouseRunTrace {
  std::vector<HouseStep> steps;
  int final_step = 0;
};

struct HouseResult {
  WinningSet winning_set;
  HouseRunTrace trace;
};

// Shrinks the feasible prefix so that every kept agent's assignment survives
// swapping the agent out for `extra_agent`. Scans from the back of
// `ordered_agents`; an agent is dropped exactly when the swapped set has no
// feasible top-choice assignment. Requires `ordered_agents` feasible and
// `ordered_agents` + `extra_agent` infeasible.
std::vector<Vertex> prune_agents(const Instance& instance,
                                 const std::vector<Vertex>& ordered_agents,
                                 Vertex extra_agent,
                                 const std::vector<Vertex>& houses,
                                 std::vector<PruneEvent>* events = nullptr);

// Produces a winning set of at most two matchings for a house instance,
// together with the full per-round trace. Internal round invariants are
// checked as the run proceeds; a violation throws std::logic_error.
HouseResult solve_house(const Instance& instance);

// Line-oriented debug dump of a trace, one block per round.
std::string format_trace(const Instance& instance, const HouseRunTrace& trace);

}  // namespace popmatch
