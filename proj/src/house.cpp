#include "popmatch/house.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "popmatch/popularity.hpp"

namespace popmatch {

namespace {

std::vector<Vertex> weight_descending(const Instance& instance,
                                      std::vector<Vertex> agents) {
  std::stable_sort(agents.begin(), agents.end(), [&](Vertex a, Vertex b) {
    if (instance.weight(a) != instance.weight(b)) {
      return instance.weight(a) > instance.weight(b);
    }
    return a < b;  // equal weights: instance order, for reproducibility
  });
  return agents;
}

std::vector<Vertex> set_minus(const std::vector<Vertex>& from,
                              const std::vector<Vertex>& remove) {
  std::vector<Vertex> out;
  for (Vertex v : from) {
    if (std::find(remove.begin(), remove.end(), v) == remove.end()) {
      out.push_back(v);
    }
  }
  return out;
}

void check_round_invariants(const Instance& instance, const HouseStep& step) {
  bool pruned_round = step.feasible_prefix < static_cast<int>(step.order.size());
  if (!pruned_round) return;

  // Every agent placed this round must strictly prefer its house to every
  // acceptable house that stays available.
  std::vector<Vertex> staying = set_minus(step.houses, step.closed_houses);
  for (const auto& [agent, house] : step.round_assignment.edges) {
    int own = instance.tier_of(agent, house);
    for (Vertex j : staying) {
      if (!instance.accepts(agent, j)) continue;
      if (instance.tier_of(agent, j) <= own) {
        throw std::logic_error(
            "round invariant violated: '" + instance.name(agent) +
            "' does not strictly prefer its house to '" + instance.name(j) +
            "'");
      }
    }
  }
  // Placed agents come two per closed house.
  if (step.matched_agents.size() != 2 * step.closed_houses.size()) {
    throw std::logic_error(
        "round invariant violated: placed agents != 2 * closed houses");
  }
}

void check_favorite_assignments(const Instance& instance,
                                const HouseRunTrace& trace,
                                const std::vector<Vertex>& final_house) {
  for (const HouseStep& step : trace.steps) {
    for (Vertex agent : step.top_block) {
      Vertex h = final_house[agent];
      if (h == kUnmatched) {
        throw std::logic_error("run invariant violated: '" +
                               instance.name(agent) +
                               "' entered a top block but ended unmatched");
      }
      std::vector<Vertex> favs = favorites(instance, agent, step.houses);
      if (std::find(favs.begin(), favs.end(), h) == favs.end()) {
        throw std::logic_error(
            "run invariant violated: '" + instance.name(agent) +
            "' did not receive a favourite of the houses available when it "
            "entered a top block");
      }
    }
  }
}

}  // namespace

std::vector<Vertex> prune_agents(const Instance& instance,
                                 const std::vector<Vertex>& ordered_agents,
                                 Vertex extra_agent,
                                 const std::vector<Vertex>& houses,
                                 std::vector<PruneEvent>* events) {
  if (!find_top_choice_12(instance, ordered_agents, houses).has_value()) {
    throw ValidationError("prefix is not feasible");
  }
  std::vector<Vertex> with_extra = ordered_agents;
  with_extra.push_back(extra_agent);
  if (find_top_choice_12(instance, with_extra, houses).has_value()) {
    throw ValidationError("prefix is not maximal: adding '" +
                          instance.name(extra_agent) +
                          "' keeps the assignment feasible");
  }

  std::vector<Vertex> working = ordered_agents;
  for (int pos = static_cast<int>(ordered_agents.size()) - 1; pos >= 0;
       --pos) {
    Vertex candidate = ordered_agents[pos];
    std::vector<Vertex> swapped;
    for (Vertex v : working) {
      if (v != candidate) swapped.push_back(v);
    }
    swapped.push_back(extra_agent);
    bool feasible = find_top_choice_12(instance, swapped, houses).has_value();
    if (!feasible) {
      working.erase(std::find(working.begin(), working.end(), candidate));
    }
    if (events != nullptr) {
      events->push_back(PruneEvent{candidate, !feasible});
    }
  }
  return working;
}

HouseResult solve_house(const Instance& instance) {
  if (instance.kind() != Kind::House) {
    throw ValidationError("house solver requires a house instance");
  }

  std::vector<Vertex> active;
  for (Vertex a = 0; a < instance.agent_count(); ++a) active.push_back(a);
  std::vector<Vertex> available;
  for (Vertex h = instance.agent_count(); h < instance.vertex_count(); ++h) {
    available.push_back(h);
  }

  HouseRunTrace trace;
  std::vector<Edge> accumulated;
  std::vector<Vertex> final_house(instance.agent_count(), kUnmatched);

  for (int t = 1; t <= instance.agent_count(); ++t) {
    std::vector<Vertex> dropped;
    std::vector<Vertex> working;
    for (Vertex a : active) {
      if (favorites(instance, a, available).empty()) {
        dropped.push_back(a);
      } else {
        working.push_back(a);
      }
    }
    if (working.empty() || available.empty()) break;

    HouseStep step;
    step.index = t;
    step.dropped = dropped;
    step.agents = working;
    step.houses = available;
    step.order = weight_descending(instance, working);
    step.feasible_prefix =
        max_top_choice_prefix(instance, step.order, available);

    if (step.feasible_prefix == static_cast<int>(step.order.size())) {
      step.top_block = step.order;
      step.matched_agents = step.order;
      step.round_assignment =
          *find_top_choice_12(instance, step.order, available);
    } else {
      step.top_block.assign(step.order.begin(),
                            step.order.begin() + step.feasible_prefix);
      Vertex excluded = step.order[step.feasible_prefix];
      step.cutoff_weight = instance.weight(excluded);
      step.matched_agents = prune_agents(instance, step.top_block, excluded,
                                         available, &step.prune_events);
      step.round_assignment =
          *find_top_choice_12(instance, step.matched_agents, available);
    }
    if (step.matched_agents.empty()) {
      throw std::logic_error("round placed no agent");
    }

    // Houses filled to capacity leave the pool.
    std::vector<int> degree(instance.vertex_count(), 0);
    for (const auto& [agent, house] : step.round_assignment.edges) {
      ++degree[house];
      final_house[agent] = house;
    }
    for (Vertex h : available) {
      if (degree[h] == 2) step.closed_houses.push_back(h);
    }

    for (const auto& edge : step.round_assignment.edges) {
      accumulated.push_back(edge);
    }
    std::sort(accumulated.begin(), accumulated.end());
    step.accumulated = accumulated;

    check_round_invariants(instance, step);

    active = set_minus(working, step.matched_agents);
    available = set_minus(available, step.closed_houses);
    trace.steps.push_back(std::move(step));
    trace.final_step = t;

    if (active.empty() || available.empty()) break;
  }

  check_favorite_assignments(instance, trace, final_house);

  OneTwoMatching all;
  all.edges = accumulated;
  auto [first, second] = decompose_12(all);

  WinningSet ws;
  ws.matchings.push_back(first);
  if (!second.empty()) ws.matchings.push_back(second);
  return HouseResult{std::move(ws), std::move(trace)};
}

std::string format_trace(const Instance& instance,
                         const HouseRunTrace& trace) {
  std::ostringstream out;
  auto names = [&](const std::vector<Vertex>& vs) {
    std::string s;
    for (Vertex v : vs) {
      if (!s.empty()) s += ' ';
      s += instance.name(v);
    }
    return s;
  };
  auto edge_list = [&](const std::vector<Edge>& es) {
    std::string s;
    for (const auto& [u, v] : es) {
      if (!s.empty()) s += ' ';
      s += "(" + instance.name(u) + "," + instance.name(v) + ")";
    }
    return s;
  };
  for (const HouseStep& step : trace.steps) {
    out << "step " << step.index << "\n";
    out << "  dropped: " << names(step.dropped) << "\n";
    out << "  agents: " << names(step.agents) << "\n";
    out << "  houses: " << names(step.houses) << "\n";
    out << "  order: " << names(step.order) << "\n";
    out << "  k: " << step.feasible_prefix << "\n";
    if (step.cutoff_weight.has_value()) {
      out << "  cutoff-weight: " << rational_to_string(*step.cutoff_weight)
          << "\n";
    }
    out << "  top-block: " << names(step.top_block) << "\n";
    for (const PruneEvent& ev : step.prune_events) {
      out << "  prune " << instance.name(ev.agent) << ": "
          << (ev.removed ? "removed" : "kept") << "\n";
    }
    out << "  placed: " << names(step.matched_agents) << "\n";
    out << "  assignment: " << edge_list(step.round_assignment.edges) << "\n";
    out << "  closed-houses: " << names(step.closed_houses) << "\n";
    out << "  edges-so-far: " << edge_list(step.accumulated) << "\n";
  }
  out << "rounds: " << trace.final_step << "\n";
  return out.str();
}

}  // namespace popmatch
