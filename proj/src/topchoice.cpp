#include "popmatch/topchoice.hpp"

#include <algorithm>

#include "popmatch/popularity.hpp"

namespace popmatch {

namespace {

// Incremental capacity-2 assignment over favourite edges. Houses are scanned
// in increasing vertex id (instance item order); evicted occupants are
// retried in increasing agent id. All state is rolled back on a failed
// augmentation, so a failed add leaves the assignment untouched.
class TopChoiceAssigner {
 public:
  TopChoiceAssigner(const Instance& instance,
                    const std::vector<Vertex>& houses)
      : instance_(instance),
        houses_(houses),
        occupants_(instance.vertex_count()),
        assigned_(instance.vertex_count(), kUnmatched) {
    std::sort(houses_.begin(), houses_.end());
    for (Vertex h : houses_) {
      if (!instance.is_item(h)) {
        throw ValidationError("unknown house '" +
                              (h >= 0 && h < instance.vertex_count()
                                   ? instance.name(h)
                                   : std::string("?")) +
                              "'");
      }
    }
  }

  bool add(Vertex agent) {
    if (!instance_.is_agent(agent)) throw ValidationError("unknown agent");
    std::vector<char> visited(instance_.vertex_count(), 0);
    return search(agent, visited);
  }

  Vertex house_of(Vertex agent) const { return assigned_[agent]; }

 private:
  bool search(Vertex agent, std::vector<char>& visited) {
    std::vector<Vertex> favs = favorites(instance_, agent, houses_);
    for (Vertex h : favs) {
      if (visited[h]) continue;
      visited[h] = 1;
      if (occupants_[h].size() < 2) {
        place(agent, h);
        return true;
      }
      // House is full: try to relocate one of its occupants.
      std::vector<Vertex> occ = occupants_[h];
      for (Vertex other : occ) {
        remove(other, h);
        if (search(other, visited)) {
          place(agent, h);
          return true;
        }
        place(other, h);
      }
    }
    return false;
  }

  void place(Vertex agent, Vertex house) {
    occupants_[house].push_back(agent);
    std::sort(occupants_[house].begin(), occupants_[house].end());
    assigned_[agent] = house;
  }

  void remove(Vertex agent, Vertex house) {
    auto& occ = occupants_[house];
    occ.erase(std::find(occ.begin(), occ.end(), agent));
    assigned_[agent] = kUnmatched;
  }

  const Instance& instance_;
  std::vector<Vertex> houses_;
  std::vector<std::vector<Vertex>> occupants_;
  std::vector<Vertex> assigned_;
};

OneTwoMatching collect(const TopChoiceAssigner& assigner,
                       const std::vector<Vertex>& agents) {
  std::vector<Vertex> sorted = agents;
  std::sort(sorted.begin(), sorted.end());
  OneTwoMatching result;
  for (Vertex a : sorted) {
    result.edges.emplace_back(a, assigner.house_of(a));
  }
  return result;
}

}  // namespace

std::optional<OneTwoMatching> find_top_choice_12(
    const Instance& instance, const std::vector<Vertex>& agents,
    const std::vector<Vertex>& houses) {
  TopChoiceAssigner assigner(instance, houses);
  for (Vertex a : agents) {
    if (!assigner.add(a)) return std::nullopt;
  }
  return collect(assigner, agents);
}

int max_top_choice_prefix(const Instance& instance,
                          const std::vector<Vertex>& ordered_agents,
                          const std::vector<Vertex>& houses) {
  for (Vertex a : ordered_agents) {
    if (favorites(instance, a, houses).empty()) {
      throw ValidationError("agent '" + instance.name(a) +
                            "' has no acceptable house available");
    }
  }
  TopChoiceAssigner assigner(instance, houses);
  int k = 0;
  for (Vertex a : ordered_agents) {
    if (!assigner.add(a)) break;
    ++k;
  }
  return k;
}

std::pair<Matching, Matching> decompose_12(const OneTwoMatching& m) {
  std::vector<std::vector<Vertex>> by_house;  // agents per house, keyed lazily
  std::vector<Vertex> houses;
  std::vector<Vertex> agents_seen;
  for (const auto& [agent, house] : m.edges) {
    agents_seen.push_back(agent);
    auto it = std::find(houses.begin(), houses.end(), house);
    if (it == houses.end()) {
      houses.push_back(house);
      by_house.push_back({agent});
    } else {
      by_house[it - houses.begin()].push_back(agent);
    }
  }
  std::sort(agents_seen.begin(), agents_seen.end());
  if (std::adjacent_find(agents_seen.begin(), agents_seen.end()) !=
      agents_seen.end()) {
    throw ValidationError("agent has degree > 1 in (1,2)-assignment");
  }
  std::vector<Edge> first, second;
  for (std::size_t i = 0; i < houses.size(); ++i) {
    auto& occ = by_house[i];
    if (occ.size() > 2) {
      throw ValidationError("house has degree > 2 in (1,2)-assignment");
    }
    std::sort(occ.begin(), occ.end());
    first.emplace_back(occ[0], houses[i]);
    if (occ.size() == 2) second.emplace_back(occ[1], houses[i]);
  }
  return {Matching(std::move(first)), Matching(std::move(second))};
}

}  // namespace popmatch
