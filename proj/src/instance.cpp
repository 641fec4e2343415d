#include "popmatch/instance.hpp"

#include <algorithm>

namespace popmatch {

const char* kind_name(Kind kind) {
  switch (kind) {
    case Kind::House:
      return "house";
    case Kind::Marriage:
      return "marriage";
    case Kind::Roommates:
      return "roommates";
  }
  return "?";
}

Matching::Matching(std::vector<Edge> edges) : edges_(std::move(edges)) {
  for (auto& [u, v] : edges_) {
    if (u == v) throw ValidationError("matching contains a self-loop");
    if (u > v) std::swap(u, v);
  }
  std::sort(edges_.begin(), edges_.end());
  std::vector<Vertex> seen;
  for (const auto& [u, v] : edges_) {
    seen.push_back(u);
    seen.push_back(v);
  }
  std::sort(seen.begin(), seen.end());
  if (std::adjacent_find(seen.begin(), seen.end()) != seen.end()) {
    throw ValidationError("matching uses a vertex more than once");
  }
}

Instance::Instance(Kind kind, std::vector<AgentSpec> agents,
                   std::vector<std::string> item_names,
                   std::vector<PreferenceOrder> preferences)
    : kind_(kind),
      agents_(std::move(agents)),
      item_names_(std::move(item_names)),
      prefs_(std::move(preferences)) {
  for (Vertex v = 0; v < agent_count(); ++v) {
    if (!by_name_.emplace(agents_[v].name, v).second) {
      throw ValidationError("duplicate identifier '" + agents_[v].name + "'");
    }
  }
  for (Vertex v = agent_count(); v < vertex_count(); ++v) {
    if (!by_name_.emplace(item_names_[v - agent_count()], v).second) {
      throw ValidationError("duplicate identifier '" +
                            item_names_[v - agent_count()] + "'");
    }
  }
  validate();

  acceptable_.resize(agent_count());
  tier_rank_.assign(agent_count(), std::vector<int>(vertex_count(), -1));
  for (Vertex a = 0; a < agent_count(); ++a) {
    int rank = 0;
    for (const auto& tier : prefs_[a].tiers) {
      for (Vertex p : tier) {
        acceptable_[a].push_back(p);
        tier_rank_[a][p] = rank;
      }
      ++rank;
    }
    std::sort(acceptable_[a].begin(), acceptable_[a].end());
  }
}

void Instance::validate() const {
  if (prefs_.size() != agents_.size()) {
    throw ValidationError("preference list count does not match agent count");
  }
  if (kind_ != Kind::House && !item_names_.empty()) {
    throw ValidationError("only house instances may declare items");
  }
  for (Vertex a = 0; a < agent_count(); ++a) {
    const AgentSpec& spec = agents_[a];
    if (spec.name.empty()) throw ValidationError("empty agent name");
    if (spec.weight < 0) {
      throw ValidationError("agent '" + spec.name +
                            "' has a negative weight");
    }
    if (kind_ == Kind::Marriage) {
      if (!spec.side.has_value()) {
        throw ValidationError("agent '" + spec.name +
                              "' is missing a side (marriage instance)");
      }
    } else if (spec.side.has_value()) {
      throw ValidationError("agent '" + spec.name +
                            "' declares a side in a " +
                            std::string(kind_name(kind_)) + " instance");
    }
  }

  for (Vertex a = 0; a < agent_count(); ++a) {
    std::vector<Vertex> seen;
    for (const auto& tier : prefs_[a].tiers) {
      if (tier.empty()) {
        throw ValidationError("agent '" + agents_[a].name +
                              "' has an empty preference tier");
      }
      for (Vertex p : tier) {
        if (p == a) {
          throw ValidationError("agent '" + agents_[a].name +
                                "' lists itself");
        }
        if (kind_ == Kind::House) {
          if (p < agent_count() || p >= vertex_count()) {
            throw ValidationError("agent '" + agents_[a].name +
                                  "' must rank items only");
          }
        } else {
          if (p < 0 || p >= agent_count()) {
            throw ValidationError("agent '" + agents_[a].name +
                                  "' must rank agents only");
          }
          if (kind_ == Kind::Marriage &&
              agents_[a].side == agents_[p].side) {
            throw ValidationError("agent '" + agents_[a].name + "' ranks '" +
                                  agents_[p].name + "' on the same side");
          }
        }
        seen.push_back(p);
      }
    }
    std::sort(seen.begin(), seen.end());
    if (std::adjacent_find(seen.begin(), seen.end()) != seen.end()) {
      throw ValidationError("agent '" + agents_[a].name +
                            "' ranks a partner twice");
    }
  }

  // Two-sided kinds require mutual acceptability.
  if (kind_ != Kind::House) {
    std::vector<std::vector<char>> accepts(
        agent_count(), std::vector<char>(agent_count(), 0));
    for (Vertex a = 0; a < agent_count(); ++a) {
      for (const auto& tier : prefs_[a].tiers) {
        for (Vertex p : tier) accepts[a][p] = 1;
      }
    }
    for (Vertex a = 0; a < agent_count(); ++a) {
      for (Vertex b = 0; b < agent_count(); ++b) {
        if (accepts[a][b] && !accepts[b][a]) {
          throw ValidationError("asymmetric acceptability: '" +
                                agents_[a].name + "' ranks '" +
                                agents_[b].name + "' but not conversely");
        }
      }
    }
  }
}

const std::string& Instance::name(Vertex v) const {
  if (is_agent(v)) return agents_[v].name;
  if (is_item(v)) return item_names_[v - agent_count()];
  throw ValidationError("vertex id out of range");
}

std::optional<Vertex> Instance::find_vertex(const std::string& name) const {
  auto it = by_name_.find(name);
  if (it == by_name_.end()) return std::nullopt;
  return it->second;
}

const AgentSpec& Instance::agent(Vertex v) const {
  if (!is_agent(v)) throw ValidationError("unknown agent");
  return agents_[v];
}

const Rational& Instance::weight(Vertex agent) const {
  return this->agent(agent).weight;
}

Side Instance::side(Vertex agent) const {
  const AgentSpec& spec = this->agent(agent);
  if (!spec.side.has_value()) {
    throw ValidationError("agent '" + spec.name + "' has no side");
  }
  return *spec.side;
}

const PreferenceOrder& Instance::preferences(Vertex agent) const {
  if (!is_agent(agent)) throw ValidationError("unknown agent");
  return prefs_[agent];
}

const std::vector<Vertex>& Instance::acceptable(Vertex agent) const {
  if (!is_agent(agent)) throw ValidationError("unknown agent");
  return acceptable_[agent];
}

bool Instance::accepts(Vertex agent, Vertex partner) const {
  if (!is_agent(agent)) throw ValidationError("unknown agent");
  if (partner < 0 || partner >= vertex_count()) return false;
  return tier_rank_[agent][partner] >= 0;
}

int Instance::tier_of(Vertex agent, Vertex partner) const {
  if (!is_agent(agent)) throw ValidationError("unknown agent");
  if (partner < 0 || partner >= vertex_count() ||
      tier_rank_[agent][partner] < 0) {
    throw ValidationError("'" +
                          (partner >= 0 && partner < vertex_count()
                               ? name(partner)
                               : std::string("?")) +
                          "' is not acceptable to '" + agents_[agent].name +
                          "'");
  }
  return tier_rank_[agent][partner];
}

bool Instance::all_weights_equal() const {
  for (Vertex a = 1; a < agent_count(); ++a) {
    if (agents_[a].weight != agents_[0].weight) return false;
  }
  return true;
}

bool Instance::all_preferences_strict() const {
  for (const auto& order : prefs_) {
    for (const auto& tier : order.tiers) {
      if (tier.size() > 1) return false;
    }
  }
  return true;
}

std::vector<Edge> Instance::acceptability_edges() const {
  std::vector<Edge> edges;
  for (Vertex a = 0; a < agent_count(); ++a) {
    for (Vertex p : acceptable_[a]) {
      if (kind_ == Kind::House || a < p) edges.emplace_back(a, p);
    }
  }
  std::sort(edges.begin(), edges.end());
  return edges;
}

void Instance::check_matching(const Matching& matching) const {
  for (const auto& [u, v] : matching.edges()) {
    bool ok = false;
    if (kind_ == Kind::House) {
      ok = is_agent(u) && is_item(v) && accepts(u, v);
    } else {
      ok = is_agent(u) && is_agent(v) && accepts(u, v);
    }
    if (!ok) {
      throw ValidationError(
          "matching uses non-acceptable edge (" +
          (u >= 0 && u < vertex_count() ? name(u) : std::string("?")) + ", " +
          (v >= 0 && v < vertex_count() ? name(v) : std::string("?")) + ")");
    }
  }
}

bool Instance::operator==(const Instance& other) const {
  return kind_ == other.kind_ && agents_ == other.agents_ &&
         item_names_ == other.item_names_ && prefs_ == other.prefs_;
}

std::vector<Vertex> partner_array(const Matching& matching, int vertex_count) {
  std::vector<Vertex> partner(vertex_count, kUnmatched);
  for (const auto& [u, v] : matching.edges()) {
    partner[u] = v;
    partner[v] = u;
  }
  return partner;
}

}  // namespace popmatch
