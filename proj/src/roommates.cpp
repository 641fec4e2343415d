#include "popmatch/roommates.hpp"

#include <algorithm>
#include <deque>
#include <stdexcept>

#include "popmatch/popularity.hpp"

namespace popmatch {

StrictRoommatesResult solve_roommates_strict(const Instance& instance) {
  if (instance.kind() != Kind::Roommates) {
    throw ValidationError("chain solver requires a roommates instance");
  }
  if (!instance.all_preferences_strict()) {
    throw ValidationError("chain solver requires strict preferences");
  }
  if (!instance.all_weights_equal()) {
    throw ValidationError("chain solver requires equal weights");
  }

  ChainTrace trace;
  std::vector<Edge> first_edges, second_edges;
  if (instance.agent_count() > 0) {
    Vertex current = 0;
    trace.sequence.push_back(current);
    std::vector<Vertex> remaining;
    for (Vertex a = 1; a < instance.agent_count(); ++a) {
      remaining.push_back(a);
    }
    int t = 1;
    while (!remaining.empty()) {
      ChainStep step;
      step.index = t;
      step.remaining = remaining;
      std::vector<Vertex> favs = favorites(instance, current, remaining);
      Vertex next;
      if (!favs.empty()) {
        next = favs.front();  // singleton under strict preferences
        step.edge_added = true;
        step.target_matching = (t % 2 == 1) ? 1 : 2;
        auto& bucket = (t % 2 == 1) ? first_edges : second_edges;
        bucket.emplace_back(std::min(current, next), std::max(current, next));
      } else {
        next = remaining.front();  // lowest index, no edge
      }
      step.chosen = next;
      remaining.erase(std::find(remaining.begin(), remaining.end(), next));
      trace.sequence.push_back(next);
      trace.steps.push_back(std::move(step));
      current = next;
      ++t;
    }
  }

  Matching first{std::move(first_edges)};
  Matching second{std::move(second_edges)};
  WinningSet ws;
  if (first.empty() && second.empty()) {
    ws.matchings.push_back(Matching{});
  } else {
    if (!first.empty()) ws.matchings.push_back(std::move(first));
    if (!second.empty()) ws.matchings.push_back(std::move(second));
  }
  return StrictRoommatesResult{std::move(ws), std::move(trace)};
}

AuxiliaryInstance build_auxiliary(const Instance& instance) {
  if (instance.kind() == Kind::House) {
    throw ValidationError(
        "auxiliary construction requires a roommates or marriage instance");
  }
  int n = instance.agent_count();
  std::vector<AgentSpec> agents;
  std::vector<std::string> items;
  std::vector<PreferenceOrder> prefs;
  agents.reserve(n);
  items.reserve(n);
  prefs.reserve(n);
  for (Vertex a = 0; a < n; ++a) {
    agents.push_back(AgentSpec{instance.name(a) + "+", instance.weight(a),
                               std::nullopt});
    items.push_back(instance.name(a) + "-");
  }
  for (Vertex a = 0; a < n; ++a) {
    PreferenceOrder order;
    for (const auto& tier : instance.preferences(a).tiers) {
      std::vector<Vertex> shifted;
      for (Vertex p : tier) shifted.push_back(n + p);
      order.tiers.push_back(std::move(shifted));
    }
    prefs.push_back(std::move(order));
  }
  return AuxiliaryInstance{Instance(Kind::House, std::move(agents),
                                    std::move(items), std::move(prefs))};
}

namespace {

struct AdjacencyEntry {
  Vertex neighbor;
  int edge_index;
};

// Peels leaves to expose the unique cycle of a pseudoforest component;
// returns the vertex set of the cycle (empty for a tree component).
std::vector<Vertex> cycle_vertices(
    const std::vector<Vertex>& component,
    const std::vector<std::vector<AdjacencyEntry>>& adjacency) {
  std::vector<int> degree(adjacency.size(), 0);
  std::vector<char> removed(adjacency.size(), 1);
  for (Vertex v : component) {
    degree[v] = static_cast<int>(adjacency[v].size());
    removed[v] = 0;
  }
  std::deque<Vertex> leaves;
  for (Vertex v : component) {
    if (degree[v] <= 1) leaves.push_back(v);
  }
  while (!leaves.empty()) {
    Vertex v = leaves.front();
    leaves.pop_front();
    removed[v] = 1;
    for (const auto& [u, idx] : adjacency[v]) {
      if (removed[u]) continue;
      if (--degree[u] == 1) leaves.push_back(u);
    }
  }
  std::vector<Vertex> cycle;
  for (Vertex v : component) {
    if (!removed[v]) cycle.push_back(v);
  }
  return cycle;
}

}  // namespace

EdgeColoring three_edge_color(const std::vector<Edge>& edges) {
  Vertex max_vertex = -1;
  for (const auto& [u, v] : edges) {
    if (u == v) throw ValidationError("self-loop in edge set");
    max_vertex = std::max(max_vertex, std::max(u, v));
  }
  int n = max_vertex + 1;
  std::vector<Edge> sorted = edges;
  for (auto& [u, v] : sorted) {
    if (u > v) std::swap(u, v);
  }
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
    throw ValidationError("duplicate edge in edge set");
  }

  std::vector<std::vector<AdjacencyEntry>> adjacency(n);
  for (int i = 0; i < static_cast<int>(sorted.size()); ++i) {
    const auto& [u, v] = sorted[i];
    adjacency[u].push_back({v, i});
    adjacency[v].push_back({u, i});
  }
  for (int v = 0; v < n; ++v) {
    if (adjacency[v].size() > 3) {
      throw ValidationError("vertex degree exceeds 3");
    }
    std::sort(adjacency[v].begin(), adjacency[v].end(),
              [](const AdjacencyEntry& a, const AdjacencyEntry& b) {
                return a.neighbor < b.neighbor;
              });
  }

  std::vector<int> edge_color(sorted.size(), 0);
  std::vector<int> component_of(n, -1);
  int component_count = 0;
  std::vector<std::vector<Vertex>> components;
  for (int start = 0; start < n; ++start) {
    if (component_of[start] != -1 || adjacency[start].empty()) continue;
    std::vector<Vertex> comp;
    std::deque<Vertex> queue{start};
    component_of[start] = component_count;
    while (!queue.empty()) {
      Vertex v = queue.front();
      queue.pop_front();
      comp.push_back(v);
      for (const auto& [u, idx] : adjacency[v]) {
        if (component_of[u] == -1) {
          component_of[u] = component_count;
          queue.push_back(u);
        }
      }
    }
    std::sort(comp.begin(), comp.end());
    components.push_back(std::move(comp));
    ++component_count;
  }

  auto color_at = [&](Vertex v) {
    std::vector<int> used;
    for (const auto& [u, idx] : adjacency[v]) {
      if (edge_color[idx] != 0) used.push_back(edge_color[idx]);
    }
    return used;
  };
  auto smallest_free = [&](Vertex u, Vertex v) {
    std::vector<int> used = color_at(u);
    std::vector<int> more = color_at(v);
    used.insert(used.end(), more.begin(), more.end());
    for (int c = 1; c <= 3; ++c) {
      if (std::find(used.begin(), used.end(), c) == used.end()) return c;
    }
    throw ValidationError("no color available; input is not colorable");
  };

  for (const auto& comp : components) {
    int edges_in_comp = 0;
    for (Vertex v : comp) edges_in_comp += static_cast<int>(adjacency[v].size());
    edges_in_comp /= 2;
    if (edges_in_comp > static_cast<int>(comp.size())) {
      throw ValidationError("component contains more than one cycle");
    }

    std::vector<Vertex> cycle = cycle_vertices(comp, adjacency);
    std::deque<Vertex> queue;
    std::vector<char> visited(n, 0);

    if (!cycle.empty()) {
      // Walk the cycle from its smallest vertex toward its smaller cycle
      // neighbor, alternating colors 1 and 2; an odd closing edge takes 3.
      std::vector<char> on_cycle(n, 0);
      for (Vertex v : cycle) on_cycle[v] = 1;
      Vertex start = cycle.front();
      std::vector<Vertex> walk{start};
      Vertex prev = kUnmatched;
      Vertex at = start;
      while (true) {
        Vertex next = kUnmatched;
        for (const auto& [u, idx] : adjacency[at]) {
          if (on_cycle[u] && u != prev) {
            next = u;
            break;
          }
        }
        if (next == start || next == kUnmatched) break;
        walk.push_back(next);
        prev = at;
        at = next;
      }
      int len = static_cast<int>(walk.size());
      auto edge_index_between = [&](Vertex a, Vertex b) {
        for (const auto& [u, idx] : adjacency[a]) {
          if (u == b) return idx;
        }
        throw std::logic_error("cycle walk left the edge set");
      };
      for (int i = 0; i < len; ++i) {
        Vertex a = walk[i];
        Vertex b = walk[(i + 1) % len];
        int idx = edge_index_between(a, b);
        if (i == len - 1) {
          edge_color[idx] = (len % 2 == 0) ? 2 : 3;
        } else {
          edge_color[idx] = (i % 2 == 0) ? 1 : 2;
        }
      }
      for (Vertex v : cycle) {
        visited[v] = 1;
        queue.push_back(v);
      }
    } else {
      visited[comp.front()] = 1;
      queue.push_back(comp.front());
    }

    // Remaining edges in breadth-first order from the root set, each taking
    // the smallest color unused at its endpoints.
    while (!queue.empty()) {
      Vertex v = queue.front();
      queue.pop_front();
      for (const auto& [u, idx] : adjacency[v]) {
        if (visited[u]) continue;
        visited[u] = 1;
        edge_color[idx] = smallest_free(v, u);
        queue.push_back(u);
      }
    }
  }

  EdgeColoring coloring;
  for (int i = 0; i < static_cast<int>(sorted.size()); ++i) {
    if (edge_color[i] == 0) throw std::logic_error("edge left uncolored");
    coloring.color[sorted[i]] = edge_color[i];
  }
  // Properness check.
  std::vector<std::vector<int>> at_vertex(n);
  for (int i = 0; i < static_cast<int>(sorted.size()); ++i) {
    const auto& [u, v] = sorted[i];
    at_vertex[u].push_back(edge_color[i]);
    at_vertex[v].push_back(edge_color[i]);
  }
  for (int v = 0; v < n; ++v) {
    std::sort(at_vertex[v].begin(), at_vertex[v].end());
    if (std::adjacent_find(at_vertex[v].begin(), at_vertex[v].end()) !=
        at_vertex[v].end()) {
      throw std::logic_error("coloring is not proper");
    }
  }
  return coloring;
}

GeneralRoommatesRun solve_roommates_general_run(const Instance& instance) {
  if (instance.kind() == Kind::House) {
    throw ValidationError(
        "general solver requires a roommates or marriage instance");
  }
  AuxiliaryInstance aux = build_auxiliary(instance);
  HouseResult house = solve_house(aux.house);

  std::vector<Edge> merged;
  const std::vector<Edge>& assignment =
      house.trace.steps.empty() ? std::vector<Edge>{}
                                : house.trace.steps.back().accumulated;
  for (const auto& [plus, minus] : assignment) {
    Vertex u = plus;
    Vertex v = aux.base_of_item(minus);
    if (u == v) throw std::logic_error("agent folded onto itself");
    merged.emplace_back(std::min(u, v), std::max(u, v));
  }
  std::sort(merged.begin(), merged.end());
  merged.erase(std::unique(merged.begin(), merged.end()), merged.end());

  EdgeColoring coloring = three_edge_color(merged);
  std::vector<std::vector<Edge>> classes(3);
  for (const auto& [edge, color] : coloring.color) {
    classes[color - 1].push_back(edge);
  }
  WinningSet ws;
  for (auto& cls : classes) {
    if (!cls.empty()) ws.matchings.push_back(Matching(std::move(cls)));
  }
  if (ws.matchings.empty()) ws.matchings.push_back(Matching{});
  return GeneralRoommatesRun{std::move(ws), std::move(merged),
                             std::move(coloring), std::move(house.trace)};
}

WinningSet solve_roommates_general(const Instance& instance) {
  return solve_roommates_general_run(instance).winning_set;
}

Matching gale_shapley(const Instance& instance) {
  if (instance.kind() != Kind::Marriage) {
    throw ValidationError("deferred acceptance requires a marriage instance");
  }
  if (!instance.all_preferences_strict()) {
    throw ValidationError("deferred acceptance requires strict preferences");
  }
  if (!instance.all_weights_equal()) {
    throw ValidationError("deferred acceptance requires equal weights");
  }

  std::vector<Vertex> proposers;
  for (Vertex a = 0; a < instance.agent_count(); ++a) {
    if (instance.side(a) == Side::Left) proposers.push_back(a);
  }
  std::vector<std::vector<Vertex>> list(instance.agent_count());
  for (Vertex m : proposers) {
    for (const auto& tier : instance.preferences(m).tiers) {
      list[m].push_back(tier.front());
    }
  }
  std::vector<std::size_t> next(instance.agent_count(), 0);
  std::vector<Vertex> engaged_to(instance.agent_count(), kUnmatched);
  std::deque<Vertex> free(proposers.begin(), proposers.end());

  while (!free.empty()) {
    Vertex m = free.front();
    free.pop_front();
    if (next[m] >= list[m].size()) continue;  // exhausted, stays single
    Vertex w = list[m][next[m]++];
    Vertex rival = engaged_to[w];
    if (rival == kUnmatched) {
      engaged_to[w] = m;
      engaged_to[m] = w;
    } else if (instance.tier_of(w, m) < instance.tier_of(w, rival)) {
      engaged_to[w] = m;
      engaged_to[m] = w;
      engaged_to[rival] = kUnmatched;
      free.push_back(rival);
    } else {
      free.push_back(m);
    }
  }

  std::vector<Edge> edges;
  for (Vertex m : proposers) {
    if (engaged_to[m] != kUnmatched) {
      edges.emplace_back(std::min(m, engaged_to[m]),
                         std::max(m, engaged_to[m]));
    }
  }
  return Matching(std::move(edges));
}

WinningSet solve_marriage(const Instance& instance) {
  if (instance.kind() != Kind::Marriage) {
    throw ValidationError("marriage solver requires a marriage instance");
  }
  if (instance.all_preferences_strict() && instance.all_weights_equal()) {
    WinningSet ws;
    ws.matchings.push_back(gale_shapley(instance));
    return ws;
  }
  return solve_roommates_general(instance);
}

WinningSet solve_roommates(const Instance& instance) {
  if (instance.kind() != Kind::Roommates) {
    throw ValidationError("roommates solver requires a roommates instance");
  }
  if (instance.all_preferences_strict() && instance.all_weights_equal()) {
    return solve_roommates_strict(instance).winning_set;
  }
  return solve_roommates_general(instance);
}

}  // namespace popmatch
