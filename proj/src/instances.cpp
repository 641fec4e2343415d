#include "popmatch/instances.hpp"

#include <algorithm>
#include <random>

namespace popmatch {

namespace {

Instance triple_cycle(const std::vector<std::string>& names,
                      int copies) {
  std::vector<AgentSpec> agents;
  std::vector<PreferenceOrder> prefs;
  for (int c = 0; c < copies; ++c) {
    for (int i = 0; i < 3; ++i) {
      agents.push_back(AgentSpec{names[c * 3 + i], 1, std::nullopt});
    }
  }
  for (int c = 0; c < copies; ++c) {
    int base = c * 3;
    // a: b > c, b: c > a, c: a > b  within each copy
    prefs.push_back(PreferenceOrder{{{base + 1}, {base + 2}}});
    prefs.push_back(PreferenceOrder{{{base + 2}, {base + 0}}});
    prefs.push_back(PreferenceOrder{{{base + 0}, {base + 1}}});
  }
  return Instance(Kind::Roommates, std::move(agents), {}, std::move(prefs));
}

}  // namespace

Instance gadget(const std::string& name) {
  if (name == "house_lower") {
    std::vector<AgentSpec> agents{{"a", 1, std::nullopt},
                                  {"b", 1, std::nullopt},
                                  {"c", 1, std::nullopt}};
    std::vector<std::string> items{"x", "y"};
    // vertex ids: x = 3, y = 4; everyone strictly prefers x.
    std::vector<PreferenceOrder> prefs(3, PreferenceOrder{{{3}, {4}}});
    return Instance(Kind::House, std::move(agents), std::move(items),
                    std::move(prefs));
  }
  if (name == "roommates_lower") {
    return triple_cycle({"a", "b", "c"}, 1);
  }
  if (name == "roommates_lower_doubled") {
    return triple_cycle({"a1", "b1", "c1", "a2", "b2", "c2"}, 2);
  }
  throw ValidationError("unknown gadget '" + name + "'");
}

namespace {

void require_strict_unweighted_house(const Instance& instance,
                                     const char* what) {
  if (instance.kind() != Kind::House) {
    throw ValidationError(std::string(what) + " requires a house instance");
  }
  for (Vertex a = 0; a < instance.agent_count(); ++a) {
    if (instance.weight(a) != 1) {
      throw ValidationError(std::string(what) +
                            " requires unit agent weights");
    }
  }
  if (!instance.all_preferences_strict()) {
    throw ValidationError(std::string(what) + " requires strict preferences");
  }
}

}  // namespace

Instance house_to_weighted_marriage(const Instance& instance) {
  require_strict_unweighted_house(instance, "weighted-marriage rebuild");
  int n = instance.agent_count();
  int m = instance.item_count();
  std::vector<AgentSpec> agents;
  std::vector<PreferenceOrder> prefs;
  for (Vertex a = 0; a < n; ++a) {
    agents.push_back(AgentSpec{instance.name(a), 1, Side::Left});
  }
  for (int j = 0; j < m; ++j) {
    agents.push_back(AgentSpec{instance.name(n + j), 0, Side::Right});
  }
  // Men keep their strict orders; vertex ids of the women coincide with the
  // item ids of the input.
  for (Vertex a = 0; a < n; ++a) {
    prefs.push_back(instance.preferences(a));
  }
  for (int j = 0; j < m; ++j) {
    std::vector<Vertex> suitors;
    for (Vertex a = 0; a < n; ++a) {
      if (instance.accepts(a, n + j)) suitors.push_back(a);
    }
    PreferenceOrder order;
    if (!suitors.empty()) order.tiers.push_back(std::move(suitors));
    prefs.push_back(std::move(order));
  }
  return Instance(Kind::Marriage, std::move(agents), {}, std::move(prefs));
}

Instance house_to_ties_marriage(const Instance& instance) {
  require_strict_unweighted_house(instance, "ties-marriage rebuild");
  int n = instance.agent_count();  // original men
  int m = instance.item_count();   // original women
  // Layout: men 0..n-1, dummy men n..n+m-1, women n+m..n+m+m-1,
  // dummy women n+m+m..n+m+m+n-1.
  int dummy_men = n;
  int women = n + m;
  int dummy_women = n + 2 * m;
  int total = 2 * n + 2 * m;

  std::vector<AgentSpec> agents(total);
  for (Vertex a = 0; a < n; ++a) {
    agents[a] = AgentSpec{instance.name(a), 1, Side::Left};
  }
  for (int j = 0; j < m; ++j) {
    agents[dummy_men + j] =
        AgentSpec{"dummy_m" + std::to_string(j + 1), 1, Side::Left};
  }
  for (int j = 0; j < m; ++j) {
    agents[women + j] = AgentSpec{instance.name(n + j), 1, Side::Right};
  }
  for (int i = 0; i < n; ++i) {
    agents[dummy_women + i] =
        AgentSpec{"dummy_w" + std::to_string(i + 1), 1, Side::Right};
  }

  std::vector<PreferenceOrder> prefs(total);
  std::vector<Vertex> all_women, all_men;
  for (int j = 0; j < m + n; ++j) all_women.push_back(women + j);
  for (int i = 0; i < n + m; ++i) all_men.push_back(i);

  // Original men: original strict order, then one tier of all dummy women.
  for (Vertex a = 0; a < n; ++a) {
    PreferenceOrder order;
    for (const auto& tier : instance.preferences(a).tiers) {
      std::vector<Vertex> shifted;
      for (Vertex item : tier) shifted.push_back(women + (item - n));
      order.tiers.push_back(std::move(shifted));
    }
    std::vector<Vertex> dummies;
    for (int i = 0; i < n; ++i) dummies.push_back(dummy_women + i);
    order.tiers.push_back(std::move(dummies));
    prefs[a] = std::move(order);
  }
  // Dummy men are indifferent among all women.
  for (int j = 0; j < m; ++j) {
    prefs[dummy_men + j] = PreferenceOrder{{all_women}};
  }
  // Women are indifferent among their acceptable men.
  for (int j = 0; j < m; ++j) {
    std::vector<Vertex> acceptable;
    for (Vertex a = 0; a < n; ++a) {
      if (instance.accepts(a, n + j)) acceptable.push_back(a);
    }
    for (int d = 0; d < m; ++d) acceptable.push_back(dummy_men + d);
    std::sort(acceptable.begin(), acceptable.end());
    prefs[women + j] = PreferenceOrder{{std::move(acceptable)}};
  }
  for (int i = 0; i < n; ++i) {
    prefs[dummy_women + i] = PreferenceOrder{{all_men}};
  }
  return Instance(Kind::Marriage, std::move(agents), {}, std::move(prefs));
}

namespace {

// Sampling helpers pinned to mt19937_64 output so that generated instances
// are identical across standard libraries.
class SeededSampler {
 public:
  explicit SeededSampler(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t bounded(std::uint64_t n) {
    // rejection sampling: exact uniformity
    std::uint64_t limit = UINT64_MAX - UINT64_MAX % n;
    std::uint64_t x;
    do {
      x = engine_();
    } while (x >= limit);
    return x % n;
  }

  bool bernoulli(double p) {
    double u = static_cast<double>(engine_() >> 11) * 0x1.0p-53;
    return u < p;
  }

  bool coin() { return bounded(2) == 1; }

  template <typename T>
  void shuffle(std::vector<T>& values) {
    for (std::size_t i = values.size(); i > 1; --i) {
      std::swap(values[i - 1], values[bounded(i)]);
    }
  }

 private:
  std::mt19937_64 engine_;
};

PreferenceOrder sample_order(SeededSampler& rng,
                             std::vector<Vertex> acceptable,
                             bool ties_enabled) {
  rng.shuffle(acceptable);
  PreferenceOrder order;
  for (std::size_t i = 0; i < acceptable.size(); ++i) {
    if (i > 0 && ties_enabled && rng.coin()) {
      order.tiers.back().push_back(acceptable[i]);
    } else {
      order.tiers.push_back({acceptable[i]});
    }
  }
  return order;
}

}  // namespace

Instance random_instance(const GeneratorConfig& config) {
  if (config.num_agents < 0 || config.num_agents_right < 0 ||
      config.num_items < 0) {
    throw ValidationError("generator counts must be non-negative");
  }
  if (config.density < 0.0 || config.density > 1.0) {
    throw ValidationError("generator density must lie in [0,1]");
  }
  if (config.weight_min < 0 || config.weight_min > config.weight_max) {
    throw ValidationError("generator weight range is invalid");
  }

  SeededSampler rng(config.seed);
  auto sample_weight = [&]() {
    std::uint64_t span =
        static_cast<std::uint64_t>(config.weight_max - config.weight_min) + 1;
    return Rational(config.weight_min +
                    static_cast<long long>(rng.bounded(span)));
  };

  switch (config.kind) {
    case Kind::House: {
      int n = config.num_agents;
      int m = config.num_items;
      std::vector<std::vector<char>> edge(n, std::vector<char>(m, 0));
      for (int a = 0; a < n; ++a) {
        for (int j = 0; j < m; ++j) edge[a][j] = rng.bernoulli(config.density);
      }
      std::vector<AgentSpec> agents;
      for (int a = 0; a < n; ++a) {
        agents.push_back(
            AgentSpec{"a" + std::to_string(a + 1), sample_weight(),
                      std::nullopt});
      }
      std::vector<std::string> items;
      for (int j = 0; j < m; ++j) items.push_back("h" + std::to_string(j + 1));
      std::vector<PreferenceOrder> prefs;
      for (int a = 0; a < n; ++a) {
        std::vector<Vertex> acc;
        for (int j = 0; j < m; ++j) {
          if (edge[a][j]) acc.push_back(n + j);
        }
        prefs.push_back(sample_order(rng, std::move(acc),
                                     config.ties_enabled));
      }
      return Instance(Kind::House, std::move(agents), std::move(items),
                      std::move(prefs));
    }
    case Kind::Marriage: {
      int n = config.num_agents;
      int m = config.num_agents_right;
      std::vector<std::vector<char>> edge(n, std::vector<char>(m, 0));
      for (int a = 0; a < n; ++a) {
        for (int b = 0; b < m; ++b) edge[a][b] = rng.bernoulli(config.density);
      }
      std::vector<AgentSpec> agents;
      for (int a = 0; a < n; ++a) {
        agents.push_back(AgentSpec{"m" + std::to_string(a + 1),
                                   sample_weight(), Side::Left});
      }
      for (int b = 0; b < m; ++b) {
        agents.push_back(AgentSpec{"w" + std::to_string(b + 1),
                                   sample_weight(), Side::Right});
      }
      std::vector<PreferenceOrder> prefs;
      for (int a = 0; a < n; ++a) {
        std::vector<Vertex> acc;
        for (int b = 0; b < m; ++b) {
          if (edge[a][b]) acc.push_back(n + b);
        }
        prefs.push_back(sample_order(rng, std::move(acc),
                                     config.ties_enabled));
      }
      for (int b = 0; b < m; ++b) {
        std::vector<Vertex> acc;
        for (int a = 0; a < n; ++a) {
          if (edge[a][b]) acc.push_back(a);
        }
        prefs.push_back(sample_order(rng, std::move(acc),
                                     config.ties_enabled));
      }
      return Instance(Kind::Marriage, std::move(agents), {},
                      std::move(prefs));
    }
    case Kind::Roommates: {
      int n = config.num_agents;
      std::vector<std::vector<char>> edge(n, std::vector<char>(n, 0));
      for (int a = 0; a < n; ++a) {
        for (int b = a + 1; b < n; ++b) {
          edge[a][b] = edge[b][a] = rng.bernoulli(config.density);
        }
      }
      std::vector<AgentSpec> agents;
      for (int a = 0; a < n; ++a) {
        agents.push_back(AgentSpec{"r" + std::to_string(a + 1),
                                   sample_weight(), std::nullopt});
      }
      std::vector<PreferenceOrder> prefs;
      for (int a = 0; a < n; ++a) {
        std::vector<Vertex> acc;
        for (int b = 0; b < n; ++b) {
          if (edge[a][b]) acc.push_back(b);
        }
        prefs.push_back(sample_order(rng, std::move(acc),
                                     config.ties_enabled));
      }
      return Instance(Kind::Roommates, std::move(agents), {},
                      std::move(prefs));
    }
  }
  throw ValidationError("unknown instance kind");
}

}  // namespace popmatch
