#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "popmatch/rational.hpp"

namespace popmatch {

// Vertices are dense integer ids. Agents occupy 0..agent_count()-1; in house
// instances the items follow at agent_count()..vertex_count()-1.
using Vertex = int;
using Edge = std::pair<Vertex, Vertex>;

inline constexpr Vertex kUnmatched = -1;

enum class Kind { House, Marriage, Roommates };
enum class Side { Left, Right };

const char* kind_name(Kind kind);

// Semantic problems in instances, matchings, or operation arguments.
struct ValidationError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct AgentSpec {
  std::string name;
  Rational weight = 1;
  std::optional<Side> side;  // marriage only

  bool operator==(const AgentSpec&) const = default;
};

// Tiers listed best-first; members of one tier are mutually tied. The union
// of the tiers is the agent's acceptable set.
struct PreferenceOrder {
  std::vector<std::vector<Vertex>> tiers;

  bool operator==(const PreferenceOrder&) const = default;
};

// A set of pairwise vertex-disjoint edges. Edges are normalized (u < v) and
// kept sorted, so equality and ordering are structural.
class Matching {
 public:
  Matching() = default;
  explicit Matching(std::vector<Edge> edges);

  const std::vector<Edge>& edges() const { return edges_; }
  bool empty() const { return edges_.empty(); }
  std::size_t size() const { return edges_.size(); }

  auto operator<=>(const Matching&) const = default;

 private:
  std::vector<Edge> edges_;
};

// An ordered collection of matchings proposed as one committee. Must hold at
// least one member (possibly the empty matching).
struct WinningSet {
  std::vector<Matching> matchings;

  bool operator==(const WinningSet&) const = default;
};

// Immutable problem instance: agents with exact weights, acceptability, and
// preference orders with ties. All operations on instances are pure.
class Instance {
 public:
  Instance(Kind kind, std::vector<AgentSpec> agents,
           std::vector<std::string> item_names,
           std::vector<PreferenceOrder> preferences);

  Kind kind() const { return kind_; }
  int agent_count() const { return static_cast<int>(agents_.size()); }
  int item_count() const { return static_cast<int>(item_names_.size()); }
  int vertex_count() const { return agent_count() + item_count(); }

  bool is_agent(Vertex v) const { return v >= 0 && v < agent_count(); }
  bool is_item(Vertex v) const {
    return v >= agent_count() && v < vertex_count();
  }

  const std::string& name(Vertex v) const;
  std::optional<Vertex> find_vertex(const std::string& name) const;

  const AgentSpec& agent(Vertex v) const;
  const Rational& weight(Vertex agent) const;
  Side side(Vertex agent) const;

  const PreferenceOrder& preferences(Vertex agent) const;
  // Γ(agent): the acceptable partners, sorted by vertex id.
  const std::vector<Vertex>& acceptable(Vertex agent) const;
  bool accepts(Vertex agent, Vertex partner) const;
  // 0-based tier rank of an acceptable partner; throws ValidationError when
  // the partner is outside Γ(agent).
  int tier_of(Vertex agent, Vertex partner) const;

  bool all_weights_equal() const;
  bool all_preferences_strict() const;

  // Every admissible edge, normalized and sorted: the canonical edge order
  // used by the enumeration oracle.
  std::vector<Edge> acceptability_edges() const;

  // Throws ValidationError if the matching uses a non-acceptable edge.
  void check_matching(const Matching& matching) const;

  bool operator==(const Instance& other) const;

 private:
  void validate() const;

  Kind kind_;
  std::vector<AgentSpec> agents_;
  std::vector<std::string> item_names_;
  std::vector<PreferenceOrder> prefs_;
  std::vector<std::vector<Vertex>> acceptable_;     // per agent, sorted
  std::vector<std::vector<int>> tier_rank_;         // per agent, by vertex id
  std::unordered_map<std::string, Vertex> by_name_;
};

// Partner lookup table for a matching: partner[v] is the matched vertex or
// kUnmatched.
std::vector<Vertex> partner_array(const Matching& matching, int vertex_count);

}  // namespace popmatch
