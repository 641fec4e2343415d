#include "popmatch/oracle.hpp"

#include <algorithm>
#include <string>

namespace popmatch {

namespace {

void enumerate_from(const std::vector<Edge>& edges, std::size_t start,
                    std::vector<Edge>& current, std::vector<char>& used,
                    std::vector<Matching>& out) {
  out.push_back(Matching(current));
  for (std::size_t i = start; i < edges.size(); ++i) {
    const auto& [u, v] = edges[i];
    if (used[u] || used[v]) continue;
    used[u] = used[v] = 1;
    current.push_back(edges[i]);
    enumerate_from(edges, i + 1, current, used, out);
    current.pop_back();
    used[u] = used[v] = 0;
  }
}

PopularityTally flipped(const PopularityTally& tally) {
  PopularityTally out;
  out.weight_for = tally.weight_against;
  out.weight_against = tally.weight_for;
  out.classification.reserve(tally.classification.size());
  for (Vote v : tally.classification) {
    switch (v) {
      case Vote::PrefersFirst:
        out.classification.push_back(Vote::PrefersSecond);
        break;
      case Vote::PrefersSecond:
        out.classification.push_back(Vote::PrefersFirst);
        break;
      case Vote::Indifferent:
        out.classification.push_back(Vote::Indifferent);
        break;
    }
  }
  return out;
}

VerificationReport verify_against(const Instance& instance,
                                  const WinningSet& candidate,
                                  const std::vector<Matching>& alternatives) {
  for (const Matching& alt : alternatives) {
    PopularityTally tally = phi(instance, candidate, alt);
    if (tally.weight_for < tally.weight_against) {
      VerificationReport report;
      report.verdict = false;
      report.witness = alt;
      report.tally = flipped(tally);
      return report;
    }
  }
  VerificationReport report;
  report.verdict = true;
  return report;
}

}  // namespace

std::vector<Matching> enumerate_matchings(const Instance& instance,
                                          const OracleLimits& limits) {
  std::vector<Edge> edges = instance.acceptability_edges();
  if (static_cast<int>(edges.size()) > limits.max_edges) {
    throw GuardExceeded("acceptability graph has " +
                        std::to_string(edges.size()) +
                        " edges, above the enumeration guard of " +
                        std::to_string(limits.max_edges));
  }
  std::vector<Matching> out;
  std::vector<Edge> current;
  std::vector<char> used(instance.vertex_count(), 0);
  enumerate_from(edges, 0, current, used, out);
  return out;
}

VerificationReport verify_winning_set(const Instance& instance,
                                      const WinningSet& candidate,
                                      const OracleLimits& limits) {
  if (candidate.matchings.empty()) {
    throw ValidationError("winning set must contain at least one matching");
  }
  for (const Matching& m : candidate.matchings) {
    instance.check_matching(m);
  }
  return verify_against(instance, candidate, enumerate_matchings(instance, limits));
}

DimensionResult popular_dimension(const Instance& instance, int max_k,
                                  const OracleLimits& limits) {
  std::vector<Matching> all = enumerate_matchings(instance, limits);
  DimensionResult result;
  result.searched_up_to = max_k;
  int n = static_cast<int>(all.size());
  for (int k = 1; k <= max_k; ++k) {
    if (k > n) break;
    // k-subsets of the enumerated matchings in lexicographic index order.
    std::vector<int> pick(k);
    for (int i = 0; i < k; ++i) pick[i] = i;
    while (true) {
      WinningSet candidate;
      for (int i : pick) candidate.matchings.push_back(all[i]);
      if (verify_against(instance, candidate, all).verdict) {
        result.dimension = k;
        result.certificate = std::move(candidate);
        return result;
      }
      int pos = k - 1;
      while (pos >= 0 && pick[pos] == n - k + pos) --pos;
      if (pos < 0) break;
      ++pick[pos];
      for (int i = pos + 1; i < k; ++i) pick[i] = pick[i - 1] + 1;
    }
  }
  return result;
}

}  // namespace popmatch
