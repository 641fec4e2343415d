#pragma once

#include <optional>
#include <stdexcept>
#include <vector>

#include "popmatch/instance.hpp"
#include "popmatch/popularity.hpp"

namespace popmatch {

// Enumeration is exponential in the edge count; the guard makes oversized
// requests fail loudly instead of hanging.
struct OracleLimits {
  int max_edges = 16;
};

struct GuardExceeded : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Every matching of the acceptability graph, the empty matching included, in
// canonical order: lexicographic by sorted edge list.
std::vector<Matching> enumerate_matchings(const Instance& instance,
                                          const OracleLimits& limits = {});

struct VerificationReport {
  bool verdict = false;
  std::optional<Matching> witness;       // first defeating alternative
  std::optional<PopularityTally> tally;  // phi(witness, candidate)
};

// Ground-truth check: the candidate is a popular winning set iff no
// enumerated matching beats it in the weighted vote. The witness, when one
// exists, is the canonically first defeating matching.
VerificationReport verify_winning_set(const Instance& instance,
                                      const WinningSet& candidate,
                                      const OracleLimits& limits = {});

struct DimensionResult {
  std::optional<int> dimension;          // nullopt: every k <= searched failed
  int searched_up_to = 0;
  std::optional<WinningSet> certificate;
};

// Exact popular dimension by exhaustive subset search over enumerated
// matchings, k = 1..max_k. The certificate is the canonically first winning
// set of minimum cardinality.
DimensionResult popular_dimension(const Instance& instance, int max_k,
                                  const OracleLimits& limits = {});

}  // namespace popmatch
