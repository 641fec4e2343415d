#pragma once

#include <stdexcept>
#include <string>

#include "popmatch/instance.hpp"
#include "popmatch/oracle.hpp"

namespace popmatch {

struct ParseError : std::runtime_error {
  ParseError(int line, const std::string& message);

  int line;
};

// Line-oriented instance format ('#' starts a comment):
//
//   problem: house|marriage|roommates
//   agent <id> [weight <int or int/int>] [side left|right]
//   item <id>                                  (house only)
//   pref <id>: <entry> <entry> ...             (best first; an entry is an
//                                               identifier or a tie group
//                                               "(id id ...)")
//
// Identifiers are alphanumeric-plus-underscore tokens; names must be
// declared before a pref line uses them. Default weight is 1.
Instance parse_instance(const std::string& text);
std::string serialize_instance(const Instance& instance);

// One "match <id> <id>" line per edge, lines sorted; matchings of a winning
// set are separated by a "---" line. An empty section is the empty matching.
Matching parse_matching(const Instance& instance, const std::string& text);
WinningSet parse_winning_set(const Instance& instance, const std::string& text);
std::string serialize_matching(const Instance& instance, const Matching& m);
std::string serialize_winning_set(const Instance& instance,
                                  const WinningSet& ws);

// "VERIFIED", or "DEFEATED" followed by the witness tally ("for"/"against",
// oriented at the witness) and the witness edges.
std::string serialize_report(const Instance& instance,
                             const VerificationReport& report);

}  // namespace popmatch
