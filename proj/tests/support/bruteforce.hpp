#pragma once

// Independent reference prover for small sequents: plain depth-first
// backward search over all rule instances, terminating purely by blocking
// sequent repetition along the current branch.  Shares no search strategy,
// memoization, or stratification with the library prover.

#include <unordered_set>

#include "lgw/rules.hpp"

namespace lgw::test {

using Path = std::unordered_set<Sequent, SequentHash, SequentEq>;

inline bool oracle_solve(const Sequent& goal, const Logic& logic, Path& path) {
  if (!path.insert(goal).second) return false;
  bool proved = false;
  for (size_t i = 0; i < kRuleCount && !proved; ++i) {
    RuleId r = static_cast<RuleId>(i);
    if (r == RuleId::Cut || !logic.contains(r)) continue;
    for (const PremiseList& pl : premises_of(r, goal)) {
      bool all = true;
      for (const Sequent& p : pl)
        if (!oracle_solve(p, logic, path)) {
          all = false;
          break;
        }
      if (all) {
        proved = true;
        break;
      }
    }
  }
  path.erase(goal);
  return proved;
}

inline bool oracle_provable(const Sequent& goal, const Logic& logic) {
  Path path;
  return oracle_solve(goal, logic, path);
}

}  // namespace lgw::test
