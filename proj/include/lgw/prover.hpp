#pragma once

// Terminating cut-free backward proof search.  Strategy: stratify on the
// connective count (logical rules consume exactly one connective, structural
// rules none); within a stratum walk the finite structural closure of the
// goal breadth-first, trying the logical rules at every member; memoize
// provability per sequent.  The closure is finite because structural rules
// preserve the leaf-formula multiset and node count while pure dots can only
// flip to solid going up.  The analytic-cut mode additionally tries cut on
// subformulas of the original goal, with cycle detection instead of the
// stratum measure.

#include <chrono>
#include <cstdint>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "lgw/derivation.hpp"
#include "lgw/rules.hpp"

namespace lgw {

struct SearchLimits {
  uint64_t max_visited = 2'000'000;  // closure members expanded per query
  double max_seconds = 50.0;
  int max_connectives = 64;  // guard on goal size

  static SearchLimits unlimited();
};

struct SearchStats {
  uint64_t visited = 0;
  uint64_t memo_hits = 0;
};

enum class Verdict { Provable, Unprovable, ResourceExceeded };

struct SearchResult {
  Verdict verdict = Verdict::Unprovable;
  std::optional<Derivation> derivation;  // set iff provable
  std::string limit_name;                // set iff resource_exceeded
  SearchStats stats;
};

// Search state is reusable across queries of the same logic: the memo table
// persists between prove() calls (except in analytic-cut mode, where cached
// refutations would be relative to the previous goal's cut-formula set).
// Not thread-safe; use one Prover per thread.
class Prover {
 public:
  explicit Prover(const Logic& logic, SearchLimits limits = {},
                  bool analytic_cut = false);

  // Goal must be polarity-valid (throws std::invalid_argument otherwise).
  // Deterministic: fixed rule trial order, breadth-first closure order.
  SearchResult prove(const Sequent& goal);

  void clear_memo();
  size_t memo_size() const { return memo_.size(); }
  const Logic& logic() const { return logic_; }

 private:
  struct Entry {
    enum State : uint8_t { Proved, Disproved, InProgress } state;
    int depth = 0;             // recursion depth while InProgress
    RuleId rule = RuleId::Ax;  // recipe while Proved
    PremiseList premises;
  };
  struct Outcome {
    bool proved;
    int fail_mindepth;  // smallest InProgress depth the failure leans on
  };

  Outcome solve(const Sequent& goal, int depth, bool allow_cut);
  Derivation build(const Sequent& s) const;
  void set_proved(const Sequent& s, RuleId r, PremiseList ps);
  void bump();

  const Logic& logic_;
  SearchLimits limits_;
  bool analytic_cut_;
  std::unordered_map<Sequent, Entry, SequentHash, SequentEq> memo_;
  std::vector<FormulaPtr> cut_formulas_;  // subformulas of the current goal
  SearchStats stats_;
  std::chrono::steady_clock::time_point started_;
};

// Convenience wrappers building a fresh Prover per call.
SearchResult prove(const Sequent& goal, const Logic& logic,
                   SearchLimits limits = {});
SearchResult prove_with_analytic_cut(const Sequent& goal, const Logic& logic,
                                     SearchLimits limits = {});

// The logic extended with Cut, for checking analytic-mode derivations.
Logic with_cut(const Logic& logic);

}  // namespace lgw
