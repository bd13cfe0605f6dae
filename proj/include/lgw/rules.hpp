#pragma once

// Rule schemas for the six logics and their root-level forward application /
// backward inversion.  Backward reading: premises_of(goal) lists the
// premise-lists from which the goal follows in one step; display rules
// contribute both directions, Grishin rules map the lower sequent to the
// upper one, weakening maps a pure root to its solid form.

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "lgw/core.hpp"

namespace lgw {

enum class RuleId : uint8_t {
  Ax,
  Cut,
  MonProd,
  MonOver,
  MonUnder,
  MonCoprod,
  MonRdiff,
  MonLdiff,
  RpA,
  RpB,
  DrpA,
  DrpB,
  WrpA,
  WrpB,
  WdrpA,
  WdrpB,
  WkProd,
  WkRdiff,
  WkLdiff,
  WkCoprod,
  WkUnder,
  WkOver,
  G1,
  G2,
  G3,
  G4,
  G1L,
  G1R,
  G2L,
  G2R,
  G3L,
  G3R,
  G4L,
  G4R,
  RewlProd,
  RewlRdiff,
  RewlLdiff,
  RewrCoprod,
  RewrOver,
  RewrUnder,
};

constexpr size_t kRuleCount = 40;

const char* rule_name(RuleId r);
std::optional<RuleId> rule_from_name(const std::string& name);

// Logical rules consume a connective (Ax, Mon*, Rew*); everything else is
// structural and preserves the leaf-formula multiset.
bool is_logical(RuleId r);

using PremiseList = std::vector<Sequent>;  // 0, 1, or 2 entries, ordered

std::vector<PremiseList> premises_of(RuleId r, const Sequent& goal);
// Forward direction, the inverse relation of premises_of.  Ax is not
// enumerable forward (any A |- A) and yields the empty set.
std::vector<Sequent> apply(RuleId r, const PremiseList& premises);

struct RuleInstance {
  RuleId rule = RuleId::Ax;
  Sequent conclusion;
  PremiseList premises;
};

struct Logic {
  std::string name;
  bool pure_allowed = false;  // may sequents contain pure nodes at all
  std::array<bool, kRuleCount> has{};

  bool contains(RuleId r) const { return has[static_cast<size_t>(r)]; }
};

// Preset names: nl, lg0, lg, hlg0, hlg, hlg-dot.  Cut belongs to none.
const Logic* logic_by_name(const std::string& name);
const std::vector<const Logic*>& all_logics();

// True iff the instance's rule belongs to the logic and the instance matches
// the rule schema exactly; `why` (optional) receives a diagnostic on failure.
bool check(const RuleInstance& inst, const Logic& logic,
           std::string* why = nullptr);

// Image of a rule under the pure-erasing homomorphism: weak displays map to
// their solid forms, dotted Grishin variants to the solid base, weakenings
// vanish (nullopt), everything else is fixed.
std::optional<RuleId> erased_rule(RuleId r);

struct RuleDoc {
  RuleId rule;
  std::string name;
  std::string schema;               // premises / conclusion, rendered in core syntax
  std::vector<std::string> logics;  // presets containing the rule
};
const std::vector<RuleDoc>& rule_table();

}  // namespace lgw
