#pragma once

// Derivation trees, the independent checker, erasure to the all-solid
// calculus, and two interchangeable serializations (indented text and JSON).

#include <string>
#include <vector>

#include "lgw/rules.hpp"

namespace lgw {

struct Derivation {
  RuleId rule = RuleId::Ax;
  Sequent conclusion;
  std::vector<Derivation> children;  // one per schema premise, in order
};

struct CheckReport {
  bool ok = true;
  std::string where;    // path of the first failing node, e.g. "root.1.0"
  std::string message;  // empty when ok
};

// Verifies every node against the logic's schemas; children supply the
// premises, so tree wiring and schema conformance are one and the same check.
CheckReport check_derivation(const Derivation& d, const Logic& logic);

// Pure-erasing homomorphism on whole derivations: sequents lose their pure
// dots, weak rules map to their solid counterparts, weakening steps vanish.
Derivation erase_derivation(const Derivation& d);

size_t derivation_size(const Derivation& d);  // node count

// Text form: one node per line as "rule: sequent", children indented two
// spaces under their parent.
std::string derivation_to_text(const Derivation& d);
Derivation derivation_from_text(const std::string& text);  // throws ParseError

std::string derivation_to_json(const Derivation& d);  // pretty-printed
Derivation derivation_from_json(const std::string& text);

}  // namespace lgw
