#pragma once

// Concrete syntax.  Atoms are [a-z][a-z0-9']*.  Formula connectives are
// written * \ / + -< >- ; structural nodes wrap the same symbol in dots
// (solid: .*. etc.) or in o's (pure: o*o etc.).  Each parenthesization level
// holds at most one binary operator; the top level of a side, and of a
// standalone formula, may be bare.  A side consisting of a single leaf prints
// its formula bare; composite leaf formulas inside a structure are
// parenthesized.

#include <stdexcept>
#include <string>

#include "lgw/core.hpp"

namespace lgw {

struct ParseError : std::runtime_error {
  size_t pos;  // byte offset into the input (0 when not applicable)
  ParseError(size_t at, const std::string& what)
      : std::runtime_error("column " + std::to_string(at + 1) + ": " + what),
        pos(at) {}
  explicit ParseError(const std::string& what)
      : std::runtime_error(what), pos(0) {}
};

FormulaPtr parse_formula(const std::string& text);
// Parses "ant |- suc"; validates the polarity grammar on both sides unless
// `validate` is false (raw trees are still well-formed syntax).
Sequent parse_sequent(const std::string& text, bool validate = true);

std::string print_formula(const FormulaPtr& f);
std::string print_structure(const StructPtr& s);  // root-level, bare
std::string print_sequent(const Sequent& s);

}  // namespace lgw
