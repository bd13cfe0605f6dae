#include <doctest.h>

#include <string>
#include <vector>

#include "lgw/syntax.hpp"

using namespace lgw;

TEST_CASE("formula parsing and printing round-trips") {
  std::vector<std::string> forms = {
      "a",
      "a'",
      "np2",
      "a * b",
      "a \\ b",
      "a / b",
      "a + b",
      "a -< b",
      "a >- b",
      "(a * b) * c",
      "a * (b * c)",
      "(s -< s) >- (np \\ s)",
      "(vp -< (np \\ (np \\ s))) >- vp2",
  };
  for (const auto& t : forms) {
    CAPTURE(t);
    FormulaPtr f = parse_formula(t);
    CHECK(print_formula(f) == t);
    CHECK(equal(parse_formula(print_formula(f)), f));
  }
}

TEST_CASE("one operator per parenthesization level") {
  CHECK_THROWS_AS(parse_formula("a * b * c"), ParseError);
  CHECK_THROWS_AS(parse_formula("a \\ b / c"), ParseError);
  CHECK_NOTHROW(parse_formula("(a * b) * c"));
}

TEST_CASE("sequent parsing, dots, and printing") {
  std::vector<std::string> seqs = {
      "a |- a",
      "a .*. b |- a * b",
      "a o*o b |- a * b",
      "b |- a .\\. (a * b)",
      "a |- (a * b) ./. b",
      "a .-<. b |- a -< b",
      "a >- b |- c .+. d",
      "(a \\ b) .*. a |- b",
      "np o*o (np \\ s) |- s",
      "(s -< s) .>-. (np \\ s) |- np o\\o s",
      "a o-<o (b o>-o c) |- d",
  };
  for (const auto& t : seqs) {
    CAPTURE(t);
    Sequent s = parse_sequent(t, false);
    CHECK(print_sequent(s) == t);
  }
}

TEST_CASE("sequent validation rejects misplaced families") {
  // Product punctuation on the succedent is not output-valid.
  CHECK_THROWS_AS(parse_sequent("a |- a .*. b"), ParseError);
  // Coproduct punctuation on the antecedent is not input-valid.
  CHECK_THROWS_AS(parse_sequent("a .+. b |- a"), ParseError);
  // Child polarity: rdiff wants its right child output-shaped.
  CHECK_THROWS_AS(parse_sequent("a .-<. (b .*. c) |- d"), ParseError);
  CHECK_NOTHROW(parse_sequent("a .-<. (b .+. c) |- d"));
  // validate=false admits the raw trees.
  CHECK_NOTHROW(parse_sequent("a |- a .*. b", false));
}

TEST_CASE("parse errors carry positions") {
  try {
    parse_formula("a * ");
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(std::string(e.what()).find("column") != std::string::npos);
  }
  CHECK_THROWS_AS(parse_sequent("a a |- b"), ParseError);
  CHECK_THROWS_AS(parse_sequent("a |- "), ParseError);
  CHECK_THROWS_AS(parse_sequent("a"), ParseError);
  CHECK_THROWS_AS(parse_sequent("A |- a"), ParseError);
  CHECK_THROWS_AS(parse_formula("(a * b"), ParseError);
  CHECK_THROWS_AS(parse_formula(""), ParseError);
}

TEST_CASE("solid and pure punctuation are distinct trees") {
  Sequent solid = parse_sequent("a .*. b |- a * b");
  Sequent pure = parse_sequent("a o*o b |- a * b");
  CHECK_FALSE(equal(solid, pure));
  CHECK(solid.ant->dot == DotKind::Solid);
  CHECK(pure.ant->dot == DotKind::Pure);
  CHECK(pure.has_pure());
  CHECK_FALSE(solid.has_pure());
}
