#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include <lgw/core.hpp>
#include <lgw/derivation.hpp>
#include <lgw/prover.hpp>
#include <lgw/rules.hpp>

namespace lgw {

// A lexicon assigns each word a nonempty set of formulas and names a goal
// atom.  Words live in a namespace disjoint from the atoms that occur in the
// assigned formulas.
struct Lexicon {
  std::string goal;
  // Sorted by word; each entry's formulas sorted by printed form, deduped.
  std::vector<std::pair<std::string, std::vector<FormulaPtr>>> entries;

  const std::vector<FormulaPtr>* find(const std::string& word) const;
  std::vector<std::string> words() const;
};

// Text format: '#' starts a comment; first content line is "goal: <atom>";
// every further line is "word: <formula>" (words may repeat to accumulate
// alternative types).  Throws ParseError on malformed input.
Lexicon parse_lexicon(const std::string& text);
Lexicon load_lexicon(const std::string& path);  // throws std::runtime_error on IO failure
std::string print_lexicon(const Lexicon& lex);

using Sentence = std::vector<std::string>;

// Binary bracketing over word positions [0, n).
struct BracketTree {
  int pos = -1;  // leaf position when >= 0
  std::shared_ptr<const BracketTree> left, right;
  bool is_leaf() const { return pos >= 0; }
};
using BracketPtr = std::shared_ptr<const BracketTree>;

// All binary trees over n ordered leaves, fully right-nested first.
// Catalan(n-1) results.
std::vector<BracketPtr> bracketings(int n);
std::string print_bracketing(const BracketTree& b, const Sentence& s);

// The sequent a sentence reading denotes: the bracketed product of the chosen
// types on the left (product nodes carry `dot`), the goal atom on the right.
Sequent sentence_sequent(const std::vector<FormulaPtr>& assignment,
                         const BracketPtr& bracketing, const std::string& goal,
                         DotKind dot);

// Product-node dot used for a logic's sentence sequents: pure when the logic
// admits purely structural connectives, solid otherwise.
DotKind sentence_dot(const Logic& logic);

enum class RecogOutcome { Yes, No, Undecided };

struct RecognitionWitness {
  std::vector<FormulaPtr> assignment;  // one type per word position
  BracketPtr bracketing;
  Sequent sequent;
  Derivation derivation;
};

struct Recognition {
  RecogOutcome outcome = RecogOutcome::No;
  std::optional<RecognitionWitness> witness;  // set when outcome == Yes
  std::string limit_name;     // first limit hit when outcome == Undecided
  std::string diagnostic;     // e.g. unknown word
  std::uint64_t attempts = 0;           // sequents actually searched
  std::uint64_t attempts_exceeded = 0;  // searches that hit a resource limit
};

// Decides membership by exhaustive search over type assignments (ordered
// lexicographically by the per-word sorted type lists) and bracketings
// (right-nested first); the first provable pair yields the witness.
// The Prover overload shares its memo table across calls; the prover's logic
// decides the product dot.
Recognition recognize(const Lexicon& lex, const Sentence& s, Prover& prover);
Recognition recognize(const Lexicon& lex, const Sentence& s, const Logic& logic,
                      const SearchLimits& limits = {});

struct LanguageSample {
  std::vector<Sentence> recognized;  // in (length, lexicographic) order
  std::vector<Sentence> undecided;   // searches cut off by resource limits
};

// Exhaustive sample of the recognized language up to max_len words.
LanguageSample sample_language(const Lexicon& lex, const Logic& logic, int max_len,
                               const SearchLimits& limits = {});

struct LanguageComparison {
  enum class Kind { Equal, Divergent, Inconclusive } kind = Kind::Equal;
  std::optional<Sentence> divergent;  // first string with definitely differing verdicts
  bool divergent_in_a = false;        // true: recognized by A only; false: by B only
  std::uint64_t undecided = 0;        // strings undecided in either logic
  std::optional<Sentence> first_undecided;
};

// Compares the recognized languages of two logics over the same lexicon.
// Equal requires coinciding samples with zero undecided strings.
LanguageComparison compare_languages(const Lexicon& lex, const Logic& a, const Logic& b,
                                     int max_len, const SearchLimits& limits = {});

}  // namespace lgw
