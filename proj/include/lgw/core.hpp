#pragma once

// Core term language: formulas over the six binary connectives, structures
// (punctuated trees with solid or pure nodes), and two-sided sequents.
// Values are immutable shared trees; equality is structural with a cached
// 128-bit hash as a fast path.

#include <cstdint>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace lgw {

// The six binary connectives double as structural node families.
enum class Conn : uint8_t { Prod, Under, Over, Coprod, Rdiff, Ldiff };

enum class DotKind : uint8_t { Solid, Pure };

enum class Polarity : uint8_t { Input, Output };

constexpr Conn kAllConns[6] = {Conn::Prod,   Conn::Under, Conn::Over,
                               Conn::Coprod, Conn::Rdiff, Conn::Ldiff};

// Input-forming families may root an antecedent, output-forming a succedent.
inline bool family_is_input(Conn f) {
  return f == Conn::Prod || f == Conn::Rdiff || f == Conn::Ldiff;
}

const char* conn_name(Conn f);          // "prod", "under", ...
const char* conn_symbol(Conn f);        // "*", "\\", "/", "+", "-<", ">-"

// Polarity of a node's children, indexed by the node's own side.
//   antecedent: prod(in,in)  rdiff(in,out)  ldiff(out,in)
//   succedent:  coprod(out,out)  under(in,out)  over(out,in)
Polarity child_polarity(Conn f, int child);

// The unique family a (side, left-polarity, right-polarity) triple admits.
std::optional<Conn> infer_family(Polarity side, Polarity left, Polarity right);

// Signed atom-occurrence counts; `input`/`output` count occurrences whose
// effective polarity (variance along the path) is input resp. output when the
// owning tree is read at input polarity.
struct AtomCount {
  std::string atom;
  int input = 0;
  int output = 0;
};
using AtomCounts = std::vector<AtomCount>;  // sorted by atom

struct Formula;
using FormulaPtr = std::shared_ptr<const Formula>;

struct Formula {
  // Atom iff left == nullptr.
  std::string atom;
  Conn conn = Conn::Prod;
  FormulaPtr left, right;

  uint64_t h1 = 0, h2 = 0;
  int conn_count = 0;
  AtomCounts counts;  // occurrences, formula read at input polarity

  bool is_atom() const { return left == nullptr; }
};

FormulaPtr make_atom(const std::string& name);
// under(divisor, result) is written divisor \ result; over(result, divisor)
// is written result / divisor; rdiff and ldiff in written order.
FormulaPtr make_formula(Conn c, FormulaPtr l, FormulaPtr r);

bool equal(const FormulaPtr& a, const FormulaPtr& b);

struct Structure;
using StructPtr = std::shared_ptr<const Structure>;

struct Structure {
  FormulaPtr leaf;  // set iff this is a leaf
  Conn family = Conn::Prod;
  DotKind dot = DotKind::Solid;
  StructPtr left, right;

  uint64_t h1 = 0, h2 = 0;
  int leaf_count = 0;
  int conn_count = 0;  // logical connectives in leaf formulas
  bool has_pure = false;
  bool valid_input = false;
  bool valid_output = false;
  AtomCounts counts;  // for the unique valid reading (leaves: input reading)

  bool is_leaf() const { return leaf != nullptr; }
};

StructPtr make_leaf(FormulaPtr f);
StructPtr make_node(Conn family, DotKind dot, StructPtr l, StructPtr r);

bool equal(const StructPtr& a, const StructPtr& b);
bool valid_as(const StructPtr& s, Polarity side);

struct Sequent {
  StructPtr ant, suc;

  uint64_t hash() const;
  bool valid() const;
  bool has_pure() const { return ant->has_pure || suc->has_pure; }
  int conn_count() const { return ant->conn_count + suc->conn_count; }
  int leaf_count() const { return ant->leaf_count + suc->leaf_count; }
};

bool equal(const Sequent& a, const Sequent& b);

struct SequentHash {
  size_t operator()(const Sequent& s) const { return static_cast<size_t>(s.hash()); }
};
struct SequentEq {
  bool operator()(const Sequent& a, const Sequent& b) const { return equal(a, b); }
};

// Every atom occurs as often with input as with output polarity in any
// provable sequent; a cheap necessary condition used to prune search.
bool balanced(const Sequent& s);

// Replace every pure node by its solid counterpart.
StructPtr erase_pure(const StructPtr& s);
Sequent erase_pure(const Sequent& s);

// Leaf formulas in sequent order: antecedent left-to-right, then succedent.
std::vector<FormulaPtr> sequent_leaves(const Sequent& s);

// First polarity violation along a walk, or empty string if valid.
std::string polarity_diagnostic(const StructPtr& s, Polarity side);

}  // namespace lgw
