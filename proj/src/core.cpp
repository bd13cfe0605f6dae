#include "lgw/core.hpp"

#include <algorithm>
#include <array>

namespace lgw {
namespace {

// 128-bit mixing in two independent 64-bit lanes; collisions are backed up by
// deep structural comparison everywhere, so this only needs to be well spread.
inline uint64_t mix(uint64_t x) {
  x += 0x9e3779b97f4a7c15ull;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
  return x ^ (x >> 31);
}

inline uint64_t combine(uint64_t seed, uint64_t v) {
  return mix(seed ^ (v + 0x2545f4914f6cdd1dull + (seed << 6) + (seed >> 2)));
}

uint64_t hash_bytes(const std::string& s, uint64_t seed) {
  uint64_t h = seed;
  for (unsigned char c : s) h = combine(h, c);
  return combine(h, s.size());
}

// counts := a + sign * b, keeping the atom-sorted invariant.
AtomCounts merge_counts(const AtomCounts& a, const AtomCounts& b, bool flip_b) {
  AtomCounts out;
  out.reserve(a.size() + b.size());
  size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && a[i].atom < b[j].atom)) {
      out.push_back(a[i++]);
    } else if (i == a.size() || b[j].atom < a[i].atom) {
      AtomCount c = b[j++];
      if (flip_b) std::swap(c.input, c.output);
      out.push_back(c);
    } else {
      AtomCount c = a[i++];
      const AtomCount& d = b[j++];
      c.input += flip_b ? d.output : d.input;
      c.output += flip_b ? d.input : d.output;
      out.push_back(c);
    }
  }
  return out;
}

// Does the child at `child` keep or flip the parent's variance?
//   prod, coprod: both keep.  under: divisor (0) flips.  over: divisor (1)
//   flips.  rdiff: right (1) flips.  ldiff: left (0) flips.
bool child_flips(Conn f, int child) {
  switch (f) {
    case Conn::Prod:
    case Conn::Coprod: return false;
    case Conn::Under: return child == 0;
    case Conn::Over: return child == 1;
    case Conn::Rdiff: return child == 1;
    case Conn::Ldiff: return child == 0;
  }
  return false;
}

}  // namespace

const char* conn_name(Conn f) {
  switch (f) {
    case Conn::Prod: return "prod";
    case Conn::Under: return "under";
    case Conn::Over: return "over";
    case Conn::Coprod: return "coprod";
    case Conn::Rdiff: return "rdiff";
    case Conn::Ldiff: return "ldiff";
  }
  return "?";
}

const char* conn_symbol(Conn f) {
  switch (f) {
    case Conn::Prod: return "*";
    case Conn::Under: return "\\";
    case Conn::Over: return "/";
    case Conn::Coprod: return "+";
    case Conn::Rdiff: return "-<";
    case Conn::Ldiff: return ">-";
  }
  return "?";
}

Polarity child_polarity(Conn f, int child) {
  // Side of the node is determined by the family; children polarities follow
  // the residuation pattern.
  switch (f) {
    case Conn::Prod: return Polarity::Input;
    case Conn::Coprod: return Polarity::Output;
    case Conn::Rdiff: return child == 0 ? Polarity::Input : Polarity::Output;
    case Conn::Ldiff: return child == 0 ? Polarity::Output : Polarity::Input;
    case Conn::Under: return child == 0 ? Polarity::Input : Polarity::Output;
    case Conn::Over: return child == 0 ? Polarity::Output : Polarity::Input;
  }
  return Polarity::Input;
}

std::optional<Conn> infer_family(Polarity side, Polarity left, Polarity right) {
  for (Conn f : kAllConns) {
    Polarity fs = family_is_input(f) ? Polarity::Input : Polarity::Output;
    if (fs == side && child_polarity(f, 0) == left && child_polarity(f, 1) == right)
      return f;
  }
  return std::nullopt;
}

FormulaPtr make_atom(const std::string& name) {
  auto f = std::make_shared<Formula>();
  f->atom = name;
  f->h1 = hash_bytes(name, 0x8f3a9b1dull);
  f->h2 = hash_bytes(name, 0x51d2c4e7ull);
  f->conn_count = 0;
  f->counts = {{name, 1, 0}};
  return f;
}

FormulaPtr make_formula(Conn c, FormulaPtr l, FormulaPtr r) {
  auto f = std::make_shared<Formula>();
  f->conn = c;
  f->left = std::move(l);
  f->right = std::move(r);
  uint64_t tag = static_cast<uint64_t>(c) + 11;
  f->h1 = combine(combine(combine(0xa11ce5u, tag), f->left->h1), f->right->h1);
  f->h2 = combine(combine(combine(0xb0b5e5u, tag * 7), f->left->h2), f->right->h2);
  f->conn_count = 1 + f->left->conn_count + f->right->conn_count;
  // Formula counts are taken at input variance of the whole formula; a child
  // that flips contributes with input/output swapped.
  f->counts = merge_counts(f->left->counts, {}, false);
  if (child_flips(c, 0)) {
    for (auto& a : f->counts) std::swap(a.input, a.output);
  }
  f->counts = merge_counts(f->counts, f->right->counts, child_flips(c, 1));
  return f;
}

bool equal(const FormulaPtr& a, const FormulaPtr& b) {
  if (a.get() == b.get()) return true;
  if (a->h1 != b->h1 || a->h2 != b->h2) return false;
  if (a->is_atom() != b->is_atom()) return false;
  if (a->is_atom()) return a->atom == b->atom;
  return a->conn == b->conn && equal(a->left, b->left) && equal(a->right, b->right);
}

StructPtr make_leaf(FormulaPtr f) {
  auto s = std::make_shared<Structure>();
  s->h1 = combine(0x1eafu, f->h1);
  s->h2 = combine(0x1eaf7u, f->h2);
  s->leaf_count = 1;
  s->conn_count = f->conn_count;
  s->valid_input = s->valid_output = true;
  s->counts = f->counts;
  s->leaf = std::move(f);
  return s;
}

StructPtr make_node(Conn family, DotKind dot, StructPtr l, StructPtr r) {
  auto s = std::make_shared<Structure>();
  s->family = family;
  s->dot = dot;
  s->left = std::move(l);
  s->right = std::move(r);
  uint64_t tag = (static_cast<uint64_t>(family) << 1) | (dot == DotKind::Pure ? 1 : 0);
  s->h1 = combine(combine(combine(0x57c7u, tag), s->left->h1), s->right->h1);
  s->h2 = combine(combine(combine(0x57c72u, tag * 13), s->left->h2), s->right->h2);
  s->leaf_count = s->left->leaf_count + s->right->leaf_count;
  s->conn_count = s->left->conn_count + s->right->conn_count;
  s->has_pure = (dot == DotKind::Pure) || s->left->has_pure || s->right->has_pure;

  auto ok_child = [&](const StructPtr& c, int i) {
    Polarity p = child_polarity(family, i);
    return p == Polarity::Input ? c->valid_input : c->valid_output;
  };
  bool kids = ok_child(s->left, 0) && ok_child(s->right, 1);
  s->valid_input = kids && family_is_input(family);
  s->valid_output = kids && !family_is_input(family);

  // Every structure stores counts for the hypothetical input-side reading; a
  // child used at output polarity contributes flipped.
  AtomCounts lc = s->left->counts;
  if (child_polarity(family, 0) == Polarity::Output) {
    for (auto& a : lc) std::swap(a.input, a.output);
  }
  s->counts = merge_counts(lc, s->right->counts,
                           child_polarity(family, 1) == Polarity::Output);
  if (!family_is_input(family)) {
    for (auto& a : s->counts) std::swap(a.input, a.output);
  }
  return s;
}

bool equal(const StructPtr& a, const StructPtr& b) {
  if (a.get() == b.get()) return true;
  if (a->h1 != b->h1 || a->h2 != b->h2) return false;
  if (a->is_leaf() != b->is_leaf()) return false;
  if (a->is_leaf()) return equal(a->leaf, b->leaf);
  return a->family == b->family && a->dot == b->dot && equal(a->left, b->left) &&
         equal(a->right, b->right);
}

bool valid_as(const StructPtr& s, Polarity side) {
  return side == Polarity::Input ? s->valid_input : s->valid_output;
}

uint64_t Sequent::hash() const {
  return combine(combine(0x5e9u, ant->h1 ^ (ant->h2 << 1)),
                 suc->h1 ^ (suc->h2 >> 1));
}

bool Sequent::valid() const {
  return ant && suc && ant->valid_input && suc->valid_output;
}

bool equal(const Sequent& a, const Sequent& b) {
  return equal(a.ant, b.ant) && equal(a.suc, b.suc);
}

bool balanced(const Sequent& s) {
  // Stored counts assume the input-side reading, so the succedent's must be
  // flipped; then every atom's input total has to match its output total.
  AtomCounts suc = s.suc->counts;
  for (auto& a : suc) std::swap(a.input, a.output);
  size_t i = 0, j = 0;
  const AtomCounts& ant = s.ant->counts;
  while (i < ant.size() || j < suc.size()) {
    int in = 0, out = 0;
    if (j == suc.size() || (i < ant.size() && ant[i].atom < suc[j].atom)) {
      in = ant[i].input;
      out = ant[i].output;
      ++i;
    } else if (i == ant.size() || suc[j].atom < ant[i].atom) {
      in = suc[j].input;
      out = suc[j].output;
      ++j;
    } else {
      in = ant[i].input + suc[j].input;
      out = ant[i].output + suc[j].output;
      ++i;
      ++j;
    }
    if (in != out) return false;
  }
  return true;
}

StructPtr erase_pure(const StructPtr& s) {
  if (!s->has_pure) return s;
  if (s->is_leaf()) return s;
  return make_node(s->family, DotKind::Solid, erase_pure(s->left), erase_pure(s->right));
}

Sequent erase_pure(const Sequent& s) {
  return {erase_pure(s.ant), erase_pure(s.suc)};
}

namespace {
void collect_leaves(const StructPtr& s, std::vector<FormulaPtr>& out) {
  if (s->is_leaf()) {
    out.push_back(s->leaf);
    return;
  }
  collect_leaves(s->left, out);
  collect_leaves(s->right, out);
}
}  // namespace

std::vector<FormulaPtr> sequent_leaves(const Sequent& s) {
  std::vector<FormulaPtr> out;
  out.reserve(static_cast<size_t>(s.leaf_count()));
  collect_leaves(s.ant, out);
  collect_leaves(s.suc, out);
  return out;
}

std::string polarity_diagnostic(const StructPtr& s, Polarity side) {
  if (s->is_leaf()) return "";
  Polarity fs = family_is_input(s->family) ? Polarity::Input : Polarity::Output;
  if (fs != side) {
    std::string want = side == Polarity::Input ? "antecedent" : "succedent";
    return std::string(conn_name(s->family)) + " node not permitted in " + want +
           " position";
  }
  std::string d = polarity_diagnostic(s->left, child_polarity(s->family, 0));
  if (!d.empty()) return d;
  return polarity_diagnostic(s->right, child_polarity(s->family, 1));
}

}  // namespace lgw
