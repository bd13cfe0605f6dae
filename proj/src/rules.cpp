#include "lgw/rules.hpp"

#include <unordered_map>

#include "lgw/syntax.hpp"

namespace lgw {
namespace {

constexpr const char* kRuleNames[kRuleCount] = {
    "ax",       "cut",        "mon_prod",   "mon_over",   "mon_under",
    "mon_coprod", "mon_rdiff", "mon_ldiff",  "rp_a",       "rp_b",
    "drp_a",    "drp_b",      "wrp_a",      "wrp_b",      "wdrp_a",
    "wdrp_b",   "wk_prod",    "wk_rdiff",   "wk_ldiff",   "wk_coprod",
    "wk_under", "wk_over",    "g1",         "g2",         "g3",
    "g4",       "g1l",        "g1r",        "g2l",        "g2r",
    "g3l",      "g3r",        "g4l",        "g4r",        "rewl_prod",
    "rewl_rdiff", "rewl_ldiff", "rewr_coprod", "rewr_over", "rewr_under",
};

bool is_node(const StructPtr& s, Conn f, DotKind d) {
  return !s->is_leaf() && s->family == f && s->dot == d;
}

// --- backward helpers -------------------------------------------------------

// Mon: conclusion pairs the solid structural node with the matching formula
// displayed on the other side; premise i carries argument i, put on the side
// dictated by that argument's polarity.
void mon_back(Conn f, const Sequent& g, std::vector<PremiseList>& out) {
  bool left_node = family_is_input(f);
  const StructPtr& node = left_node ? g.ant : g.suc;
  const StructPtr& form = left_node ? g.suc : g.ant;
  if (!form->is_leaf() || form->leaf->is_atom() || form->leaf->conn != f) return;
  if (!is_node(node, f, DotKind::Solid)) return;
  const StructPtr kids[2] = {node->left, node->right};
  const FormulaPtr args[2] = {form->leaf->left, form->leaf->right};
  PremiseList ps;
  for (int i = 0; i < 2; ++i) {
    if (child_polarity(f, i) == Polarity::Input)
      ps.push_back({kids[i], make_leaf(args[i])});
    else
      ps.push_back({make_leaf(args[i]), kids[i]});
  }
  out.push_back(std::move(ps));
}

// Rewrite: a displayed formula unfolds one level into the solid node over
// leaf children.
void rew_back(Conn f, const Sequent& g, std::vector<PremiseList>& out) {
  bool left = family_is_input(f);
  const StructPtr& side = left ? g.ant : g.suc;
  if (!side->is_leaf() || side->leaf->is_atom() || side->leaf->conn != f) return;
  StructPtr node = make_node(f, DotKind::Solid, make_leaf(side->leaf->left),
                             make_leaf(side->leaf->right));
  out.push_back({left ? Sequent{node, g.suc} : Sequent{g.ant, node}});
}

// Displays, both reading directions; the product (resp. coproduct) form is
// the pivot each slash form pairs with.
//   rp_a:  A ?*? B |- C   <=>  B |- A ?\? C
//   rp_b:  A ?*? B |- C   <=>  A |- C ?/? B
//   drp_a: C |- B ?+? A   <=>  C ?-<? A |- B
//   drp_b: C |- B ?+? A   <=>  B ?>-? C |- A
void rp_a(DotKind d, const Sequent& g, std::vector<PremiseList>& out) {
  if (is_node(g.ant, Conn::Prod, d))
    out.push_back({{g.ant->right, make_node(Conn::Under, d, g.ant->left, g.suc)}});
  if (is_node(g.suc, Conn::Under, d))
    out.push_back({{make_node(Conn::Prod, d, g.suc->left, g.ant), g.suc->right}});
}

void rp_b(DotKind d, const Sequent& g, std::vector<PremiseList>& out) {
  if (is_node(g.ant, Conn::Prod, d))
    out.push_back({{g.ant->left, make_node(Conn::Over, d, g.suc, g.ant->right)}});
  if (is_node(g.suc, Conn::Over, d))
    out.push_back({{make_node(Conn::Prod, d, g.ant, g.suc->right), g.suc->left}});
}

void drp_a(DotKind d, const Sequent& g, std::vector<PremiseList>& out) {
  if (is_node(g.suc, Conn::Coprod, d))
    out.push_back({{make_node(Conn::Rdiff, d, g.ant, g.suc->right), g.suc->left}});
  if (is_node(g.ant, Conn::Rdiff, d))
    out.push_back({{g.ant->left, make_node(Conn::Coprod, d, g.suc, g.ant->right)}});
}

void drp_b(DotKind d, const Sequent& g, std::vector<PremiseList>& out) {
  if (is_node(g.suc, Conn::Coprod, d))
    out.push_back({{make_node(Conn::Ldiff, d, g.suc->left, g.ant), g.suc->right}});
  if (is_node(g.ant, Conn::Ldiff, d))
    out.push_back({{g.ant->right, make_node(Conn::Coprod, d, g.ant->left, g.suc)}});
}

// Weakening: conclusion root pure, premise root solid, same children.
void wk_back(Conn f, const Sequent& g, std::vector<PremiseList>& out) {
  bool left = family_is_input(f);
  const StructPtr& side = left ? g.ant : g.suc;
  if (!is_node(side, f, DotKind::Pure)) return;
  StructPtr solid = make_node(f, DotKind::Solid, side->left, side->right);
  out.push_back({left ? Sequent{solid, g.suc} : Sequent{g.ant, solid}});
}

// Grishin interaction IV.  Upper sequent is always A ?*? B |- C ?+? D; the
// base number picks the lower shape, the dots are fixed per variant:
//   1: C >- A |- D / B      2: C >- B |- A \ D
//   3: B -< D |- A \ C      4: A -< D |- C / B
struct GrishinShape {
  int base;
  DotKind ant, suc, prod, coprod;
};

constexpr DotKind S = DotKind::Solid;
constexpr DotKind P = DotKind::Pure;

const GrishinShape& grishin_shape(RuleId r) {
  static const std::unordered_map<RuleId, GrishinShape> m = {
      {RuleId::G1, {1, S, S, S, S}},  {RuleId::G2, {2, S, S, S, S}},
      {RuleId::G3, {3, S, S, S, S}},  {RuleId::G4, {4, S, S, S, S}},
      {RuleId::G1L, {1, S, S, S, S}}, {RuleId::G1R, {1, P, S, P, S}},
      {RuleId::G2L, {2, S, P, P, S}}, {RuleId::G2R, {2, P, S, S, P}},
      {RuleId::G3L, {3, S, S, S, S}}, {RuleId::G3R, {3, P, S, P, S}},
      {RuleId::G4L, {4, S, P, P, S}}, {RuleId::G4R, {4, P, S, S, P}},
  };
  return m.at(r);
}

void grishin_back(const GrishinShape& sh, const Sequent& g,
                  std::vector<PremiseList>& out) {
  Conn af = sh.base <= 2 ? Conn::Ldiff : Conn::Rdiff;
  Conn sf = (sh.base == 1 || sh.base == 4) ? Conn::Over : Conn::Under;
  if (!is_node(g.ant, af, sh.ant) || !is_node(g.suc, sf, sh.suc)) return;
  const StructPtr &a1 = g.ant->left, &a2 = g.ant->right;
  const StructPtr &s1 = g.suc->left, &s2 = g.suc->right;
  StructPtr A, B, C, D;
  switch (sh.base) {
    case 1: C = a1; A = a2; D = s1; B = s2; break;
    case 2: C = a1; B = a2; A = s1; D = s2; break;
    case 3: B = a1; D = a2; A = s1; C = s2; break;
    default: A = a1; D = a2; C = s1; B = s2; break;
  }
  out.push_back({{make_node(Conn::Prod, sh.prod, A, B),
                  make_node(Conn::Coprod, sh.coprod, C, D)}});
}

void grishin_fwd(const GrishinShape& sh, const Sequent& p,
                 std::vector<Sequent>& out) {
  if (!is_node(p.ant, Conn::Prod, sh.prod) ||
      !is_node(p.suc, Conn::Coprod, sh.coprod))
    return;
  const StructPtr &A = p.ant->left, &B = p.ant->right;
  const StructPtr &C = p.suc->left, &D = p.suc->right;
  Conn af = sh.base <= 2 ? Conn::Ldiff : Conn::Rdiff;
  Conn sf = (sh.base == 1 || sh.base == 4) ? Conn::Over : Conn::Under;
  StructPtr la, ls;
  switch (sh.base) {
    case 1: la = make_node(af, sh.ant, C, A); ls = make_node(sf, sh.suc, D, B); break;
    case 2: la = make_node(af, sh.ant, C, B); ls = make_node(sf, sh.suc, A, D); break;
    case 3: la = make_node(af, sh.ant, B, D); ls = make_node(sf, sh.suc, A, C); break;
    default: la = make_node(af, sh.ant, A, D); ls = make_node(sf, sh.suc, C, B); break;
  }
  out.push_back({la, ls});
}

Conn mon_conn(RuleId r) {
  switch (r) {
    case RuleId::MonProd: return Conn::Prod;
    case RuleId::MonOver: return Conn::Over;
    case RuleId::MonUnder: return Conn::Under;
    case RuleId::MonCoprod: return Conn::Coprod;
    case RuleId::MonRdiff: return Conn::Rdiff;
    default: return Conn::Ldiff;
  }
}

Conn rew_conn(RuleId r) {
  switch (r) {
    case RuleId::RewlProd: return Conn::Prod;
    case RuleId::RewlRdiff: return Conn::Rdiff;
    case RuleId::RewlLdiff: return Conn::Ldiff;
    case RuleId::RewrCoprod: return Conn::Coprod;
    case RuleId::RewrOver: return Conn::Over;
    default: return Conn::Under;
  }
}

Conn wk_conn(RuleId r) {
  switch (r) {
    case RuleId::WkProd: return Conn::Prod;
    case RuleId::WkRdiff: return Conn::Rdiff;
    case RuleId::WkLdiff: return Conn::Ldiff;
    case RuleId::WkCoprod: return Conn::Coprod;
    case RuleId::WkUnder: return Conn::Under;
    default: return Conn::Over;
  }
}

}  // namespace

const char* rule_name(RuleId r) { return kRuleNames[static_cast<size_t>(r)]; }

std::optional<RuleId> rule_from_name(const std::string& name) {
  for (size_t i = 0; i < kRuleCount; ++i)
    if (name == kRuleNames[i]) return static_cast<RuleId>(i);
  return std::nullopt;
}

bool is_logical(RuleId r) {
  switch (r) {
    case RuleId::Ax:
    case RuleId::MonProd:
    case RuleId::MonOver:
    case RuleId::MonUnder:
    case RuleId::MonCoprod:
    case RuleId::MonRdiff:
    case RuleId::MonLdiff:
    case RuleId::RewlProd:
    case RuleId::RewlRdiff:
    case RuleId::RewlLdiff:
    case RuleId::RewrCoprod:
    case RuleId::RewrOver:
    case RuleId::RewrUnder:
      return true;
    default:
      return false;
  }
}

std::vector<PremiseList> premises_of(RuleId r, const Sequent& goal) {
  std::vector<PremiseList> out;
  if (!goal.valid()) return out;
  switch (r) {
    case RuleId::Ax:
      if (goal.ant->is_leaf() && goal.suc->is_leaf() &&
          equal(goal.ant->leaf, goal.suc->leaf))
        out.push_back({});
      break;
    case RuleId::Cut:
      break;  // cut formulas are not enumerable backward; see the prover
    case RuleId::MonProd:
    case RuleId::MonOver:
    case RuleId::MonUnder:
    case RuleId::MonCoprod:
    case RuleId::MonRdiff:
    case RuleId::MonLdiff:
      mon_back(mon_conn(r), goal, out);
      break;
    case RuleId::RpA: rp_a(S, goal, out); break;
    case RuleId::RpB: rp_b(S, goal, out); break;
    case RuleId::DrpA: drp_a(S, goal, out); break;
    case RuleId::DrpB: drp_b(S, goal, out); break;
    case RuleId::WrpA: rp_a(P, goal, out); break;
    case RuleId::WrpB: rp_b(P, goal, out); break;
    case RuleId::WdrpA: drp_a(P, goal, out); break;
    case RuleId::WdrpB: drp_b(P, goal, out); break;
    case RuleId::WkProd:
    case RuleId::WkRdiff:
    case RuleId::WkLdiff:
    case RuleId::WkCoprod:
    case RuleId::WkUnder:
    case RuleId::WkOver:
      wk_back(wk_conn(r), goal, out);
      break;
    case RuleId::G1:
    case RuleId::G2:
    case RuleId::G3:
    case RuleId::G4:
    case RuleId::G1L:
    case RuleId::G1R:
    case RuleId::G2L:
    case RuleId::G2R:
    case RuleId::G3L:
    case RuleId::G3R:
    case RuleId::G4L:
    case RuleId::G4R:
      grishin_back(grishin_shape(r), goal, out);
      break;
    case RuleId::RewlProd:
    case RuleId::RewlRdiff:
    case RuleId::RewlLdiff:
    case RuleId::RewrCoprod:
    case RuleId::RewrOver:
    case RuleId::RewrUnder:
      rew_back(rew_conn(r), goal, out);
      break;
  }
  return out;
}

std::vector<Sequent> apply(RuleId r, const PremiseList& ps) {
  std::vector<Sequent> out;
  for (const Sequent& p : ps)
    if (!p.valid()) return out;
  switch (r) {
    case RuleId::Ax:
      break;  // any A |- A; not enumerable
    case RuleId::Cut:
      if (ps.size() == 2 && ps[0].suc->is_leaf() && ps[1].ant->is_leaf() &&
          equal(ps[0].suc->leaf, ps[1].ant->leaf))
        out.push_back({ps[0].ant, ps[1].suc});
      break;
    case RuleId::MonProd:
    case RuleId::MonOver:
    case RuleId::MonUnder:
    case RuleId::MonCoprod:
    case RuleId::MonRdiff:
    case RuleId::MonLdiff: {
      if (ps.size() != 2) break;
      Conn f = mon_conn(r);
      StructPtr kids[2];
      FormulaPtr args[2];
      bool ok = true;
      for (int i = 0; i < 2; ++i) {
        if (child_polarity(f, i) == Polarity::Input) {
          if (!ps[i].suc->is_leaf()) { ok = false; break; }
          kids[i] = ps[i].ant;
          args[i] = ps[i].suc->leaf;
        } else {
          if (!ps[i].ant->is_leaf()) { ok = false; break; }
          args[i] = ps[i].ant->leaf;
          kids[i] = ps[i].suc;
        }
      }
      if (!ok) break;
      StructPtr node = make_node(f, S, kids[0], kids[1]);
      StructPtr form = make_leaf(make_formula(f, args[0], args[1]));
      out.push_back(family_is_input(f) ? Sequent{node, form}
                                       : Sequent{form, node});
      break;
    }
    case RuleId::RpA:
    case RuleId::RpB:
    case RuleId::DrpA:
    case RuleId::DrpB:
    case RuleId::WrpA:
    case RuleId::WrpB:
    case RuleId::WdrpA:
    case RuleId::WdrpB: {
      // Bidirectional: the inverse relation is the rule itself.
      if (ps.size() != 1) break;
      for (auto& pl : premises_of(r, ps[0])) out.push_back(pl[0]);
      break;
    }
    case RuleId::WkProd:
    case RuleId::WkRdiff:
    case RuleId::WkLdiff:
    case RuleId::WkCoprod:
    case RuleId::WkUnder:
    case RuleId::WkOver: {
      if (ps.size() != 1) break;
      Conn f = wk_conn(r);
      bool left = family_is_input(f);
      const StructPtr& side = left ? ps[0].ant : ps[0].suc;
      if (!is_node(side, f, S)) break;
      StructPtr pure = make_node(f, P, side->left, side->right);
      out.push_back(left ? Sequent{pure, ps[0].suc} : Sequent{ps[0].ant, pure});
      break;
    }
    case RuleId::G1:
    case RuleId::G2:
    case RuleId::G3:
    case RuleId::G4:
    case RuleId::G1L:
    case RuleId::G1R:
    case RuleId::G2L:
    case RuleId::G2R:
    case RuleId::G3L:
    case RuleId::G3R:
    case RuleId::G4L:
    case RuleId::G4R:
      if (ps.size() == 1) grishin_fwd(grishin_shape(r), ps[0], out);
      break;
    case RuleId::RewlProd:
    case RuleId::RewlRdiff:
    case RuleId::RewlLdiff:
    case RuleId::RewrCoprod:
    case RuleId::RewrOver:
    case RuleId::RewrUnder: {
      if (ps.size() != 1) break;
      Conn f = rew_conn(r);
      bool left = family_is_input(f);
      const StructPtr& side = left ? ps[0].ant : ps[0].suc;
      if (!is_node(side, f, S) || !side->left->is_leaf() ||
          !side->right->is_leaf())
        break;
      StructPtr form =
          make_leaf(make_formula(f, side->left->leaf, side->right->leaf));
      out.push_back(left ? Sequent{form, ps[0].suc} : Sequent{ps[0].ant, form});
      break;
    }
  }
  std::vector<Sequent> valid;
  for (auto& c : out)
    if (c.valid()) valid.push_back(c);
  return valid;
}

namespace {

Logic make_logic(const std::string& name, bool pure,
                 std::initializer_list<RuleId> rules) {
  Logic l;
  l.name = name;
  l.pure_allowed = pure;
  for (RuleId r : rules) l.has[static_cast<size_t>(r)] = true;
  return l;
}

std::vector<Logic> make_presets() {
  using R = RuleId;
  Logic nl = make_logic("nl", false,
                        {R::Ax, R::MonProd, R::MonOver, R::MonUnder, R::RpA,
                         R::RpB, R::RewlProd, R::RewrOver, R::RewrUnder});
  Logic lg0 = nl;
  lg0.name = "lg0";
  for (R r : {R::MonCoprod, R::MonRdiff, R::MonLdiff, R::DrpA, R::DrpB,
              R::RewlRdiff, R::RewlLdiff, R::RewrCoprod})
    lg0.has[static_cast<size_t>(r)] = true;
  Logic lg = lg0;
  lg.name = "lg";
  for (R r : {R::G1, R::G2, R::G3, R::G4}) lg.has[static_cast<size_t>(r)] = true;
  Logic hlg0 = lg0;
  hlg0.name = "hlg0";
  hlg0.pure_allowed = true;
  for (R r : {R::WrpA, R::WrpB, R::WdrpA, R::WdrpB, R::WkProd, R::WkRdiff,
              R::WkLdiff, R::WkCoprod, R::WkUnder, R::WkOver})
    hlg0.has[static_cast<size_t>(r)] = true;
  Logic hlg = hlg0;
  hlg.name = "hlg";
  for (R r : {R::G1, R::G2L, R::G3, R::G4L}) hlg.has[static_cast<size_t>(r)] = true;
  Logic hlgdot = hlg0;
  hlgdot.name = "hlg-dot";
  for (R r : {R::G1L, R::G1R, R::G2L, R::G2R, R::G3L, R::G3R, R::G4L, R::G4R})
    hlgdot.has[static_cast<size_t>(r)] = true;
  return {nl, lg0, lg, hlg0, hlg, hlgdot};
}

const std::vector<Logic>& presets() {
  static const std::vector<Logic> ls = make_presets();
  return ls;
}

}  // namespace

const Logic* logic_by_name(const std::string& name) {
  for (const Logic& l : presets())
    if (l.name == name) return &l;
  return nullptr;
}

const std::vector<const Logic*>& all_logics() {
  static const std::vector<const Logic*> ptrs = [] {
    std::vector<const Logic*> v;
    for (const Logic& l : presets()) v.push_back(&l);
    return v;
  }();
  return ptrs;
}

bool check(const RuleInstance& inst, const Logic& logic, std::string* why) {
  auto fail = [&](const std::string& msg) {
    if (why) *why = msg;
    return false;
  };
  if (!logic.contains(inst.rule))
    return fail(std::string("rule ") + rule_name(inst.rule) + " not in logic " +
                logic.name);
  if (!inst.conclusion.valid()) return fail("conclusion not polarity-valid");
  for (const Sequent& p : inst.premises)
    if (!p.valid()) return fail("premise not polarity-valid");
  if (!logic.pure_allowed) {
    if (inst.conclusion.has_pure()) return fail("pure node in conclusion");
    for (const Sequent& p : inst.premises)
      if (p.has_pure()) return fail("pure node in premise");
  }
  if (inst.rule == RuleId::Cut) {
    bool ok = inst.premises.size() == 2 && inst.premises[0].suc->is_leaf() &&
              inst.premises[1].ant->is_leaf() &&
              equal(inst.premises[0].suc->leaf, inst.premises[1].ant->leaf) &&
              equal(inst.premises[0].ant, inst.conclusion.ant) &&
              equal(inst.premises[1].suc, inst.conclusion.suc);
    return ok || fail("cut schema mismatch");
  }
  for (const PremiseList& pl : premises_of(inst.rule, inst.conclusion)) {
    if (pl.size() != inst.premises.size()) continue;
    bool same = true;
    for (size_t i = 0; i < pl.size(); ++i)
      if (!equal(pl[i], inst.premises[i])) { same = false; break; }
    if (same) return true;
  }
  return fail(std::string("instance does not match schema of ") +
              rule_name(inst.rule));
}

std::optional<RuleId> erased_rule(RuleId r) {
  switch (r) {
    case RuleId::WrpA: return RuleId::RpA;
    case RuleId::WrpB: return RuleId::RpB;
    case RuleId::WdrpA: return RuleId::DrpA;
    case RuleId::WdrpB: return RuleId::DrpB;
    case RuleId::WkProd:
    case RuleId::WkRdiff:
    case RuleId::WkLdiff:
    case RuleId::WkCoprod:
    case RuleId::WkUnder:
    case RuleId::WkOver:
      return std::nullopt;
    case RuleId::G1L:
    case RuleId::G1R: return RuleId::G1;
    case RuleId::G2L:
    case RuleId::G2R: return RuleId::G2;
    case RuleId::G3L:
    case RuleId::G3R: return RuleId::G3;
    case RuleId::G4L:
    case RuleId::G4R: return RuleId::G4;
    default: return r;
  }
}

namespace {

std::string doc_schema(RuleId r) {
  // Render each schema on metavariables via the real machinery so the dump
  // never drifts from the implementation.
  auto seq = [](const char* t) { return parse_sequent(t, false); };
  auto one = [&](RuleId id, const char* concl) {
    auto pls = premises_of(id, seq(concl));
    std::string s;
    for (size_t i = 0; i < pls.size(); ++i) {
      if (i) s += "  |  ";
      for (size_t j = 0; j < pls[i].size(); ++j) {
        if (j) s += " ; ";
        s += print_sequent(pls[i][j]);
      }
      if (pls[i].empty()) s += "-";
      s += "  /  ";
      s += print_sequent(seq(concl));
    }
    return s;
  };
  switch (r) {
    case RuleId::Ax: return one(r, "a |- a");
    case RuleId::Cut: return "x |- a ; a |- y  /  x |- y";
    case RuleId::MonProd: return one(r, "a .*. c |- b * d");
    case RuleId::MonOver: return one(r, "a / d |- b ./. c");
    case RuleId::MonUnder: return one(r, "d \\ a |- c .\\. b");
    case RuleId::MonCoprod: return one(r, "a + c |- b .+. d");
    case RuleId::MonRdiff: return one(r, "d .-<. a |- c -< b");
    case RuleId::MonLdiff: return one(r, "a .>-. d |- b >- c");
    case RuleId::RpA: return one(r, "a .*. b |- c");
    case RuleId::RpB: return one(r, "a .*. b |- c");
    case RuleId::DrpA: return one(r, "c |- b .+. a");
    case RuleId::DrpB: return one(r, "c |- b .+. a");
    case RuleId::WrpA: return one(r, "a o*o b |- c");
    case RuleId::WrpB: return one(r, "a o*o b |- c");
    case RuleId::WdrpA: return one(r, "c |- b o+o a");
    case RuleId::WdrpB: return one(r, "c |- b o+o a");
    case RuleId::WkProd: return one(r, "a o*o b |- y");
    case RuleId::WkRdiff: return one(r, "a o-<o b |- y");
    case RuleId::WkLdiff: return one(r, "a o>-o b |- y");
    case RuleId::WkCoprod: return one(r, "x |- a o+o b");
    case RuleId::WkUnder: return one(r, "x |- a o\\o b");
    case RuleId::WkOver: return one(r, "x |- a o/o b");
    case RuleId::G1:
    case RuleId::G1L: return one(r, "c .>-. a |- d ./. b");
    case RuleId::G1R: return one(r, "c o>-o a |- d ./. b");
    case RuleId::G2: return one(r, "c .>-. b |- a .\\. d");
    case RuleId::G2L: return one(r, "c .>-. b |- a o\\o d");
    case RuleId::G2R: return one(r, "c o>-o b |- a .\\. d");
    case RuleId::G3:
    case RuleId::G3L: return one(r, "b .-<. d |- a .\\. c");
    case RuleId::G3R: return one(r, "b o-<o d |- a .\\. c");
    case RuleId::G4: return one(r, "a .-<. d |- c ./. b");
    case RuleId::G4L: return one(r, "a .-<. d |- c o/o b");
    case RuleId::G4R: return one(r, "a o-<o d |- c ./. b");
    case RuleId::RewlProd: return one(r, "a * b |- y");
    case RuleId::RewlRdiff: return one(r, "a -< b |- y");
    case RuleId::RewlLdiff: return one(r, "a >- b |- y");
    case RuleId::RewrCoprod: return one(r, "x |- a + b");
    case RuleId::RewrOver: return one(r, "x |- a / b");
    case RuleId::RewrUnder: return one(r, "x |- a \\ b");
  }
  return "";
}

}  // namespace

const std::vector<RuleDoc>& rule_table() {
  static const std::vector<RuleDoc> table = [] {
    std::vector<RuleDoc> t;
    for (size_t i = 0; i < kRuleCount; ++i) {
      RuleId r = static_cast<RuleId>(i);
      RuleDoc d;
      d.rule = r;
      d.name = rule_name(r);
      d.schema = doc_schema(r);
      for (const Logic* l : all_logics())
        if (l->contains(r)) d.logics.push_back(l->name);
      t.push_back(std::move(d));
    }
    return t;
  }();
  return table;
}

}  // namespace lgw
