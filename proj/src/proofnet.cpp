#include "lgw/proofnet.hpp"

#include <algorithm>
#include <chrono>
#include <deque>
#include <map>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>
#include <unordered_map>

#include "lgw/syntax.hpp"

namespace lgw {

namespace {

// Counterclockwise port order per link kind and family, indexed by slot
// (0 = arg1/child0, 1 = arg2/child1, 2 = main/parent).  Tensor links follow
// the classical application pictures; cotensor and punctuation links are
// their mirror images.
constexpr std::array<int, 3> kTensorCcw[6] = {
    {1, 0, 2},  // prod
    {2, 0, 1},  // under
    {1, 2, 0},  // over
    {2, 0, 1},  // coprod
    {0, 2, 1},  // rdiff
    {1, 0, 2},  // ldiff
};
constexpr std::array<int, 3> kCotensorCcw[6] = {
    {2, 0, 1},  // prod
    {1, 0, 2},  // under
    {0, 2, 1},  // over
    {1, 0, 2},  // coprod
    {1, 2, 0},  // rdiff
    {2, 0, 1},  // ldiff
};

std::array<int, 3> tensor_ccw(Conn f) { return kTensorCcw[static_cast<int>(f)]; }
std::array<int, 3> mirror_ccw(Conn f) { return kCotensorCcw[static_cast<int>(f)]; }

int display_family(Conn f) {
  return (f == Conn::Prod || f == Conn::Under || f == Conn::Over) ? 0 : 1;
}

Conn mon_conn_of(RuleId r) {
  switch (r) {
    case RuleId::MonProd: return Conn::Prod;
    case RuleId::MonOver: return Conn::Over;
    case RuleId::MonUnder: return Conn::Under;
    case RuleId::MonCoprod: return Conn::Coprod;
    case RuleId::MonRdiff: return Conn::Rdiff;
    default: return Conn::Ldiff;
  }
}

Conn rew_conn_of(RuleId r) {
  switch (r) {
    case RuleId::RewlProd: return Conn::Prod;
    case RuleId::RewlRdiff: return Conn::Rdiff;
    case RuleId::RewlLdiff: return Conn::Ldiff;
    case RuleId::RewrCoprod: return Conn::Coprod;
    case RuleId::RewrOver: return Conn::Over;
    default: return Conn::Under;
  }
}

bool is_mon(RuleId r) {
  return r >= RuleId::MonProd && r <= RuleId::MonLdiff;
}
bool is_rew(RuleId r) {
  return r >= RuleId::RewlProd && r <= RuleId::RewrUnder;
}
bool is_wk(RuleId r) {
  return r >= RuleId::WkProd && r <= RuleId::WkOver;
}
bool is_display(RuleId r) {
  return r >= RuleId::RpA && r <= RuleId::WdrpB;
}
bool is_grishin(RuleId r) {
  return r >= RuleId::G1 && r <= RuleId::G4R;
}

bool is_node(const StructPtr& s, Conn f, DotKind d) {
  return !s->is_leaf() && s->family == f && s->dot == d;
}

// Fixed data of the interaction rules: base shape plus the dot of each of the
// four structural positions (lower antecedent, lower succedent, upper product,
// upper coproduct).
struct GShape {
  int base;
  DotKind ant, suc, prod, coprod;
};

GShape g_shape(RuleId r) {
  constexpr DotKind S = DotKind::Solid, P = DotKind::Pure;
  switch (r) {
    case RuleId::G1: return {1, S, S, S, S};
    case RuleId::G2: return {2, S, S, S, S};
    case RuleId::G3: return {3, S, S, S, S};
    case RuleId::G4: return {4, S, S, S, S};
    case RuleId::G1L: return {1, S, S, S, S};
    case RuleId::G1R: return {1, P, S, P, S};
    case RuleId::G2L: return {2, S, P, P, S};
    case RuleId::G2R: return {2, P, S, S, P};
    case RuleId::G3L: return {3, S, S, S, S};
    case RuleId::G3R: return {3, P, S, P, S};
    case RuleId::G4L: return {4, S, P, P, S};
    default: return {4, P, S, S, P};  // G4R
  }
}

// sigma[j] = conclusion leaf index of premise leaf j, given each block's
// order of appearance on both sides.
std::vector<int> block_perm(const std::vector<int>& prem_order,
                            const std::vector<int>& conc_order,
                            const std::vector<int>& size) {
  std::vector<int> coff(size.size(), 0);
  int off = 0;
  for (int b : conc_order) {
    coff[static_cast<size_t>(b)] = off;
    off += size[static_cast<size_t>(b)];
  }
  std::vector<int> sigma;
  sigma.reserve(static_cast<size_t>(off));
  for (int b : prem_order)
    for (int i = 0; i < size[static_cast<size_t>(b)]; ++i)
      sigma.push_back(coff[static_cast<size_t>(b)] + i);
  return sigma;
}

std::vector<int> iota_perm(int n) {
  std::vector<int> v(static_cast<size_t>(n));
  std::iota(v.begin(), v.end(), 0);
  return v;
}

// The leaf wiring of one structural step: sigma[j] = conclusion position of
// premise leaf j.  Returns nothing when the pair does not fit the rule.
std::optional<std::vector<int>> leaf_perm(RuleId r, const Sequent& prem,
                                          const Sequent& conc) {
  auto sz = [](const StructPtr& s) { return s->leaf_count; };

  if (is_wk(r)) {
    if (conc.leaf_count() != prem.leaf_count()) return std::nullopt;
    return iota_perm(conc.leaf_count());
  }

  if (is_display(r)) {
    DotKind d = (r == RuleId::RpA || r == RuleId::RpB || r == RuleId::DrpA ||
                 r == RuleId::DrpB)
                    ? DotKind::Solid
                    : DotKind::Pure;
    RuleId base = r;
    if (r == RuleId::WrpA) base = RuleId::RpA;
    if (r == RuleId::WrpB) base = RuleId::RpB;
    if (r == RuleId::WdrpA) base = RuleId::DrpA;
    if (r == RuleId::WdrpB) base = RuleId::DrpB;

    // Block ids: A=0, B=1, C=2.
    switch (base) {
      case RuleId::RpA: {
        if (is_node(conc.ant, Conn::Prod, d)) {
          StructPtr A = conc.ant->left, B = conc.ant->right, C = conc.suc;
          Sequent want{B, make_node(Conn::Under, d, A, C)};
          if (equal(want, prem))
            return block_perm({1, 0, 2}, {0, 1, 2}, {sz(A), sz(B), sz(C)});
        }
        if (is_node(conc.suc, Conn::Under, d)) {
          StructPtr A = conc.suc->left, C = conc.suc->right, B = conc.ant;
          Sequent want{make_node(Conn::Prod, d, A, B), C};
          if (equal(want, prem))
            return block_perm({0, 1, 2}, {1, 0, 2}, {sz(A), sz(B), sz(C)});
        }
        return std::nullopt;
      }
      case RuleId::RpB: {
        if (is_node(conc.ant, Conn::Prod, d)) {
          StructPtr A = conc.ant->left, B = conc.ant->right, C = conc.suc;
          Sequent want{A, make_node(Conn::Over, d, C, B)};
          if (equal(want, prem))
            return block_perm({0, 2, 1}, {0, 1, 2}, {sz(A), sz(B), sz(C)});
        }
        if (is_node(conc.suc, Conn::Over, d)) {
          StructPtr C = conc.suc->left, B = conc.suc->right, A = conc.ant;
          Sequent want{make_node(Conn::Prod, d, A, B), C};
          if (equal(want, prem))
            return block_perm({0, 1, 2}, {0, 2, 1}, {sz(A), sz(B), sz(C)});
        }
        return std::nullopt;
      }
      case RuleId::DrpA: {
        if (is_node(conc.suc, Conn::Coprod, d)) {
          StructPtr B = conc.suc->left, A = conc.suc->right, C = conc.ant;
          Sequent want{make_node(Conn::Rdiff, d, C, A), B};
          if (equal(want, prem))
            return block_perm({2, 0, 1}, {2, 1, 0}, {sz(A), sz(B), sz(C)});
        }
        if (is_node(conc.ant, Conn::Rdiff, d)) {
          StructPtr C = conc.ant->left, A = conc.ant->right, B = conc.suc;
          Sequent want{C, make_node(Conn::Coprod, d, B, A)};
          if (equal(want, prem))
            return block_perm({2, 1, 0}, {2, 0, 1}, {sz(A), sz(B), sz(C)});
        }
        return std::nullopt;
      }
      default: {  // DrpB
        if (is_node(conc.suc, Conn::Coprod, d)) {
          StructPtr B = conc.suc->left, A = conc.suc->right, C = conc.ant;
          Sequent want{make_node(Conn::Ldiff, d, B, C), A};
          if (equal(want, prem))
            return block_perm({1, 2, 0}, {2, 1, 0}, {sz(A), sz(B), sz(C)});
        }
        if (is_node(conc.ant, Conn::Ldiff, d)) {
          StructPtr B = conc.ant->left, C = conc.ant->right, A = conc.suc;
          Sequent want{C, make_node(Conn::Coprod, d, B, A)};
          if (equal(want, prem))
            return block_perm({2, 1, 0}, {1, 2, 0}, {sz(A), sz(B), sz(C)});
        }
        return std::nullopt;
      }
    }
  }

  if (is_grishin(r)) {
    GShape sh = g_shape(r);
    Conn af = sh.base <= 2 ? Conn::Ldiff : Conn::Rdiff;
    Conn sf = (sh.base == 1 || sh.base == 4) ? Conn::Over : Conn::Under;
    if (!is_node(conc.ant, af, sh.ant) || !is_node(conc.suc, sf, sh.suc))
      return std::nullopt;
    const StructPtr &a1 = conc.ant->left, &a2 = conc.ant->right;
    const StructPtr &s1 = conc.suc->left, &s2 = conc.suc->right;
    StructPtr A, B, C, D;
    std::vector<int> conc_order;  // block ids A=0 B=1 C=2 D=3 in lower order
    switch (sh.base) {
      case 1: C = a1; A = a2; D = s1; B = s2; conc_order = {2, 0, 3, 1}; break;
      case 2: C = a1; B = a2; A = s1; D = s2; conc_order = {2, 1, 0, 3}; break;
      case 3: B = a1; D = a2; A = s1; C = s2; conc_order = {1, 3, 0, 2}; break;
      default: A = a1; D = a2; C = s1; B = s2; conc_order = {0, 3, 2, 1}; break;
    }
    Sequent want{make_node(Conn::Prod, sh.prod, A, B),
                 make_node(Conn::Coprod, sh.coprod, C, D)};
    if (!equal(want, prem)) return std::nullopt;
    return block_perm({0, 1, 2, 3}, conc_order, {sz(A), sz(B), sz(C), sz(D)});
  }

  return std::nullopt;
}

// --- derivation walk ---------------------------------------------------------

struct Builder {
  std::vector<FormulaPtr> vertices;
  std::vector<Link> links;
  int mon_rew_steps = 0;

  int add_vertex(const FormulaPtr& f) {
    vertices.push_back(f);
    return static_cast<int>(vertices.size()) - 1;
  }

  [[noreturn]] static void fail(const std::string& path, const std::string& msg) {
    throw std::invalid_argument("derivation node " + path + ": " + msg);
  }

  // Returns the vertex of every structure leaf of d.conclusion, in sequent
  // order (antecedent left to right, then succedent).
  std::vector<int> walk(const Derivation& d, const std::string& path) {
    RuleId r = d.rule;
    const Sequent& g = d.conclusion;

    if (r == RuleId::Cut)
      fail(path, "cut steps admit no structure reading");

    if (r == RuleId::Ax) {
      if (!d.children.empty()) fail(path, "axiom with premises");
      if (!g.ant->is_leaf() || !g.suc->is_leaf() ||
          !equal(g.ant->leaf, g.suc->leaf))
        fail(path, "axiom conclusion is not A |- A");
      int v = add_vertex(g.ant->leaf);
      return {v, v};
    }

    if (is_mon(r)) {
      if (d.children.size() != 2) fail(path, "monotonicity needs two premises");
      Conn f = mon_conn_of(r);
      bool left_node = family_is_input(f);
      const StructPtr& node = left_node ? g.ant : g.suc;
      const StructPtr& form = left_node ? g.suc : g.ant;
      if (!form->is_leaf() || form->leaf->is_atom() || form->leaf->conn != f ||
          !is_node(node, f, DotKind::Solid))
        fail(path, "conclusion does not fit the rule");
      const StructPtr kids[2] = {node->left, node->right};
      const FormulaPtr args[2] = {form->leaf->left, form->leaf->right};

      int consumed[2];
      std::vector<int> side_leaves[2];
      for (int i = 0; i < 2; ++i) {
        const Derivation& ch = d.children[static_cast<size_t>(i)];
        Sequent want = child_polarity(f, i) == Polarity::Input
                           ? Sequent{kids[i], make_leaf(args[i])}
                           : Sequent{make_leaf(args[i]), kids[i]};
        if (!equal(want, ch.conclusion))
          fail(path, "premise " + std::to_string(i) + " does not fit");
        std::vector<int> pv = walk(ch, path + "." + std::to_string(i));
        if (child_polarity(f, i) == Polarity::Input) {
          consumed[i] = pv.back();
          pv.pop_back();
        } else {
          consumed[i] = pv.front();
          pv.erase(pv.begin());
        }
        side_leaves[i] = std::move(pv);
      }
      int vmain = add_vertex(form->leaf);
      links.push_back(Link{LinkType::Tensor, f,
                           {consumed[0], consumed[1], vmain}, tensor_ccw(f),
                           false, false});
      ++mon_rew_steps;

      std::vector<int> out;
      if (!left_node) out.push_back(vmain);
      out.insert(out.end(), side_leaves[0].begin(), side_leaves[0].end());
      out.insert(out.end(), side_leaves[1].begin(), side_leaves[1].end());
      if (left_node) out.push_back(vmain);
      return out;
    }

    if (is_rew(r)) {
      if (d.children.size() != 1) fail(path, "rewrite needs one premise");
      Conn f = rew_conn_of(r);
      bool left = family_is_input(f);
      const StructPtr& side = left ? g.ant : g.suc;
      if (!side->is_leaf() || side->leaf->is_atom() || side->leaf->conn != f)
        fail(path, "conclusion does not fit the rule");
      StructPtr node = make_node(f, DotKind::Solid, make_leaf(side->leaf->left),
                                 make_leaf(side->leaf->right));
      Sequent want = left ? Sequent{node, g.suc} : Sequent{g.ant, node};
      if (!equal(want, d.children[0].conclusion))
        fail(path, "premise does not fit");
      std::vector<int> pv = walk(d.children[0], path + ".0");

      int vl, vr, rest_at;
      if (left) {
        vl = pv[0];
        vr = pv[1];
        rest_at = 2;
      } else {
        vl = pv[pv.size() - 2];
        vr = pv[pv.size() - 1];
        rest_at = 0;
      }
      int vmain = add_vertex(side->leaf);
      links.push_back(Link{LinkType::Cotensor, f, {vl, vr, vmain},
                           mirror_ccw(f), false, false});
      ++mon_rew_steps;

      std::vector<int> out;
      if (left) {
        out.push_back(vmain);
        out.insert(out.end(), pv.begin() + rest_at, pv.end());
      } else {
        out.insert(out.end(), pv.begin(), pv.end() - 2);
        out.push_back(vmain);
      }
      return out;
    }

    // Structural step: one premise, leaves rewired by blocks.
    if (d.children.size() != 1) fail(path, "structural step needs one premise");
    const Sequent& p = d.children[0].conclusion;
    bool shaped = false;
    for (const PremiseList& pl : premises_of(r, g))
      if (pl.size() == 1 && equal(pl[0], p)) {
        shaped = true;
        break;
      }
    auto sigma = leaf_perm(r, p, g);
    if (!shaped || !sigma) fail(path, "premise does not fit the rule");
    std::vector<int> pv = walk(d.children[0], path + ".0");
    std::vector<int> out(pv.size(), -1);
    for (size_t j = 0; j < pv.size(); ++j)
      out[static_cast<size_t>((*sigma)[j])] = pv[j];
    return out;
  }
};

}  // namespace

const char* link_type_name(LinkType t) {
  switch (t) {
    case LinkType::Tensor: return "tensor";
    case LinkType::Cotensor: return "cotensor";
    default: return "pure_tensor";
  }
}

ProofStructure to_proof_structure(const Derivation& d) {
  Builder b;
  std::vector<int> vec = b.walk(d, "root");

  ProofStructure ps;
  ps.end = d.conclusion;
  ps.vertices = std::move(b.vertices);
  ps.links = std::move(b.links);

  int na = ps.end.ant->leaf_count;
  ps.hypotheses.assign(vec.begin(), vec.begin() + na);
  ps.conclusions.assign(vec.begin() + na, vec.end());

  int nv = static_cast<int>(ps.vertices.size());

  // One-shot identification: a root node over two leaves, facing a leaf,
  // whose neighbour triple matches an existing tensor link of the same
  // display family.
  auto try_merge = [&](const StructPtr& node, int c0, int c1,
                       int across) -> bool {
    std::array<int, 3> want{c0, c1, across};
    std::sort(want.begin(), want.end());
    for (auto& l : ps.links) {
      if (l.from_punctuation || l.type != LinkType::Tensor) continue;
      if (display_family(l.family) != display_family(node->family)) continue;
      std::array<int, 3> have = l.ports;
      std::sort(have.begin(), have.end());
      if (have == want) {
        if (node->dot == DotKind::Pure) l.type = LinkType::PureTensor;
        l.merged = true;
        ps.merged = 1;
        return true;
      }
    }
    return false;
  };

  bool merged = false;
  if (!ps.end.ant->is_leaf() && ps.end.ant->left->is_leaf() &&
      ps.end.ant->right->is_leaf() && ps.end.suc->is_leaf())
    merged = try_merge(ps.end.ant, vec[0], vec[1], vec[2]);
  else if (!ps.end.suc->is_leaf() && ps.end.suc->left->is_leaf() &&
           ps.end.suc->right->is_leaf() && ps.end.ant->is_leaf())
    merged = try_merge(ps.end.suc, vec[static_cast<size_t>(na)],
                       vec[static_cast<size_t>(na) + 1], vec[0]);

  if (!merged) {
    // Punctuation links bottom-up; parents wired afterwards.
    int cursor = 0;
    std::function<int(const StructPtr&)> emit = [&](const StructPtr& s) -> int {
      if (s->is_leaf()) return vec[static_cast<size_t>(cursor++)];
      int e0 = emit(s->left);
      int e1 = emit(s->right);
      LinkType t =
          s->dot == DotKind::Pure ? LinkType::PureTensor : LinkType::Tensor;
      ps.links.push_back(
          Link{t, s->family, {e0, e1, -1}, mirror_ccw(s->family), true, false});
      return nv + static_cast<int>(ps.links.size()) - 1;
    };
    int antE = emit(ps.end.ant);
    int sucE = emit(ps.end.suc);
    // Each non-root punctuation link's parent is the link that lists it as a
    // child; the roots face each other across the turnstile.
    for (size_t i = 0; i < ps.links.size(); ++i) {
      if (!ps.links[i].from_punctuation) continue;
      int self = nv + static_cast<int>(i);
      for (size_t j = 0; j < ps.links.size(); ++j) {
        if (!ps.links[j].from_punctuation) continue;
        if (ps.links[j].ports[0] == self || ps.links[j].ports[1] == self)
          ps.links[i].ports[2] = nv + static_cast<int>(j);
      }
    }
    if (antE >= nv) ps.links[static_cast<size_t>(antE - nv)].ports[2] = sucE;
    if (sucE >= nv) ps.links[static_cast<size_t>(sucE - nv)].ports[2] = antE;
    ps.turnstile = std::make_pair(antE, sucE);
  }
  return ps;
}

// --- combinatorial map -------------------------------------------------------

CombinatorialMap to_map(const ProofStructure& ps) {
  int nv = static_cast<int>(ps.vertices.size());
  int nent = nv + static_cast<int>(ps.links.size());

  // Darts per entity, keyed by slot for links so the ccw order can be applied.
  std::vector<std::vector<int>> vertex_darts(static_cast<size_t>(nv));
  std::vector<std::array<int, 3>> link_darts(ps.links.size(), {-1, -1, -1});
  std::vector<int> involution;

  auto attach = [&](int entity, int slot, int dart) {
    if (entity < nv) {
      vertex_darts[static_cast<size_t>(entity)].push_back(dart);
    } else {
      auto& slots = link_darts[static_cast<size_t>(entity - nv)];
      if (slots[static_cast<size_t>(slot)] != -1)
        throw std::invalid_argument("link slot used twice");
      slots[static_cast<size_t>(slot)] = dart;
    }
  };
  auto add_edge = [&](int e0, int slot0, int e1, int slot1) {
    int d0 = static_cast<int>(involution.size());
    int d1 = d0 + 1;
    involution.push_back(d1);
    involution.push_back(d0);
    attach(e0, slot0, d0);
    attach(e1, slot1, d1);
  };

  for (size_t i = 0; i < ps.links.size(); ++i) {
    const Link& l = ps.links[i];
    int self = nv + static_cast<int>(i);
    // Child/argument ports always originate the edge; a link's parent port is
    // filled in by its parent's child port, so only the main port of logical
    // links adds a third edge here.
    add_edge(self, 0, l.ports[0], 2);
    add_edge(self, 1, l.ports[1], 2);
    if (!l.from_punctuation) add_edge(self, 2, l.ports[2], 2);
  }
  if (ps.turnstile) {
    auto [a, b] = *ps.turnstile;
    add_edge(a, 2, b, 2);
  }

  CombinatorialMap m;
  m.rotation.resize(static_cast<size_t>(nent));
  for (int v = 0; v < nv; ++v) m.rotation[static_cast<size_t>(v)] = vertex_darts[static_cast<size_t>(v)];
  for (size_t i = 0; i < ps.links.size(); ++i) {
    auto& slots = link_darts[i];
    for (int s = 0; s < 3; ++s)
      if (slots[static_cast<size_t>(s)] == -1)
        throw std::invalid_argument("link slot left unwired");
    const auto& ccw = ps.links[i].ccw;
    m.rotation[static_cast<size_t>(nv) + i] = {
        slots[static_cast<size_t>(ccw[0])], slots[static_cast<size_t>(ccw[1])],
        slots[static_cast<size_t>(ccw[2])]};
  }
  m.involution = std::move(involution);
  return m;
}

int map_genus(const CombinatorialMap& m) {
  size_t darts = m.involution.size();
  std::vector<int> node_of(darts, -1), next(darts, -1);
  for (size_t n = 0; n < m.rotation.size(); ++n) {
    const auto& cyc = m.rotation[n];
    for (size_t i = 0; i < cyc.size(); ++i) {
      int d = cyc[i];
      if (d < 0 || static_cast<size_t>(d) >= darts || node_of[static_cast<size_t>(d)] != -1)
        throw std::invalid_argument("rotation is not a partition of the darts");
      node_of[static_cast<size_t>(d)] = static_cast<int>(n);
      next[static_cast<size_t>(d)] = cyc[(i + 1) % cyc.size()];
    }
  }
  for (size_t d = 0; d < darts; ++d) {
    if (node_of[d] == -1)
      throw std::invalid_argument("dart missing from the rotation");
    int a = m.involution[d];
    if (a < 0 || static_cast<size_t>(a) >= darts ||
        static_cast<size_t>(a) == d ||
        static_cast<size_t>(m.involution[static_cast<size_t>(a)]) != d)
      throw std::invalid_argument("involution is not a fixed-point-free pairing");
  }

  // Connected components over map nodes.
  size_t nn = m.rotation.size();
  std::vector<int> comp(nn, -1);
  int ncomp = 0;
  for (size_t n = 0; n < nn; ++n) {
    if (comp[n] != -1) continue;
    int c = ncomp++;
    std::deque<size_t> q{n};
    comp[n] = c;
    while (!q.empty()) {
      size_t u = q.front();
      q.pop_front();
      for (int d : m.rotation[u]) {
        size_t v = static_cast<size_t>(node_of[static_cast<size_t>(m.involution[static_cast<size_t>(d)])]);
        if (comp[v] == -1) {
          comp[v] = c;
          q.push_back(v);
        }
      }
    }
  }

  std::vector<int> V(static_cast<size_t>(ncomp), 0), E(static_cast<size_t>(ncomp), 0), F(static_cast<size_t>(ncomp), 0);
  for (size_t n = 0; n < nn; ++n) ++V[static_cast<size_t>(comp[n])];
  for (size_t d = 0; d < darts; ++d) ++E[static_cast<size_t>(comp[static_cast<size_t>(node_of[d])])];
  // Faces: orbits of dart -> next(involution(dart)).
  std::vector<char> seen(darts, 0);
  for (size_t d = 0; d < darts; ++d) {
    if (seen[d]) continue;
    ++F[static_cast<size_t>(comp[static_cast<size_t>(node_of[d])])];
    size_t x = d;
    while (!seen[x]) {
      seen[x] = 1;
      x = static_cast<size_t>(next[static_cast<size_t>(m.involution[x])]);
    }
  }

  int total = 0;
  for (int c = 0; c < ncomp; ++c) {
    int e = E[static_cast<size_t>(c)] / 2;
    int chi = V[static_cast<size_t>(c)] - e + F[static_cast<size_t>(c)];
    if ((2 - chi) % 2 != 0 || chi > 2)
      throw std::invalid_argument("inconsistent Euler characteristic");
    total += (2 - chi) / 2;
  }
  return total;
}

int genus(const ProofStructure& ps) { return map_genus(to_map(ps)); }

bool check_planarity(const ProofStructure& ps) { return genus(ps) == 0; }

int crossing_pairs(const ProofStructure& ps) { return genus(ps); }

std::string to_dot(const ProofStructure& ps) {
  std::ostringstream o;
  o << "graph net {\n";
  o << "  // " << print_sequent(ps.end) << "\n";
  for (size_t v = 0; v < ps.vertices.size(); ++v)
    o << "  v" << v << " [label=\"" << print_formula(ps.vertices[v])
      << "\"];\n";
  int nv = static_cast<int>(ps.vertices.size());
  auto ent = [&](int e) {
    return (e < nv ? "v" : "l") + std::to_string(e < nv ? e : e - nv);
  };
  static const char* slot_name[2][3] = {{"arg1", "arg2", "main"},
                                        {"child0", "child1", "parent"}};
  for (size_t i = 0; i < ps.links.size(); ++i) {
    const Link& l = ps.links[i];
    o << "  l" << i << " [shape=box,label=\"" << link_type_name(l.type) << "/"
      << conn_name(l.family) << (l.merged ? "/merged" : "")
      << (l.from_punctuation ? "/punct" : "") << "\"];\n";
    int kind = l.from_punctuation ? 1 : 0;
    for (int s = 0; s < 3; ++s) {
      if (l.from_punctuation && s == 2) continue;  // drawn from the parent side
      o << "  l" << i << " -- " << ent(l.ports[static_cast<size_t>(s)]) << " [label=\""
        << slot_name[kind][static_cast<size_t>(s)] << "\"];\n";
    }
    o << "  // rotation l" << i << ": " << slot_name[kind][static_cast<size_t>(l.ccw[0])] << ","
      << slot_name[kind][static_cast<size_t>(l.ccw[1])] << "," << slot_name[kind][static_cast<size_t>(l.ccw[2])]
      << "\n";
  }
  if (ps.turnstile)
    o << "  " << ent(ps.turnstile->first) << " -- " << ent(ps.turnstile->second)
      << " [style=dashed,label=\"turnstile\"];\n";
  o << "}\n";
  return o.str();
}

std::string net_signature(const ProofStructure& ps) {
  size_t nv = ps.vertices.size();
  std::vector<std::vector<std::string>> addr(nv);
  std::deque<int> work;
  auto give = [&](int v, std::string a) {
    addr[static_cast<size_t>(v)].push_back(std::move(a));
    work.push_back(v);
  };
  for (size_t i = 0; i < ps.hypotheses.size(); ++i)
    give(ps.hypotheses[i], "h" + std::to_string(i));
  for (size_t i = 0; i < ps.conclusions.size(); ++i)
    give(ps.conclusions[i], "c" + std::to_string(i));

  // Created vertices carry exactly one address, so propagating from each main
  // the first time it is addressed reaches every vertex.
  std::vector<char> expanded(ps.links.size(), 0);
  while (!work.empty()) {
    int v = work.front();
    work.pop_front();
    for (size_t i = 0; i < ps.links.size(); ++i) {
      const Link& l = ps.links[i];
      if (l.from_punctuation || expanded[i] || l.ports[2] != v) continue;
      expanded[i] = 1;
      const std::string& base = addr[static_cast<size_t>(v)].front();
      give(l.ports[0], base + ".0");
      give(l.ports[1], base + ".1");
    }
  }

  std::vector<std::string> canon(nv);
  for (size_t v = 0; v < nv; ++v) {
    auto& as = addr[v];
    std::sort(as.begin(), as.end());
    canon[v] = as.empty() ? ("?" + std::to_string(v)) : as.front();
  }

  std::vector<std::string> lines;
  for (const Link& l : ps.links) {
    if (l.from_punctuation) continue;
    lines.push_back(std::string(link_type_name(l.type)) + " " +
                    conn_name(l.family) + (l.merged ? " M" : "") + " m=" +
                    canon[static_cast<size_t>(l.ports[2])] + " a=" + canon[static_cast<size_t>(l.ports[0])] +
                    " b=" + canon[static_cast<size_t>(l.ports[1])]);
  }
  for (size_t v = 0; v < nv; ++v)
    if (addr[v].size() > 1) {
      std::string ax = "ax";
      for (const auto& a : addr[v]) ax += " " + a;
      lines.push_back(std::move(ax));
    }
  std::sort(lines.begin(), lines.end());
  std::string out = print_sequent(ps.end) + "\n";
  for (const auto& l : lines) out += l + "\n";
  return out;
}

// --- exhaustive structure enumeration ---------------------------------------

namespace {

struct NetBudget {
  const NetSearchLimits& lim;
  std::chrono::steady_clock::time_point start =
      std::chrono::steady_clock::now();
  uint64_t work = 0;
  uint64_t states = 0;
  const char* hit = nullptr;

  explicit NetBudget(const NetSearchLimits& l) : lim(l) {}

  bool tick() {
    if (hit) return false;
    if (++work > lim.max_work) {
      hit = "max_work";
      return false;
    }
    if ((work & 1023) == 0) {
      double s = std::chrono::duration<double>(
                     std::chrono::steady_clock::now() - start)
                     .count();
      if (s > lim.max_seconds) {
        hit = "wall_time";
        return false;
      }
    }
    return true;
  }
  bool state_tick() {
    if (hit) return false;
    if (++states > lim.max_states) {
      hit = "max_states";
      return false;
    }
    return true;
  }
};

constexpr RuleId kStructuralMoves[] = {
    RuleId::RpA,    RuleId::RpB,    RuleId::DrpA,    RuleId::DrpB,
    RuleId::WrpA,   RuleId::WrpB,   RuleId::WdrpA,   RuleId::WdrpB,
    RuleId::WkProd, RuleId::WkRdiff, RuleId::WkLdiff, RuleId::WkCoprod,
    RuleId::WkUnder, RuleId::WkOver, RuleId::G1,     RuleId::G2,
    RuleId::G3,     RuleId::G4,     RuleId::G1L,     RuleId::G1R,
    RuleId::G2L,    RuleId::G2R,    RuleId::G3L,     RuleId::G3R,
    RuleId::G4L,    RuleId::G4R,
};

constexpr RuleId kLogicalMoves[] = {
    RuleId::MonProd,    RuleId::MonOver,  RuleId::MonUnder, RuleId::MonCoprod,
    RuleId::MonRdiff,   RuleId::MonLdiff, RuleId::RewlProd, RuleId::RewlRdiff,
    RuleId::RewlLdiff,  RuleId::RewrCoprod, RuleId::RewrOver, RuleId::RewrUnder,
};

struct Enumerator {
  const Logic& logic;
  NetBudget& budget;
  const std::function<bool(Derivation&&)>& sink;  // false stops everything

  struct State {
    Sequent seq;
    std::vector<int> perm;  // state leaf index -> goal leaf index
    int parent = -1;
    RuleId via = RuleId::Ax;
  };

  // Enumerate all derivations of goal; returns false when the sink or the
  // budget stopped the run.
  bool run(const Sequent& goal) {
    if (!balanced(goal)) return true;
    if (goal.has_pure() && !logic.pure_allowed) return true;

    std::vector<State> states;
    std::map<std::pair<uint64_t, std::vector<int>>, int> seen;
    auto push = [&](Sequent s, std::vector<int> perm, int parent, RuleId via) {
      auto key = std::make_pair(s.hash(), perm);
      if (seen.emplace(key, static_cast<int>(states.size())).second) {
        states.push_back(State{std::move(s), std::move(perm), parent, via});
      }
    };
    push(goal, iota_perm(goal.leaf_count()), -1, RuleId::Ax);

    for (size_t idx = 0; idx < states.size(); ++idx) {
      if (!budget.state_tick()) return false;
      Sequent seq = states[idx].seq;  // copy: states may reallocate

      // Structural closure.
      for (RuleId r : kStructuralMoves) {
        if (!logic.contains(r)) continue;
        for (const PremiseList& pl : premises_of(r, seq)) {
          const Sequent& p = pl[0];
          auto sigma = leaf_perm(r, p, seq);
          std::vector<int> perm(p.leaf_count());
          for (int j = 0; j < p.leaf_count(); ++j)
            perm[static_cast<size_t>(j)] =
                states[idx].perm[static_cast<size_t>((*sigma)[static_cast<size_t>(j)])];
          push(p, std::move(perm), static_cast<int>(idx), r);
        }
      }

      // Logical exits.
      if (logic.contains(RuleId::Ax) && !premises_of(RuleId::Ax, seq).empty()) {
        if (!emit(states, idx, RuleId::Ax, {})) return false;
      }
      for (RuleId r : kLogicalMoves) {
        if (!logic.contains(r)) continue;
        for (const PremiseList& pl : premises_of(r, seq)) {
          if (pl.size() == 1) {
            bool ok = run_sub(pl[0], [&](Derivation&& d0) {
              std::vector<Derivation> kids;
              kids.push_back(std::move(d0));
              return emit(states, idx, r, std::move(kids));
            });
            if (!ok) return false;
          } else {
            bool ok = run_sub(pl[0], [&](Derivation&& d0) {
              return run_sub(pl[1], [&](Derivation&& d1) {
                std::vector<Derivation> kids;
                kids.push_back(d0);
                kids.push_back(std::move(d1));
                return emit(states, idx, r, std::move(kids));
              });
            });
            if (!ok) return false;
          }
        }
      }
    }
    return budget.hit == nullptr;
  }

  template <typename F>
  bool run_sub(const Sequent& sub, F&& subsink) {
    std::function<bool(Derivation&&)> s = subsink;
    Enumerator e{logic, budget, s};
    return e.run(sub);
  }

  bool emit(const std::vector<State>& states, size_t idx, RuleId r,
            std::vector<Derivation>&& kids) {
    if (!budget.tick()) return false;
    Derivation d{r, states[idx].seq, std::move(kids)};
    for (int at = static_cast<int>(idx); states[static_cast<size_t>(at)].parent != -1;
         at = states[static_cast<size_t>(at)].parent) {
      const State& st = states[static_cast<size_t>(at)];
      std::vector<Derivation> one;
      one.push_back(std::move(d));
      d = Derivation{st.via, states[static_cast<size_t>(st.parent)].seq, std::move(one)};
    }
    return sink(std::move(d));
  }
};

}  // namespace

NetSearchResult all_structures(const Sequent& goal, const Logic& logic,
                               const NetSearchLimits& limits,
                               const std::function<bool(const ProofStructure&)>& stop) {
  if (!goal.valid())
    throw std::invalid_argument("goal is not polarity-valid");
  NetSearchResult out;
  NetBudget budget(limits);
  std::set<std::string> sigs;
  bool stopped = false;

  std::function<bool(Derivation&&)> sink = [&](Derivation&& d) {
    ++out.derivations;
    ProofStructure ps = to_proof_structure(d);
    std::string sig = net_signature(ps);
    if (sigs.insert(std::move(sig)).second) {
      out.nets.push_back(std::move(ps));
      if (stop && stop(out.nets.back())) {
        stopped = true;
        return false;
      }
      if (out.nets.size() >= limits.max_nets) {
        budget.hit = "max_nets";
        return false;
      }
    }
    return true;
  };

  Enumerator e{logic, budget, sink};
  bool complete = e.run(goal);
  out.exhausted = complete && !stopped && budget.hit == nullptr;
  if (budget.hit) out.limit_name = budget.hit;
  return out;
}

}  // namespace lgw
