#include "lgw/prover.hpp"

#include <limits>
#include <stdexcept>
#include <unordered_set>

namespace lgw {
namespace {

struct ResourceExceeded {
  const char* limit;
};

constexpr RuleId kLogicalOrder[] = {
    RuleId::Ax,         RuleId::RewlProd,  RuleId::RewlRdiff,
    RuleId::RewlLdiff,  RuleId::RewrCoprod, RuleId::RewrOver,
    RuleId::RewrUnder,  RuleId::MonProd,   RuleId::MonOver,
    RuleId::MonUnder,   RuleId::MonCoprod, RuleId::MonRdiff,
    RuleId::MonLdiff,
};

constexpr RuleId kStructuralOrder[] = {
    RuleId::RpA,     RuleId::RpB,      RuleId::DrpA,     RuleId::DrpB,
    RuleId::WrpA,    RuleId::WrpB,     RuleId::WdrpA,    RuleId::WdrpB,
    RuleId::WkProd,  RuleId::WkRdiff,  RuleId::WkLdiff,  RuleId::WkCoprod,
    RuleId::WkUnder, RuleId::WkOver,   RuleId::G1,       RuleId::G2,
    RuleId::G3,      RuleId::G4,       RuleId::G1L,      RuleId::G1R,
    RuleId::G2L,     RuleId::G2R,      RuleId::G3L,      RuleId::G3R,
    RuleId::G4L,     RuleId::G4R,
};

constexpr int kNoDepth = std::numeric_limits<int>::max();

void collect_subformulas(const FormulaPtr& f, std::vector<FormulaPtr>& out,
                         std::unordered_set<uint64_t>* seen,
                         std::vector<FormulaPtr>* pool) {
  // Hash-keyed dedupe with an equality sweep on collision.
  uint64_t key = f->h1 ^ (f->h2 << 1);
  if (!seen->insert(key).second) {
    for (const FormulaPtr& g : *pool)
      if (equal(f, g)) return;
  }
  pool->push_back(f);
  out.push_back(f);
  if (!f->is_atom()) {
    collect_subformulas(f->left, out, seen, pool);
    collect_subformulas(f->right, out, seen, pool);
  }
}

}  // namespace

SearchLimits SearchLimits::unlimited() {
  SearchLimits l;
  l.max_visited = std::numeric_limits<uint64_t>::max();
  l.max_seconds = std::numeric_limits<double>::infinity();
  l.max_connectives = std::numeric_limits<int>::max();
  return l;
}

Prover::Prover(const Logic& logic, SearchLimits limits, bool analytic_cut)
    : logic_(logic), limits_(limits), analytic_cut_(analytic_cut) {}

void Prover::clear_memo() { memo_.clear(); }

void Prover::bump() {
  ++stats_.visited;
  if (stats_.visited > limits_.max_visited)
    throw ResourceExceeded{"max_visited_sequents"};
  if ((stats_.visited & 0xff) == 0) {
    double elapsed =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - started_)
            .count();
    if (elapsed > limits_.max_seconds) throw ResourceExceeded{"wall_time"};
  }
}

void Prover::set_proved(const Sequent& s, RuleId r, PremiseList ps) {
  // First recipe wins: every stored recipe only references sequents proved
  // strictly earlier, which keeps reconstruction in build() well-founded.
  auto [it, inserted] = memo_.try_emplace(s);
  if (!inserted && it->second.state == Entry::Proved) return;
  it->second.state = Entry::Proved;
  it->second.rule = r;
  it->second.premises = std::move(ps);
}

Derivation Prover::build(const Sequent& s) const {
  const Entry& e = memo_.at(s);
  Derivation d{e.rule, s, {}};
  for (const Sequent& p : e.premises) d.children.push_back(build(p));
  return d;
}

Prover::Outcome Prover::solve(const Sequent& goal, int depth, bool allow_cut) {
  if (auto it = memo_.find(goal); it != memo_.end()) {
    ++stats_.memo_hits;
    switch (it->second.state) {
      case Entry::Proved: return {true, kNoDepth};
      case Entry::Disproved: return {false, kNoDepth};
      case Entry::InProgress: return {false, it->second.depth};
    }
  }
  if (!balanced(goal)) {
    memo_[goal] = Entry{Entry::Disproved, 0, RuleId::Ax, {}};
    return {false, kNoDepth};
  }
  memo_[goal] = Entry{Entry::InProgress, depth, RuleId::Ax, {}};
  struct Unmark {
    Prover* p;
    const Sequent& s;
    bool active = true;
    ~Unmark() {
      if (active) p->memo_.erase(s);
    }
  } unmark{this, goal};

  // Breadth-first structural closure with parent links for the witness.
  std::vector<Sequent> order{goal};
  struct Edge {
    int parent;
    RuleId via;
  };
  std::vector<Edge> edges{{-1, RuleId::Ax}};
  std::unordered_map<Sequent, int, SequentHash, SequentEq> index;
  index.emplace(goal, 0);
  int fail_mindepth = kNoDepth;

  // Marks the breadth-first chain from member `idx` down to the goal proved;
  // when `rule` is set the member itself proves by (rule, premises) first.
  auto mark_chain = [&](int idx, std::optional<RuleId> rule, PremiseList ps) {
    if (rule.has_value()) set_proved(order[static_cast<size_t>(idx)], *rule, std::move(ps));
    while (idx != 0) {
      const Edge& e = edges[static_cast<size_t>(idx)];
      set_proved(order[static_cast<size_t>(e.parent)], e.via,
                 {order[static_cast<size_t>(idx)]});
      idx = e.parent;
    }
    unmark.active = false;  // goal entry now holds the proof recipe
  };

  auto try_premises = [&](const PremiseList& pl, int* mind, bool cut_below) {
    for (const Sequent& p : pl) {
      Outcome o = solve(p, depth + 1, cut_below);
      if (!o.proved) {
        *mind = std::min(*mind, o.fail_mindepth);
        return false;
      }
    }
    return true;
  };

  size_t qi = 0;
  while (qi < order.size()) {
    int idx = static_cast<int>(qi++);
    Sequent m = order[static_cast<size_t>(idx)];
    bump();
    for (RuleId r : kLogicalOrder) {
      if (!logic_.contains(r)) continue;
      for (PremiseList& pl : premises_of(r, m)) {
        if (try_premises(pl, &fail_mindepth, allow_cut)) {
          mark_chain(idx, r, std::move(pl));
          return {true, kNoDepth};
        }
      }
    }
    for (RuleId r : kStructuralOrder) {
      if (!logic_.contains(r)) continue;
      for (PremiseList& pl : premises_of(r, m)) {
        const Sequent& n = pl[0];
        if (index.count(n)) continue;
        if (auto it = memo_.find(n); it != memo_.end()) {
          ++stats_.memo_hits;
          if (it->second.state == Entry::Proved) {
            order.push_back(n);
            edges.push_back({idx, r});
            mark_chain(static_cast<int>(order.size()) - 1, std::nullopt, {});
            return {true, kNoDepth};
          }
          if (it->second.state == Entry::Disproved) continue;
          // An ancestor query owns this sequent; its region is already being
          // explored there, so only record the dependency.
          fail_mindepth = std::min(fail_mindepth, it->second.depth);
          continue;
        }
        index.emplace(n, static_cast<int>(order.size()));
        order.push_back(n);
        edges.push_back({idx, r});
      }
    }
  }

  if (allow_cut) {
    // Second pass once the cut-free attempts are spent: analytic cut at every
    // closure member, cut formulas in subformula order of the original goal.
    // Cut premises are decided by the stratified cut-free search: their
    // connective count may exceed the goal's, so no measure would bound a
    // nested cut pass.
    for (size_t i = 0; i < order.size(); ++i) {
      const Sequent& m = order[i];
      for (const FormulaPtr& a : cut_formulas_) {
        bump();
        PremiseList pl{{m.ant, make_leaf(a)}, {make_leaf(a), m.suc}};
        if (try_premises(pl, &fail_mindepth, /*cut_below=*/false)) {
          mark_chain(static_cast<int>(i), RuleId::Cut, std::move(pl));
          return {true, kNoDepth};
        }
      }
    }
  }

  if (fail_mindepth < depth) {
    // Failure hinges on an ancestor still in progress: don't cache it.
    return {false, fail_mindepth};
  }
  for (const Sequent& m : order)
    memo_[m] = Entry{Entry::Disproved, 0, RuleId::Ax, {}};
  unmark.active = false;
  return {false, kNoDepth};
}

SearchResult Prover::prove(const Sequent& goal) {
  if (!goal.valid())
    throw std::invalid_argument("goal sequent is not polarity-valid");
  stats_ = {};
  started_ = std::chrono::steady_clock::now();
  SearchResult res;
  if (goal.conn_count() > limits_.max_connectives) {
    res.verdict = Verdict::ResourceExceeded;
    res.limit_name = "max_connectives";
    return res;
  }
  if (!logic_.pure_allowed && goal.has_pure()) {
    res.verdict = Verdict::Unprovable;
    return res;
  }
  if (analytic_cut_) {
    // Cached refutations are only valid relative to one cut-formula set.
    memo_.clear();
    cut_formulas_.clear();
    std::unordered_set<uint64_t> seen;
    std::vector<FormulaPtr> pool;
    for (const FormulaPtr& f : sequent_leaves(goal))
      collect_subformulas(f, cut_formulas_, &seen, &pool);
  }
  try {
    Outcome o = solve(goal, 0, analytic_cut_);
    res.verdict = o.proved ? Verdict::Provable : Verdict::Unprovable;
    if (o.proved) res.derivation = build(goal);
  } catch (const ResourceExceeded& e) {
    res.verdict = Verdict::ResourceExceeded;
    res.limit_name = e.limit;
  }
  res.stats = stats_;
  return res;
}

SearchResult prove(const Sequent& goal, const Logic& logic, SearchLimits limits) {
  Prover p(logic, limits);
  return p.prove(goal);
}

SearchResult prove_with_analytic_cut(const Sequent& goal, const Logic& logic,
                                     SearchLimits limits) {
  Prover p(logic, limits, /*analytic_cut=*/true);
  return p.prove(goal);
}

Logic with_cut(const Logic& logic) {
  Logic l = logic;
  l.name += "+cut";
  l.has[static_cast<size_t>(RuleId::Cut)] = true;
  return l;
}

}  // namespace lgw
