#pragma once

// Deterministic enumeration of small formulas and sequents, for tabulated
// cross-checks and exhaustive sweeps.

#include <functional>
#include <string>
#include <vector>

#include "lgw/core.hpp"

namespace lgw {

// All formulas over `atoms` with exactly `conn` connectives, in a fixed
// order: atoms as given, then by connective, then left subtree size.
inline std::vector<FormulaPtr> formulas_exact(const std::vector<std::string>& atoms,
                                              int conn) {
  std::vector<std::vector<FormulaPtr>> by_conn;
  by_conn.reserve(static_cast<size_t>(conn) + 1);
  {
    std::vector<FormulaPtr> base;
    base.reserve(atoms.size());
    for (const auto& a : atoms) base.push_back(make_atom(a));
    by_conn.push_back(std::move(base));
  }
  for (int c = 1; c <= conn; ++c) {
    std::vector<FormulaPtr> level;
    for (Conn f : kAllConns)
      for (int cl = 0; cl <= c - 1; ++cl)
        for (const auto& l : by_conn[static_cast<size_t>(cl)])
          for (const auto& r : by_conn[static_cast<size_t>(c - 1 - cl)])
            level.push_back(make_formula(f, l, r));
    by_conn.push_back(std::move(level));
  }
  return by_conn.back();
}

inline std::vector<FormulaPtr> formulas_upto(const std::vector<std::string>& atoms,
                                             int max_conn) {
  std::vector<FormulaPtr> all;
  for (int c = 0; c <= max_conn; ++c) {
    auto level = formulas_exact(atoms, c);
    all.insert(all.end(), level.begin(), level.end());
  }
  return all;
}

// Every sequent F |- G over `atoms` with conn(F) + conn(G) <= max_conn,
// visited in a fixed order without materialising the table.
inline void for_each_leaf_pair(const std::vector<std::string>& atoms, int max_conn,
                               const std::function<void(const Sequent&)>& fn) {
  std::vector<std::vector<FormulaPtr>> by_conn;
  for (int c = 0; c <= max_conn; ++c) by_conn.push_back(formulas_exact(atoms, c));
  for (int cf = 0; cf <= max_conn; ++cf)
    for (int cg = 0; cg + cf <= max_conn; ++cg)
      for (const auto& f : by_conn[static_cast<size_t>(cf)])
        for (const auto& g : by_conn[static_cast<size_t>(cg)])
          fn(Sequent{make_leaf(f), make_leaf(g)});
}

// All polarity-valid sequents whose structure leaves are bare atoms from
// `atoms`, using solid and pure punctuation of every family, with at most
// `max_leaves` leaves in total across both sides.
inline std::vector<Sequent> atomic_structured_sequents(
    const std::vector<std::string>& atoms, int max_leaves) {
  // side 0 = antecedent (input position), side 1 = succedent (output).
  std::vector<std::vector<StructPtr>> in(static_cast<size_t>(max_leaves) + 1);
  std::vector<std::vector<StructPtr>> out(static_cast<size_t>(max_leaves) + 1);
  for (const auto& a : atoms) {
    in[1].push_back(make_leaf(make_atom(a)));
    out[1].push_back(make_leaf(make_atom(a)));
  }
  auto pick = [&](Polarity p, int n) -> const std::vector<StructPtr>& {
    return p == Polarity::Input ? in[static_cast<size_t>(n)] : out[static_cast<size_t>(n)];
  };
  for (int n = 2; n <= max_leaves; ++n) {
    for (Conn f : kAllConns) {
      Polarity node_pol =
          family_is_input(f) ? Polarity::Input : Polarity::Output;
      auto& dst = node_pol == Polarity::Input ? in[static_cast<size_t>(n)] : out[static_cast<size_t>(n)];
      for (DotKind d : {DotKind::Solid, DotKind::Pure})
        for (int k = 1; k <= n - 1; ++k)
          for (const auto& l : pick(child_polarity(f, 0), k))
            for (const auto& r : pick(child_polarity(f, 1), n - k))
              dst.push_back(make_node(f, d, l, r));
    }
  }
  std::vector<Sequent> seqs;
  for (int na = 1; na < max_leaves; ++na)
    for (int ns = 1; na + ns <= max_leaves; ++ns)
      for (const auto& a : in[static_cast<size_t>(na)])
        for (const auto& s : out[static_cast<size_t>(ns)])
          seqs.push_back(Sequent{a, s});
  return seqs;
}

}  // namespace lgw
