#include "lgw/grammar.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

#include "lgw/syntax.hpp"

namespace lgw {

namespace {

std::string trim(const std::string& s) {
  size_t b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  size_t e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

bool valid_word(const std::string& w) {
  if (w.empty() || w[0] < 'a' || w[0] > 'z') return false;
  for (char c : w)
    if (!((c >= 'a' && c <= 'z') || (c >= '0' && c <= '9') || c == '\''))
      return false;
  return true;
}

void collect_atoms(const FormulaPtr& f, std::set<std::string>& out) {
  if (f->is_atom()) {
    out.insert(f->atom);
    return;
  }
  collect_atoms(f->left, out);
  collect_atoms(f->right, out);
}

}  // namespace

const std::vector<FormulaPtr>* Lexicon::find(const std::string& word) const {
  auto it = std::lower_bound(
      entries.begin(), entries.end(), word,
      [](const auto& e, const std::string& w) { return e.first < w; });
  if (it == entries.end() || it->first != word) return nullptr;
  return &it->second;
}

std::vector<std::string> Lexicon::words() const {
  std::vector<std::string> ws;
  ws.reserve(entries.size());
  for (const auto& e : entries) ws.push_back(e.first);
  return ws;
}

Lexicon parse_lexicon(const std::string& text) {
  Lexicon lex;
  std::map<std::string, std::vector<FormulaPtr>> acc;
  bool have_goal = false;

  std::istringstream in(text);
  std::string raw;
  int lineno = 0;
  while (std::getline(in, raw)) {
    ++lineno;
    std::string line = raw;
    size_t hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    line = trim(line);
    if (line.empty()) continue;

    size_t colon = line.find(':');
    if (colon == std::string::npos)
      throw ParseError("line " + std::to_string(lineno) +
                       ": expected 'word: formula'");
    std::string head = trim(line.substr(0, colon));
    std::string body = trim(line.substr(colon + 1));

    if (head == "goal") {
      if (have_goal)
        throw ParseError("line " + std::to_string(lineno) + ": duplicate goal");
      if (!acc.empty())
        throw ParseError("line " + std::to_string(lineno) +
                         ": goal must precede word entries");
      if (!valid_word(body))
        throw ParseError("line " + std::to_string(lineno) +
                         ": goal must be an atom");
      lex.goal = body;
      have_goal = true;
      continue;
    }

    if (!have_goal)
      throw ParseError("line " + std::to_string(lineno) +
                       ": first entry must be 'goal: <atom>'");
    if (!valid_word(head))
      throw ParseError("line " + std::to_string(lineno) + ": bad word '" +
                       head + "'");
    if (body.empty())
      throw ParseError("line " + std::to_string(lineno) + ": missing formula");
    FormulaPtr f;
    try {
      f = parse_formula(body);
    } catch (const ParseError& e) {
      throw ParseError("line " + std::to_string(lineno) + ": " + e.what());
    }
    acc[head].push_back(std::move(f));
  }

  if (!have_goal) throw ParseError("missing 'goal: <atom>' line");

  std::set<std::string> atoms{lex.goal};
  for (auto& [word, formulas] : acc) {
    std::sort(formulas.begin(), formulas.end(),
              [](const FormulaPtr& a, const FormulaPtr& b) {
                return print_formula(a) < print_formula(b);
              });
    formulas.erase(std::unique(formulas.begin(), formulas.end(),
                               [](const FormulaPtr& a, const FormulaPtr& b) {
                                 return equal(a, b);
                               }),
                   formulas.end());
    for (const auto& f : formulas) collect_atoms(f, atoms);
    lex.entries.emplace_back(word, formulas);
  }
  for (const auto& e : lex.entries)
    if (atoms.count(e.first))
      throw ParseError("word '" + e.first +
                       "' collides with an atom of the lexicon");
  return lex;
}

Lexicon load_lexicon(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot read lexicon file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_lexicon(buf.str());
}

std::string print_lexicon(const Lexicon& lex) {
  std::string out = "goal: " + lex.goal + "\n";
  for (const auto& [word, formulas] : lex.entries)
    for (const auto& f : formulas) out += word + ": " + print_formula(f) + "\n";
  return out;
}

namespace {

std::vector<BracketPtr> trees(int lo, int hi) {
  std::vector<BracketPtr> out;
  if (hi - lo == 1) {
    auto leaf = std::make_shared<BracketTree>();
    leaf->pos = lo;
    out.push_back(leaf);
    return out;
  }
  for (int k = 1; k < hi - lo; ++k) {  // left part smallest first
    auto lefts = trees(lo, lo + k);
    auto rights = trees(lo + k, hi);
    for (const auto& l : lefts)
      for (const auto& r : rights) {
        auto node = std::make_shared<BracketTree>();
        node->left = l;
        node->right = r;
        out.push_back(node);
      }
  }
  return out;
}

}  // namespace

std::vector<BracketPtr> bracketings(int n) {
  if (n < 1) throw std::invalid_argument("bracketings: need at least one leaf");
  return trees(0, n);
}

std::string print_bracketing(const BracketTree& b, const Sentence& s) {
  if (b.is_leaf()) return s.at(static_cast<size_t>(b.pos));
  return "(" + print_bracketing(*b.left, s) + " " +
         print_bracketing(*b.right, s) + ")";
}

namespace {

StructPtr bracket_structure(const BracketTree& b,
                            const std::vector<FormulaPtr>& assignment,
                            DotKind dot) {
  if (b.is_leaf()) return make_leaf(assignment.at(static_cast<size_t>(b.pos)));
  return make_node(Conn::Prod, dot, bracket_structure(*b.left, assignment, dot),
                   bracket_structure(*b.right, assignment, dot));
}

}  // namespace

Sequent sentence_sequent(const std::vector<FormulaPtr>& assignment,
                         const BracketPtr& bracketing, const std::string& goal,
                         DotKind dot) {
  return Sequent{bracket_structure(*bracketing, assignment, dot),
                 make_leaf(make_atom(goal))};
}

DotKind sentence_dot(const Logic& logic) {
  return logic.pure_allowed ? DotKind::Pure : DotKind::Solid;
}

namespace {

// Balance is independent of the bracketing (product children are both read at
// input polarity), so one probe per assignment suffices.
bool balanced_assignment(const std::vector<FormulaPtr>& assignment,
                         const std::string& goal) {
  std::map<std::string, int> net;  // input minus output occurrences
  for (const auto& f : assignment)
    for (const auto& c : f->counts) net[c.atom] += c.input - c.output;
  net[goal] -= 1;  // goal read at output polarity: one output occurrence
  for (const auto& [atom, d] : net)
    if (d != 0) return false;
  return true;
}

struct Odometer {
  std::vector<size_t> idx, radix;
  bool done = false;

  explicit Odometer(const std::vector<size_t>& sizes)
      : idx(sizes.size(), 0), radix(sizes) {
    for (size_t r : radix)
      if (r == 0) done = true;
  }
  // Rightmost digit fastest: leftmost position is most significant.
  void advance() {
    for (size_t i = idx.size(); i-- > 0;) {
      if (++idx[i] < radix[i]) return;
      idx[i] = 0;
    }
    done = true;
  }
};

}  // namespace

Recognition recognize(const Lexicon& lex, const Sentence& s, Prover& prover) {
  if (s.empty()) throw std::invalid_argument("recognize: empty sentence");

  Recognition rec;
  std::vector<const std::vector<FormulaPtr>*> options;
  for (const auto& w : s) {
    const auto* types = lex.find(w);
    if (!types || types->empty()) {
      rec.outcome = RecogOutcome::No;
      rec.diagnostic = "unknown word: " + w;
      return rec;
    }
    options.push_back(types);
  }

  const Logic& logic = prover.logic();
  DotKind dot = sentence_dot(logic);
  auto brackets = bracketings(static_cast<int>(s.size()));

  std::vector<size_t> sizes;
  for (const auto* o : options) sizes.push_back(o->size());
  for (Odometer od(sizes); !od.done; od.advance()) {
    std::vector<FormulaPtr> assignment;
    assignment.reserve(s.size());
    for (size_t i = 0; i < s.size(); ++i)
      assignment.push_back((*options[i])[od.idx[i]]);
    if (!balanced_assignment(assignment, lex.goal)) continue;

    for (const auto& br : brackets) {
      Sequent seq = sentence_sequent(assignment, br, lex.goal, dot);
      ++rec.attempts;
      SearchResult r = prover.prove(seq);
      if (r.verdict == Verdict::Provable) {
        rec.outcome = RecogOutcome::Yes;
        rec.witness = RecognitionWitness{assignment, br, seq,
                                         std::move(*r.derivation)};
        return rec;
      }
      if (r.verdict == Verdict::ResourceExceeded) {
        ++rec.attempts_exceeded;
        if (rec.limit_name.empty()) rec.limit_name = r.limit_name;
      }
    }
  }
  rec.outcome =
      rec.attempts_exceeded ? RecogOutcome::Undecided : RecogOutcome::No;
  return rec;
}

Recognition recognize(const Lexicon& lex, const Sentence& s, const Logic& logic,
                      const SearchLimits& limits) {
  Prover prover(logic, limits);
  return recognize(lex, s, prover);
}

namespace {

// Distinct type-list id per word: words sharing the same alternatives yield
// identical sequents, so their verdicts can be shared.
std::vector<int> type_ids(const Lexicon& lex) {
  std::map<std::string, int> seen;
  std::vector<int> ids;
  for (const auto& [word, formulas] : lex.entries) {
    std::string key;
    for (const auto& f : formulas) key += print_formula(f) + ";";
    auto it = seen.emplace(key, static_cast<int>(seen.size())).first;
    ids.push_back(it->second);
  }
  return ids;
}

struct SentenceScan {
  const Lexicon& lex;
  std::vector<int> ids;

  explicit SentenceScan(const Lexicon& l) : lex(l), ids(type_ids(l)) {}

  // Visit all sentences up to max_len in (length, lexicographic) order;
  // stop when the visitor returns false.
  template <typename F>
  void run(int max_len, F&& visit) const {
    size_t n = lex.entries.size();
    if (n == 0) return;
    for (int len = 1; len <= max_len; ++len) {
      std::vector<size_t> sizes(static_cast<size_t>(len), n);
      for (Odometer od(sizes); !od.done; od.advance()) {
        Sentence s;
        std::vector<int> key;
        s.reserve(static_cast<size_t>(len));
        for (size_t i : od.idx) {
          s.push_back(lex.entries[i].first);
          key.push_back(ids[i]);
        }
        if (!visit(s, key)) return;
      }
    }
  }
};

struct CachedVerdict {
  RecogOutcome outcome;
  std::string limit_name;
};

CachedVerdict cached_recognize(const Lexicon& lex, const Sentence& s,
                               const std::vector<int>& key, Prover& prover,
                               std::map<std::vector<int>, CachedVerdict>& cache) {
  auto it = cache.find(key);
  if (it != cache.end()) return it->second;
  Recognition r = recognize(lex, s, prover);
  CachedVerdict v{r.outcome, r.limit_name};
  cache.emplace(key, v);
  return v;
}

}  // namespace

LanguageSample sample_language(const Lexicon& lex, const Logic& logic,
                               int max_len, const SearchLimits& limits) {
  LanguageSample out;
  Prover prover(logic, limits);
  std::map<std::vector<int>, CachedVerdict> cache;
  SentenceScan scan(lex);
  scan.run(max_len, [&](const Sentence& s, const std::vector<int>& key) {
    CachedVerdict v = cached_recognize(lex, s, key, prover, cache);
    if (v.outcome == RecogOutcome::Yes)
      out.recognized.push_back(s);
    else if (v.outcome == RecogOutcome::Undecided)
      out.undecided.push_back(s);
    return true;
  });
  return out;
}

LanguageComparison compare_languages(const Lexicon& lex, const Logic& a,
                                     const Logic& b, int max_len,
                                     const SearchLimits& limits) {
  LanguageComparison cmp;
  Prover pa(a, limits), pb(b, limits);
  std::map<std::vector<int>, CachedVerdict> ca, cb;
  SentenceScan scan(lex);
  scan.run(max_len, [&](const Sentence& s, const std::vector<int>& key) {
    CachedVerdict va = cached_recognize(lex, s, key, pa, ca);
    CachedVerdict vb = cached_recognize(lex, s, key, pb, cb);
    if (va.outcome == RecogOutcome::Undecided ||
        vb.outcome == RecogOutcome::Undecided) {
      if (cmp.undecided++ == 0) cmp.first_undecided = s;
      return true;
    }
    if (va.outcome != vb.outcome) {
      cmp.kind = LanguageComparison::Kind::Divergent;
      cmp.divergent = s;
      cmp.divergent_in_a = (va.outcome == RecogOutcome::Yes);
      return false;
    }
    return true;
  });
  if (cmp.kind != LanguageComparison::Kind::Divergent && cmp.undecided > 0)
    cmp.kind = LanguageComparison::Kind::Inconclusive;
  return cmp;
}

}  // namespace lgw
