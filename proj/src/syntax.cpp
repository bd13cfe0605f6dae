#include "lgw/syntax.hpp"

#include <array>
#include <cctype>
#include <memory>
#include <vector>

namespace lgw {
namespace {

enum class Tk { Atom, FormOp, SolidOp, PureOp, LParen, RParen, Turnstile, End };

struct Token {
  Tk kind = Tk::End;
  Conn conn = Conn::Prod;  // for the three op kinds
  std::string text;
  size_t pos = 0;
};

struct OpSpelling {
  const char* text;
  Tk kind;
  Conn conn;
};

// Longest spellings first; pure/solid spellings must be tried before atom
// scanning so that e.g. "o*o" is one token, not three.
constexpr std::array<OpSpelling, 17> kOps = {{
    {".-<.", Tk::SolidOp, Conn::Rdiff},
    {".>-.", Tk::SolidOp, Conn::Ldiff},
    {"o-<o", Tk::PureOp, Conn::Rdiff},
    {"o>-o", Tk::PureOp, Conn::Ldiff},
    {".*.", Tk::SolidOp, Conn::Prod},
    {".\\.", Tk::SolidOp, Conn::Under},
    {"./.", Tk::SolidOp, Conn::Over},
    {".+.", Tk::SolidOp, Conn::Coprod},
    {"o*o", Tk::PureOp, Conn::Prod},
    {"o\\o", Tk::PureOp, Conn::Under},
    {"o/o", Tk::PureOp, Conn::Over},
    {"o+o", Tk::PureOp, Conn::Coprod},
    {"-<", Tk::FormOp, Conn::Rdiff},
    {">-", Tk::FormOp, Conn::Ldiff},
    {"*", Tk::FormOp, Conn::Prod},
    {"\\", Tk::FormOp, Conn::Under},
    {"/", Tk::FormOp, Conn::Over},
}};

std::vector<Token> lex(const std::string& s) {
  std::vector<Token> out;
  size_t i = 0;
  while (i < s.size()) {
    if (std::isspace(static_cast<unsigned char>(s[i]))) {
      ++i;
      continue;
    }
    char c = s[i];
    if (c == '(') {
      out.push_back({Tk::LParen, Conn::Prod, "(", i++});
      continue;
    }
    if (c == ')') {
      out.push_back({Tk::RParen, Conn::Prod, ")", i++});
      continue;
    }
    if (c == '|' && i + 1 < s.size() && s[i + 1] == '-') {
      out.push_back({Tk::Turnstile, Conn::Prod, "|-", i});
      i += 2;
      continue;
    }
    if (c == '+') {  // bare + is the coproduct connective
      out.push_back({Tk::FormOp, Conn::Coprod, "+", i++});
      continue;
    }
    bool matched = false;
    for (const auto& op : kOps) {
      size_t n = std::char_traits<char>::length(op.text);
      if (s.compare(i, n, op.text) == 0) {
        out.push_back({op.kind, op.conn, op.text, i});
        i += n;
        matched = true;
        break;
      }
    }
    if (matched) continue;
    if (c >= 'a' && c <= 'z') {
      size_t j = i + 1;
      while (j < s.size() && ((s[j] >= 'a' && s[j] <= 'z') ||
                              (s[j] >= '0' && s[j] <= '9') || s[j] == '\''))
        ++j;
      out.push_back({Tk::Atom, Conn::Prod, s.substr(i, j - i), i});
      i = j;
      continue;
    }
    throw ParseError(i, std::string("unexpected character '") + c + "'");
  }
  out.push_back({Tk::End, Conn::Prod, "", s.size()});
  return out;
}

// Parse tree before formula/structure classification.
struct PTerm {
  Token atom;                       // set iff leaf
  Token op;                         // set iff binary
  std::unique_ptr<PTerm> l, r;
  bool is_atom() const { return l == nullptr; }
};

struct Parser {
  const std::vector<Token>& ts;
  size_t i = 0;

  const Token& peek() const { return ts[i]; }
  Token take() { return ts[i++]; }

  std::unique_ptr<PTerm> operand() {
    const Token& t = peek();
    if (t.kind == Tk::Atom) {
      auto p = std::make_unique<PTerm>();
      p->atom = take();
      return p;
    }
    if (t.kind == Tk::LParen) {
      take();
      auto p = term();
      if (peek().kind != Tk::RParen)
        throw ParseError(peek().pos, "expected ')'");
      take();
      return p;
    }
    throw ParseError(t.pos, "expected an atom or '('");
  }

  // term := operand (op operand)?  -- one operator per level.
  std::unique_ptr<PTerm> term() {
    auto lhs = operand();
    const Token& t = peek();
    if (t.kind == Tk::FormOp || t.kind == Tk::SolidOp || t.kind == Tk::PureOp) {
      auto p = std::make_unique<PTerm>();
      p->op = take();
      p->l = std::move(lhs);
      p->r = operand();
      const Token& u = peek();
      if (u.kind == Tk::FormOp || u.kind == Tk::SolidOp || u.kind == Tk::PureOp)
        throw ParseError(u.pos,
                         "only one operator per level; add parentheses");
      return p;
    }
    return lhs;
  }
};

FormulaPtr to_formula(const PTerm& p) {
  if (p.is_atom()) return make_atom(p.atom.text);
  if (p.op.kind != Tk::FormOp)
    throw ParseError(p.op.pos, "structural connective '" + p.op.text +
                                   "' inside a formula");
  return make_formula(p.op.conn, to_formula(*p.l), to_formula(*p.r));
}

StructPtr to_structure(const PTerm& p) {
  if (p.is_atom() || p.op.kind == Tk::FormOp) return make_leaf(to_formula(p));
  DotKind dot = p.op.kind == Tk::PureOp ? DotKind::Pure : DotKind::Solid;
  return make_node(p.op.conn, dot, to_structure(*p.l), to_structure(*p.r));
}

}  // namespace

FormulaPtr parse_formula(const std::string& text) {
  auto ts = lex(text);
  Parser p{ts};
  auto t = p.term();
  if (p.peek().kind != Tk::End)
    throw ParseError(p.peek().pos, "trailing input after formula");
  return to_formula(*t);
}

Sequent parse_sequent(const std::string& text, bool validate) {
  auto ts = lex(text);
  Parser p{ts};
  auto lhs = p.term();
  if (p.peek().kind != Tk::Turnstile)
    throw ParseError(p.peek().pos, "expected '|-'");
  size_t turnstile_at = p.take().pos;
  auto rhs = p.term();
  if (p.peek().kind != Tk::End)
    throw ParseError(p.peek().pos, "trailing input after sequent");
  Sequent s{to_structure(*lhs), to_structure(*rhs)};
  if (validate) {
    std::string d = polarity_diagnostic(s.ant, Polarity::Input);
    if (!d.empty()) throw ParseError(0, "antecedent: " + d);
    d = polarity_diagnostic(s.suc, Polarity::Output);
    if (!d.empty()) throw ParseError(turnstile_at, "succedent: " + d);
  }
  return s;
}

namespace {

void fmt_formula(const FormulaPtr& f, bool parens, std::string& out) {
  if (f->is_atom()) {
    out += f->atom;
    return;
  }
  if (parens) out += '(';
  fmt_formula(f->left, true, out);
  out += ' ';
  out += conn_symbol(f->conn);
  out += ' ';
  fmt_formula(f->right, true, out);
  if (parens) out += ')';
}

void fmt_structure(const StructPtr& s, bool parens, std::string& out) {
  if (s->is_leaf()) {
    fmt_formula(s->leaf, parens && !s->leaf->is_atom(), out);
    return;
  }
  if (parens) out += '(';
  fmt_structure(s->left, true, out);
  out += ' ';
  char wrap = s->dot == DotKind::Pure ? 'o' : '.';
  out += wrap;
  out += conn_symbol(s->family);
  out += wrap;
  out += ' ';
  fmt_structure(s->right, true, out);
  if (parens) out += ')';
}

}  // namespace

std::string print_formula(const FormulaPtr& f) {
  std::string out;
  fmt_formula(f, false, out);
  return out;
}

std::string print_structure(const StructPtr& s) {
  std::string out;
  fmt_structure(s, false, out);
  return out;
}

std::string print_sequent(const Sequent& s) {
  return print_structure(s.ant) + " |- " + print_structure(s.suc);
}

}  // namespace lgw
