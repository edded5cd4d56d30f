#pragma once

#include <cctype>
#include <cstddef>
#include <memory>
#include <stdexcept>
#include <string>
#include <utility>

#include "qgw/s3.hpp"

namespace qgw {

// The six quasigroup operations. Enumerator order matches S3::all(), so
// op_group_element(op) is just a table lookup: mul <-> 1, ldiv <-> t,
// rrdiv <-> ts, opp <-> s, lldiv <-> st, rdiv <-> sts.
enum class OpSymbol : std::uint8_t { mul, ldiv, rrdiv, opp, lldiv, rdiv };

inline S3 op_group_element(OpSymbol op) { return S3::all()[static_cast<int>(op)]; }

inline OpSymbol op_from_group_element(const S3& g) {
  for (int i = 0; i < 6; ++i)
    if (S3::all()[i] == g) return static_cast<OpSymbol>(i);
  throw std::logic_error("corrupt S3 element");
}

inline const char* op_token(OpSymbol op) {
  switch (op) {
    case OpSymbol::mul: return "*";
    case OpSymbol::ldiv: return "\\";
    case OpSymbol::rrdiv: return "//";
    case OpSymbol::opp: return "o";
    case OpSymbol::lldiv: return "\\\\";
    case OpSymbol::rdiv: return "/";
  }
  throw std::logic_error("bad OpSymbol");
}

struct Term;
using TermPtr = std::shared_ptr<const Term>;

// Parsing tree of a quasigroup word. Immutable; share freely.
struct Term {
  enum class Kind : std::uint8_t { leaf, idempotent, node };

  Kind kind;
  std::string generator;  // leaf only
  OpSymbol op{};          // node only
  TermPtr left, right;    // node only

  static TermPtr make_leaf(std::string name) {
    return std::make_shared<Term>(Term{Kind::leaf, std::move(name), {}, nullptr, nullptr});
  }
  static TermPtr make_idempotent() {
    return std::make_shared<Term>(Term{Kind::idempotent, {}, {}, nullptr, nullptr});
  }
  static TermPtr make_node(OpSymbol op, TermPtr l, TermPtr r) {
    return std::make_shared<Term>(Term{Kind::node, {}, op, std::move(l), std::move(r)});
  }
};

// Number of generator leaves; the pointed idempotent does not count.
inline std::size_t leaf_count(const TermPtr& t) {
  switch (t->kind) {
    case Term::Kind::leaf: return 1;
    case Term::Kind::idempotent: return 0;
    case Term::Kind::node: return leaf_count(t->left) + leaf_count(t->right);
  }
  return 0;
}

inline bool term_equal_syntactic(const TermPtr& a, const TermPtr& b) {
  if (a->kind != b->kind) return false;
  switch (a->kind) {
    case Term::Kind::leaf: return a->generator == b->generator;
    case Term::Kind::idempotent: return true;
    case Term::Kind::node:
      return a->op == b->op && term_equal_syntactic(a->left, b->left) &&
             term_equal_syntactic(a->right, b->right);
  }
  return false;
}

struct ParseError : std::runtime_error {
  std::size_t position;  // byte offset into the input
  ParseError(const std::string& what, std::size_t pos)
      : std::runtime_error(what + " at position " + std::to_string(pos)), position(pos) {}
};

namespace detail {

struct Lexer {
  enum class Tok { op, ident, idem, lparen, rparen, end };

  const std::string& text;
  std::size_t pos = 0;
  Tok tok = Tok::end;
  OpSymbol op{};
  std::string ident;
  std::size_t tok_pos = 0;

  explicit Lexer(const std::string& s) : text(s) { next(); }

  void next() {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    tok_pos = pos;
    if (pos == text.size()) {
      tok = Tok::end;
      return;
    }
    char c = text[pos];
    // maximal munch: '//' and '\\' win over '/' and '\'
    if (c == '/' || c == '\\') {
      bool dbl = pos + 1 < text.size() && text[pos + 1] == c;
      op = c == '/' ? (dbl ? OpSymbol::rrdiv : OpSymbol::rdiv)
                    : (dbl ? OpSymbol::lldiv : OpSymbol::ldiv);
      pos += dbl ? 2 : 1;
      tok = Tok::op;
      return;
    }
    if (c == '*') {
      op = OpSymbol::mul;
      ++pos;
      tok = Tok::op;
      return;
    }
    if (c == '(') { ++pos; tok = Tok::lparen; return; }
    if (c == ')') { ++pos; tok = Tok::rparen; return; }
    if (c == '@') {
      if (pos + 1 < text.size() && text[pos + 1] == 'e' &&
          (pos + 2 == text.size() || !isident(text[pos + 2]))) {
        pos += 2;
        tok = Tok::idem;
        return;
      }
      throw ParseError("expected '@e'", pos);
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      std::size_t start = pos;
      while (pos < text.size() && isident(text[pos])) ++pos;
      ident = text.substr(start, pos - start);
      if (ident == "o") {  // reserved operator token, never a generator
        op = OpSymbol::opp;
        tok = Tok::op;
        return;
      }
      tok = Tok::ident;
      return;
    }
    throw ParseError(std::string("unexpected character '") + c + "'", pos);
  }

  static bool isident(char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
  }
};

inline TermPtr parse_expr(Lexer& lx);

inline TermPtr parse_atom(Lexer& lx) {
  switch (lx.tok) {
    case Lexer::Tok::ident: {
      auto t = Term::make_leaf(lx.ident);
      lx.next();
      return t;
    }
    case Lexer::Tok::idem:
      lx.next();
      return Term::make_idempotent();
    case Lexer::Tok::lparen: {
      lx.next();
      auto t = parse_expr(lx);
      if (lx.tok != Lexer::Tok::rparen) throw ParseError("expected ')'", lx.tok_pos);
      lx.next();
      return t;
    }
    default:
      throw ParseError("expected a generator, '@e' or '('", lx.tok_pos);
  }
}

// single precedence level, left-associative
inline TermPtr parse_expr(Lexer& lx) {
  TermPtr t = parse_atom(lx);
  while (lx.tok == Lexer::Tok::op) {
    OpSymbol op = lx.op;
    lx.next();
    t = Term::make_node(op, t, parse_atom(lx));
  }
  return t;
}

}  // namespace detail

inline TermPtr parse(const std::string& text) {
  detail::Lexer lx(text);
  TermPtr t = detail::parse_expr(lx);
  if (lx.tok != detail::Lexer::Tok::end)
    throw ParseError("trailing input", lx.tok_pos);
  return t;
}

// Fully parenthesized except at top level; parse(print(t)) == t.
inline void print_to(const TermPtr& t, std::string& out, bool top) {
  switch (t->kind) {
    case Term::Kind::leaf: out += t->generator; return;
    case Term::Kind::idempotent: out += "@e"; return;
    case Term::Kind::node: {
      if (!top) out += '(';
      print_to(t->left, out, false);
      if (t->op == OpSymbol::opp)
        out += " o ";
      else
        out += op_token(t->op);
      print_to(t->right, out, false);
      if (!top) out += ')';
      return;
    }
  }
}

inline std::string print(const TermPtr& t) {
  std::string out;
  print_to(t, out, true);
  return out;
}

// Right regular triality action on the operation symbols: every node's
// mu^h becomes mu^{hg}; leaves are untouched.
inline TermPtr relabel_ops(const TermPtr& t, const S3& g) {
  if (t->kind != Term::Kind::node) return t;
  return Term::make_node(op_from_group_element(op_group_element(t->op) * g),
                         relabel_ops(t->left, g), relabel_ops(t->right, g));
}

}  // namespace qgw
