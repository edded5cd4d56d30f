#pragma once

#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "qgw/s3.hpp"

namespace qgw {

// Letters of the free group on {R, L}; inverse of a letter is letter ^ 1.
// The numeric order R < R^-1 < L < L^-1 is the shortlex letter order.
enum GrpLetter : std::uint8_t { gR = 0, gRi = 1, gL = 2, gLi = 3 };

using GroupWord = std::vector<std::uint8_t>;

inline GroupWord reduce(const GroupWord& letters) {
  GroupWord out;
  out.reserve(letters.size());
  for (std::uint8_t x : letters) {
    if (!out.empty() && out.back() == (x ^ 1))
      out.pop_back();
    else
      out.push_back(x);
  }
  return out;
}

inline GroupWord concat_reduce(const GroupWord& a, const GroupWord& b) {
  GroupWord out = a;
  for (std::uint8_t x : b) {
    if (!out.empty() && out.back() == (x ^ 1))
      out.pop_back();
    else
      out.push_back(x);
  }
  return out;
}

inline std::string word_str(const GroupWord& w) {
  static const char* names[4] = {"R", "R^-1", "L", "L^-1"};
  if (w.empty()) return "1";
  std::string out;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) out += ' ';
    out += names[w[i]];
  }
  return out;
}

struct ShortLex {
  bool operator()(const GroupWord& a, const GroupWord& b) const {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  }
};

// Element of the group algebra Z<R,L> in canonical form: reduced words with
// nonzero integer coefficients, kept in shortlex order.
struct Alg {
  std::map<GroupWord, long long, ShortLex> terms;

  static Alg zero() { return {}; }
  static Alg monomial(long long c, GroupWord w) {
    Alg p;
    if (c != 0) p.terms.emplace(reduce(w), c);
    return p;
  }
  static Alg one() { return monomial(1, {}); }

  bool is_zero() const { return terms.empty(); }
  friend bool operator==(const Alg&, const Alg&) = default;

  void add_term(const GroupWord& w, long long c) {
    if (c == 0) return;
    auto [it, fresh] = terms.emplace(w, c);
    if (!fresh && (it->second += c) == 0) terms.erase(it);
  }

  Alg& operator+=(const Alg& q) {
    for (const auto& [w, c] : q.terms) add_term(w, c);
    return *this;
  }
  friend Alg operator+(Alg p, const Alg& q) { return p += q; }

  Alg operator-() const {
    Alg r = *this;
    for (auto& [w, c] : r.terms) c = -c;
    return r;
  }
  friend Alg operator-(const Alg& p, const Alg& q) { return p + (-q); }

  friend Alg operator*(const Alg& p, const Alg& q) {
    Alg r;
    for (const auto& [w1, c1] : p.terms)
      for (const auto& [w2, c2] : q.terms) r.add_term(concat_reduce(w1, w2), c1 * c2);
    return r;
  }
  Alg& operator*=(const Alg& q) { return *this = *this * q; }

  // "c1*w1 + c2*w2 + ..." in shortlex order; "0" when empty.
  std::string str() const {
    if (terms.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [w, c] : terms) {
      long long a = c;
      if (first) {
        if (a < 0) out += '-';
      } else {
        out += a < 0 ? " - " : " + ";
      }
      if (a < 0) a = -a;
      out += std::to_string(a);
      out += '*';
      out += word_str(w);
      first = false;
    }
    return out;
  }
};

inline Alg add(const Alg& p, const Alg& q) { return p + q; }
inline Alg mul(const Alg& p, const Alg& q) { return p * q; }

// ---------------------------------------------------------------------------
// X-monomials: signed words in X1, X2, X3 and their inverses, freely reduced
// but not rewritten modulo the cyclic relations.

enum XLetter : std::uint8_t { x1 = 0, x1i = 1, x2 = 2, x2i = 3, x3 = 4, x3i = 5 };

inline std::uint8_t xinv(std::uint8_t x) { return x ^ 1; }

inline std::string xletter_str(std::uint8_t x) {
  static const char* names[6] = {"X1", "X1^-1", "X2", "X2^-1", "X3", "X3^-1"};
  return names[x];
}

struct XMonomial {
  int sign = 1;  // +1 or -1
  std::vector<std::uint8_t> letters;  // freely reduced

  static XMonomial make(int sign, std::vector<std::uint8_t> raw) {
    XMonomial m;
    m.sign = sign;
    m.letters.reserve(raw.size());
    for (std::uint8_t x : raw) {
      if (!m.letters.empty() && m.letters.back() == xinv(x))
        m.letters.pop_back();
      else
        m.letters.push_back(x);
    }
    return m;
  }

  friend bool operator==(const XMonomial&, const XMonomial&) = default;

  XMonomial operator*(const XMonomial& o) const {
    std::vector<std::uint8_t> raw = letters;
    raw.insert(raw.end(), o.letters.begin(), o.letters.end());
    return make(sign * o.sign, std::move(raw));
  }

  std::string str() const {
    std::string out = sign < 0 ? "-" : "";
    if (letters.empty()) return out + "1";
    for (std::size_t i = 0; i < letters.size(); ++i) {
      if (i) out += ' ';
      out += xletter_str(letters[i]);
    }
    return out;
  }
};

// Substitution X1 = L^-1, X2 = R, X3 = -L R^-1 (so X3^-1 = -R L^-1).
// Always yields a single signed monomial of Z<R,L>.
inline Alg normalize(const XMonomial& m) {
  static const struct { int sign; GroupWord word; } subst[6] = {
      {+1, {gLi}}, {+1, {gL}}, {+1, {gR}}, {+1, {gRi}}, {-1, {gL, gRi}}, {-1, {gR, gLi}}};
  int sign = m.sign;
  GroupWord w;
  for (std::uint8_t x : m.letters) {
    sign *= subst[x].sign;
    w = concat_reduce(w, subst[x].word);
  }
  return Alg::monomial(sign, w);
}

// ---------------------------------------------------------------------------
// S3 action on the coefficient algebra, generated by
//   (1 2): X1 -> X2^-1, X2 -> X1^-1, X3 -> X3^-1
//   (2 3): X1 -> X1^-1, X2 -> X3^-1, X3 -> X2^-1
// Substitutions compose left-to-right along the word of g in s, t.

// Image of a single X letter under one generator (letters map to letters).
inline std::uint8_t xletter_under_gen(char gen, std::uint8_t x) {
  static const std::uint8_t s_map[6] = {x2i, x2, x1i, x1, x3i, x3};
  static const std::uint8_t t_map[6] = {x1i, x1, x3i, x3, x2i, x2};
  return gen == 's' ? s_map[x] : t_map[x];
}

inline XMonomial xsubst(const S3& g, const XMonomial& m) {
  std::vector<std::uint8_t> out = m.letters;
  for (char gen : g.word()) {
    if (gen == '1') break;
    for (auto& x : out) x = xletter_under_gen(gen, x);
  }
  return XMonomial::make(m.sign, std::move(out));
}

namespace detail {

// On the reduced (R,L) basis the generators act by
//   s: R <-> L, R^-1 <-> L^-1          (sign-free swap)
//   t: R -> -R L^-1, R^-1 -> -L R^-1, L -> L^-1, L^-1 -> L
struct SignedWord {
  int sign;
  GroupWord word;
};

inline Alg act_gen(char gen, const Alg& p) {
  static const SignedWord s_tab[4] = {{+1, {gL}}, {+1, {gLi}}, {+1, {gR}}, {+1, {gRi}}};
  static const SignedWord t_tab[4] = {{-1, {gR, gLi}}, {-1, {gL, gRi}}, {+1, {gLi}}, {+1, {gL}}};
  const SignedWord* tab = gen == 's' ? s_tab : t_tab;
  Alg out;
  for (const auto& [w, c] : p.terms) {
    int sign = 1;
    GroupWord img;
    for (std::uint8_t x : w) {
      sign *= tab[x].sign;
      img = concat_reduce(img, tab[x].word);
    }
    out.add_term(img, sign * c);
  }
  return out;
}

}  // namespace detail

inline Alg act(const S3& g, const Alg& p) {
  Alg out = p;
  for (char gen : g.word()) {
    if (gen == '1') break;
    out = detail::act_gen(gen, out);
  }
  return out;
}

// ---------------------------------------------------------------------------
// The cyclic relations X3X2X1 = X2X1X3 = X1X3X2 = -1.

inline const std::array<XMonomial, 3>& cyclic_products() {
  static const std::array<XMonomial, 3> rels = {
      XMonomial::make(1, {x3, x2, x1}),
      XMonomial::make(1, {x2, x1, x3}),
      XMonomial::make(1, {x1, x3, x2})};
  return rels;
}

struct CyclicRelationReport {
  bool ok = true;
  std::vector<std::string> lines;
};

// Verifies that all three cyclic products normalize to -1, and that each of
// the other two follows from X3X2X1 = -1 by invertibility: from wvu = -1 one
// gets vu = -w^-1, hence vuw = -w^-1 w = -1 (and cyclically).
inline CyclicRelationReport check_cyclic_relations() {
  CyclicRelationReport rep;
  const Alg minus_one = Alg::monomial(-1, {});
  const char* names[3] = {"X3 X2 X1", "X2 X1 X3", "X1 X3 X2"};
  for (int i = 0; i < 3; ++i) {
    bool ok = normalize(cyclic_products()[i]) == minus_one;
    rep.ok = rep.ok && ok;
    rep.lines.push_back(std::string(names[i]) + " = -1: " + (ok ? "ok" : "FAIL"));
  }
  // both derivation routes, e.g. X2X1 = -X3^-1 and X1X3 = -X2^-1
  const std::uint8_t a = x3, b = x2, c = x1;
  bool r1 = normalize(XMonomial::make(1, {b, c})) == -normalize(XMonomial::make(1, {xinv(a)}));
  bool r2 = normalize(XMonomial::make(1, {c, a})) == -normalize(XMonomial::make(1, {xinv(b)}));
  rep.ok = rep.ok && r1 && r2;
  rep.lines.push_back(std::string("X2 X1 = -X3^-1: ") + (r1 ? "ok" : "FAIL"));
  rep.lines.push_back(std::string("X1 X3 = -X2^-1: ") + (r2 ? "ok" : "FAIL"));
  return rep;
}

}  // namespace qgw
