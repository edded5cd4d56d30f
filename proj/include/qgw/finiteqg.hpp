#pragma once

#include <cstddef>
#include <map>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include "qgw/s3.hpp"
#include "qgw/term.hpp"

namespace qgw {

struct ValidationError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

using Table = std::vector<std::vector<int>>;

// Finite quasigroup given by its Cayley table. Immutable once validated;
// rdiv and ldiv are derived by row/column inversion.
struct FiniteQuasigroup {
  std::vector<std::string> elements;
  Table mul, rdiv, ldiv;

  int order() const { return static_cast<int>(elements.size()); }
  friend bool operator==(const FiniteQuasigroup&, const FiniteQuasigroup&) = default;
};

inline FiniteQuasigroup validate(std::vector<std::string> elements, Table mul) {
  const int n = static_cast<int>(elements.size());
  if (static_cast<int>(mul.size()) != n)
    throw ValidationError("table has " + std::to_string(mul.size()) + " rows, expected " +
                          std::to_string(n));
  for (int r = 0; r < n; ++r) {
    if (static_cast<int>(mul[r].size()) != n)
      throw ValidationError("row " + std::to_string(r) + " has wrong length");
    for (int c = 0; c < n; ++c)
      if (mul[r][c] < 0 || mul[r][c] >= n)
        throw ValidationError("row " + std::to_string(r) + " column " + std::to_string(c) +
                              ": entry out of range");
  }
  for (int r = 0; r < n; ++r) {
    std::vector<char> seen(n, 0);
    for (int c = 0; c < n; ++c) {
      int v = mul[r][c];
      if (seen[v])
        throw ValidationError("row " + std::to_string(r) + " repeats element " + elements[v]);
      seen[v] = 1;
    }
  }
  for (int c = 0; c < n; ++c) {
    std::vector<char> seen(n, 0);
    for (int r = 0; r < n; ++r) {
      int v = mul[r][c];
      if (seen[v])
        throw ValidationError("column " + std::to_string(c) + " repeats element " + elements[v]);
      seen[v] = 1;
    }
  }

  FiniteQuasigroup q;
  q.elements = std::move(elements);
  q.mul = std::move(mul);
  q.rdiv.assign(n, std::vector<int>(n, -1));
  q.ldiv.assign(n, std::vector<int>(n, -1));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      int c = q.mul[a][b];
      q.rdiv[c][b] = a;  // x/y: unique a with a*y = x
      q.ldiv[a][c] = b;  // x\y: unique b with x*b = y
    }
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      if (q.mul[a][q.ldiv[a][b]] != b) throw ValidationError("(SL) fails");
      if (q.mul[q.rdiv[b][a]][a] != b) throw ValidationError("(SR) fails");
      if (q.ldiv[a][q.mul[a][b]] != b) throw ValidationError("(IL) fails");
      if (q.rdiv[q.mul[b][a]][a] != b) throw ValidationError("(IR) fails");
    }
  return q;
}

// Conjugate (Q, mu^g): whenever x1 x2 mu = x3, set x_{1g} x_{2g} mu^g = x_{3g}.
inline FiniteQuasigroup conjugate(const FiniteQuasigroup& q, const S3& g) {
  const int n = q.order();
  Table t(n, std::vector<int>(n, -1));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      int x[3] = {a, b, q.mul[a][b]};
      t[x[g.img[0]]][x[g.img[1]]] = x[g.img[2]];
    }
  return validate(q.elements, std::move(t));
}

inline bool is_semisymmetric(const FiniteQuasigroup& q) {
  const int n = q.order();
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      if (q.mul[x][q.mul[y][x]] != y) return false;
  // equivalent form R(x) = L(x)^-1, i.e. (y x) x... checked via y*x then x*_ = y
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      if (q.mul[x][q.mul[y][x]] != y || q.mul[q.mul[x][y]][x] != y) return false;
  return true;
}

// Semisymmetrization on Q^3: (x1,x2,x3)(y1,y2,y3) = (x2//y3, x3\\y1, x1.y2).
inline FiniteQuasigroup semisymmetrize(const FiniteQuasigroup& q) {
  const int n = q.order();
  const int n3 = n * n * n;
  std::vector<std::string> names;
  names.reserve(n3);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k)
        names.push_back("(" + q.elements[i] + "," + q.elements[j] + "," + q.elements[k] + ")");

  Table t(n3, std::vector<int>(n3));
  for (int x1 = 0; x1 < n; ++x1)
    for (int x2 = 0; x2 < n; ++x2)
      for (int x3 = 0; x3 < n; ++x3) {
        int xi = (x1 * n + x2) * n + x3;
        for (int y1 = 0; y1 < n; ++y1)
          for (int y2 = 0; y2 < n; ++y2)
            for (int y3 = 0; y3 < n; ++y3) {
              int c1 = q.rdiv[y3][x2];  // x2 // y3 = y3 / x2
              int c2 = q.ldiv[y1][x3];  // x3 \\ y1 = y1 \ x3
              int c3 = q.mul[x1][y2];
              t[xi][(y1 * n + y2) * n + y3] = (c1 * n + c2) * n + c3;
            }
      }
  return validate(std::move(names), std::move(t));
}

// ---------------------------------------------------------------------------
// Homotopies.

struct Homotopy {
  FiniteQuasigroup source, target;
  std::vector<int> f1, f2, f3;
};

inline bool is_homotopy(const Homotopy& h) {
  const int n = h.source.order();
  const int m = h.target.order();
  for (const auto* f : {&h.f1, &h.f2, &h.f3}) {
    if (static_cast<int>(f->size()) != n) return false;
    for (int v : *f)
      if (v < 0 || v >= m) return false;
  }
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      if (h.target.mul[h.f1[x]][h.f2[y]] != h.f3[h.source.mul[x][y]]) return false;
  return true;
}

inline bool is_homomorphism(const Homotopy& h) {
  return h.f1 == h.f2 && h.f2 == h.f3 && is_homotopy(h);
}

// Counit at Q: the projection triple (pi1, pi2, pi3): Q Delta -> Q.
inline Homotopy counit_homotopy(const FiniteQuasigroup& q) {
  const int n = q.order();
  Homotopy h{semisymmetrize(q), q, {}, {}, {}};
  h.f1.reserve(n * n * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k) {
        h.f1.push_back(i);
        h.f2.push_back(j);
        h.f3.push_back(k);
      }
  return h;
}

// Unit at a semisymmetric P: x -> (x,x,x) into P Delta, as a homomorphism.
inline Homotopy unit_homomorphism(const FiniteQuasigroup& p) {
  const int n = p.order();
  Homotopy h{p, semisymmetrize(p), {}, {}, {}};
  for (int x = 0; x < n; ++x) h.f1.push_back((x * n + x) * n + x);
  h.f2 = h.f3 = h.f1;
  return h;
}

// Morphism part of the semisymmetrization functor: componentwise image of a
// homotopy, as a map Q Delta -> Q' Delta.
inline Homotopy delta_of_homotopy(const Homotopy& h) {
  const int n = h.source.order();
  const int m = h.target.order();
  Homotopy d{semisymmetrize(h.source), semisymmetrize(h.target), {}, {}, {}};
  d.f1.reserve(n * n * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k)
        d.f1.push_back((h.f1[i] * m + h.f2[j]) * m + h.f3[k]);
  d.f2 = d.f3 = d.f1;
  return d;
}

// ---------------------------------------------------------------------------
// The monoid of binary operations under xy(alpha*beta) = x (xy alpha) beta.

struct BinaryOpTable {
  std::vector<std::string> base;  // carrier element names
  Table table;
};

inline BinaryOpTable binop_identity(const FiniteQuasigroup& q) {
  const int n = q.order();
  Table t(n, std::vector<int>(n));
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) t[x][y] = y;
  return {q.elements, std::move(t)};
}

inline BinaryOpTable binop_of(const FiniteQuasigroup& q, const S3& g) {
  return {q.elements, conjugate(q, g).mul};
}

inline BinaryOpTable binop_mul(const BinaryOpTable& a, const BinaryOpTable& b) {
  if (a.base != b.base) throw std::invalid_argument("binary operations over different carriers");
  const int n = static_cast<int>(a.base.size());
  Table t(n, std::vector<int>(n));
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) t[x][y] = b.table[x][a.table[x][y]];
  return {a.base, std::move(t)};
}

struct TrialityUnitReport {
  bool ok = true;
  std::vector<std::string> lines;
};

// mu^{tau g} and mu^g are mutually inverse units of the binary-word monoid.
inline TrialityUnitReport check_triality_units(const FiniteQuasigroup& q) {
  TrialityUnitReport rep;
  BinaryOpTable eps = binop_identity(q);
  for (const S3& g : S3::all()) {
    BinaryOpTable mg = binop_of(q, g);
    BinaryOpTable mtg = binop_of(q, S3::tau() * g);
    bool ok = binop_mul(mtg, mg).table == eps.table && binop_mul(mg, mtg).table == eps.table;
    rep.ok = rep.ok && ok;
    rep.lines.push_back("mu^{t " + g.word() + "} inverse to mu^{" + g.word() + "}: " +
                        (ok ? "ok" : "FAIL"));
  }
  return rep;
}

// ---------------------------------------------------------------------------
// Term evaluation over a finite quasigroup (no pointed idempotent).

inline int eval(const FiniteQuasigroup& q, const TermPtr& t,
                const std::map<std::string, int>& assignment) {
  switch (t->kind) {
    case Term::Kind::idempotent:
      throw std::invalid_argument("cannot evaluate @e in a plain quasigroup");
    case Term::Kind::leaf: {
      auto it = assignment.find(t->generator);
      if (it == assignment.end())
        throw std::invalid_argument("no assignment for generator " + t->generator);
      return it->second;
    }
    case Term::Kind::node: {
      int a = eval(q, t->left, assignment);
      int b = eval(q, t->right, assignment);
      switch (t->op) {
        case OpSymbol::mul: return q.mul[a][b];
        case OpSymbol::rdiv: return q.rdiv[a][b];
        case OpSymbol::ldiv: return q.ldiv[a][b];
        case OpSymbol::opp: return q.mul[b][a];
        case OpSymbol::rrdiv: return q.rdiv[b][a];
        case OpSymbol::lldiv: return q.ldiv[b][a];
      }
    }
  }
  throw std::logic_error("corrupt term");
}

// ---------------------------------------------------------------------------
// Latin square generation (tables only; wrap with validate()).

inline std::vector<std::string> default_names(int n) {
  std::vector<std::string> names;
  names.reserve(n);
  for (int i = 0; i < n; ++i) names.push_back(std::to_string(i));
  return names;
}

// All n x n Latin squares in row-major lexicographic order.
inline std::vector<Table> all_latin_squares(int n) {
  std::vector<Table> out;
  Table t(n, std::vector<int>(n, -1));
  std::vector<unsigned> rowmask(n, 0), colmask(n, 0);
  // iterative DFS over cells
  int cell = 0;
  std::vector<int> value(n * n, -1);
  if (n == 0) return {t};
  while (cell >= 0) {
    int r = cell / n, c = cell % n;
    int v = value[cell] + 1;
    if (value[cell] >= 0) {
      rowmask[r] &= ~(1u << value[cell]);
      colmask[c] &= ~(1u << value[cell]);
    }
    while (v < n && ((rowmask[r] >> v) & 1u || (colmask[c] >> v) & 1u)) ++v;
    if (v == n) {
      value[cell] = -1;
      --cell;
      continue;
    }
    value[cell] = v;
    rowmask[r] |= 1u << v;
    colmask[c] |= 1u << v;
    t[r][c] = v;
    if (cell == n * n - 1) {
      out.push_back(t);
      // backtrack in place
    } else {
      ++cell;
    }
  }
  return out;
}

inline Table random_latin_square(int n, std::mt19937& rng) {
  if (n == 0) return {};
  while (true) {
    Table t(n, std::vector<int>(n, -1));
    std::vector<unsigned> rowmask(n, 0), colmask(n, 0);
    bool ok = true;
    for (int cell = 0; cell < n * n && ok; ++cell) {
      int r = cell / n, c = cell % n;
      std::vector<int> cand;
      for (int v = 0; v < n; ++v)
        if (!((rowmask[r] >> v) & 1u) && !((colmask[c] >> v) & 1u)) cand.push_back(v);
      if (cand.empty()) {
        ok = false;  // dead end; restart
        break;
      }
      int v = cand[std::uniform_int_distribution<int>(0, static_cast<int>(cand.size()) - 1)(rng)];
      t[r][c] = v;
      rowmask[r] |= 1u << v;
      colmask[c] |= 1u << v;
    }
    if (ok) return t;
  }
}

// (Z_n, x + y)
inline FiniteQuasigroup cyclic_group(int n) {
  Table t(n, std::vector<int>(n));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) t[a][b] = (a + b) % n;
  return validate(default_names(n), std::move(t));
}

}  // namespace qgw
