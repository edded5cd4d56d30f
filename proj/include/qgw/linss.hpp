#pragma once

#include <array>
#include <cstdint>
#include <numeric>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include "qgw/finiteqg.hpp"
#include "qgw/revaut.hpp"

namespace qgw {

// ---------------------------------------------------------------------------
// Dense integer matrices modulo n. Vectors are rows and endomorphisms act on
// the right, so composition "f then g" is the ordinary product F*G.

struct ModMat {
  long long mod = 0;
  int rows = 0, cols = 0;
  std::vector<long long> a;  // row-major, entries in [0, mod)

  ModMat() = default;
  ModMat(long long n, int r, int c) : mod(n), rows(r), cols(c), a(r * c, 0) {}

  static ModMat from(long long n, const std::vector<std::vector<long long>>& m) {
    ModMat out(n, static_cast<int>(m.size()), m.empty() ? 0 : static_cast<int>(m[0].size()));
    for (int i = 0; i < out.rows; ++i) {
      if (static_cast<int>(m[i].size()) != out.cols)
        throw std::invalid_argument("ragged matrix");
      for (int j = 0; j < out.cols; ++j) out(i, j) = ((m[i][j] % n) + n) % n;
    }
    return out;
  }

  static ModMat identity(long long n, int k) {
    ModMat out(n, k, k);
    for (int i = 0; i < k; ++i) out(i, i) = 1;
    return out;
  }

  long long& operator()(int i, int j) { return a[i * cols + j]; }
  long long operator()(int i, int j) const { return a[i * cols + j]; }

  friend bool operator==(const ModMat&, const ModMat&) = default;

  friend ModMat operator+(const ModMat& x, const ModMat& y) {
    ModMat r = x;
    for (std::size_t i = 0; i < r.a.size(); ++i) r.a[i] = (r.a[i] + y.a[i]) % r.mod;
    return r;
  }
  friend ModMat operator-(const ModMat& x, const ModMat& y) {
    ModMat r = x;
    for (std::size_t i = 0; i < r.a.size(); ++i) r.a[i] = (r.a[i] - y.a[i] + r.mod) % r.mod;
    return r;
  }
  ModMat operator-() const {
    ModMat r = *this;
    for (auto& v : r.a) v = (mod - v) % mod;
    return r;
  }
  friend ModMat operator*(const ModMat& x, const ModMat& y) {
    if (x.cols != y.rows) throw std::invalid_argument("matrix shape mismatch");
    ModMat r(x.mod, x.rows, y.cols);
    for (int i = 0; i < x.rows; ++i)
      for (int k = 0; k < x.cols; ++k) {
        long long v = x(i, k);
        if (!v) continue;
        for (int j = 0; j < y.cols; ++j) r(i, j) = (r(i, j) + v * y(k, j)) % r.mod;
      }
    return r;
  }
};

using ModVec = std::vector<long long>;  // row vector, entries in [0, mod)

inline ModVec operator*(const ModVec& v, const ModMat& m) {
  ModVec out(m.cols, 0);
  for (int i = 0; i < m.rows; ++i) {
    if (!v[i]) continue;
    for (int j = 0; j < m.cols; ++j) out[j] = (out[j] + v[i] * m(i, j)) % m.mod;
  }
  return out;
}

inline ModVec vadd(const ModVec& x, const ModVec& y, long long n) {
  ModVec out(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) out[i] = (x[i] + y[i]) % n;
  return out;
}

inline ModVec vneg(const ModVec& x, long long n) {
  ModVec out(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) out[i] = (n - x[i]) % n;
  return out;
}

namespace detail {

inline long long egcd(long long a, long long b, long long& x, long long& y) {
  if (b == 0) {
    x = 1;
    y = 0;
    return a;
  }
  long long x1, y1;
  long long g = egcd(b, a % b, x1, y1);
  x = y1;
  y = x1 - (a / b) * y1;
  return g;
}

inline bool unit_mod(long long v, long long n, long long& inv) {
  long long x, y;
  long long g = egcd(((v % n) + n) % n, n, x, y);
  if (g != 1 && g != -1) return false;
  inv = ((x % n) + n) % n;
  return true;
}

// Fraction-free Bareiss determinant of the integer lift; exact for our sizes.
inline __int128 det_bareiss(const ModMat& m) {
  const int k = m.rows;
  if (k == 0) return 1;
  std::vector<__int128> w(m.a.begin(), m.a.end());
  auto at = [&](int i, int j) -> __int128& { return w[i * k + j]; };
  __int128 prev = 1;
  int sign = 1;
  for (int p = 0; p < k - 1; ++p) {
    if (at(p, p) == 0) {
      int r = p + 1;
      while (r < k && at(r, p) == 0) ++r;
      if (r == k) return 0;
      for (int j = 0; j < k; ++j) std::swap(at(p, j), at(r, j));
      sign = -sign;
    }
    for (int i = p + 1; i < k; ++i)
      for (int j = p + 1; j < k; ++j)
        at(i, j) = (at(i, j) * at(p, p) - at(i, p) * at(p, j)) / prev;
    prev = at(p, p);
  }
  return sign * at(k - 1, k - 1);
}

}  // namespace detail

inline long long det_mod(const ModMat& m) {
  if (m.rows != m.cols) throw std::invalid_argument("det of non-square matrix");
  __int128 d = detail::det_bareiss(m) % m.mod;
  return static_cast<long long>(d < 0 ? d + m.mod : d);
}

inline bool invertible_mod(const ModMat& m) {
  long long inv;
  return detail::unit_mod(det_mod(m), m.mod, inv);
}

// Adjugate-based inverse; throws when det is not a unit mod n.
inline ModMat inverse_mod(const ModMat& m) {
  const int k = m.rows;
  if (k != m.cols) throw std::invalid_argument("inverse of non-square matrix");
  long long dinv;
  if (!detail::unit_mod(det_mod(m), m.mod, dinv))
    throw ValidationError("matrix is not invertible mod " + std::to_string(m.mod));
  ModMat inv(m.mod, k, k);
  if (k == 0) return inv;
  ModMat minor(m.mod, k - 1, k - 1);
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j) {
      for (int r = 0, rr = 0; r < k; ++r) {
        if (r == i) continue;
        for (int c = 0, cc = 0; c < k; ++c) {
          if (c == j) continue;
          minor(rr, cc) = m(r, c);
          ++cc;
        }
        ++rr;
      }
      long long cof = det_mod(minor);
      if ((i + j) & 1) cof = (m.mod - cof) % m.mod;
      inv(j, i) = cof * dinv % m.mod;  // adjugate is the transposed cofactor matrix
    }
  return inv;
}

// ---------------------------------------------------------------------------
// Linear semisymmetrized algebras on Z_n^k.

struct LinSSAlgebra {
  long long modulus = 0;
  int dim = 0;
  ModMat rho, lambda;       // lambda = rho^-1
  std::array<ModMat, 3> a;  // complete orthogonal idempotents
};

// Verifies: a1+a2+a3 = 1, a_i a_j = delta_ij a_i, rho lambda = lambda rho =
// 1 = -rho^3, and the conjugation relations a1 = a2^rho, a2 = a3^rho,
// a3 = a1^rho. lambda is derived from rho, never taken as input.
inline LinSSAlgebra check_conditions(long long modulus, const ModMat& rho,
                                     const std::array<ModMat, 3>& idem) {
  if (modulus < 2) throw ValidationError("modulus must be >= 2");
  const int k = rho.rows;
  if (rho.cols != k || k < 1) throw ValidationError("rho must be square, dim >= 1");
  for (const auto& m : idem)
    if (m.rows != k || m.cols != k) throw ValidationError("idempotent has wrong shape");

  const ModMat one = ModMat::identity(modulus, k);
  if (!invertible_mod(rho)) throw ValidationError("rho is not invertible mod " +
                                                  std::to_string(modulus));
  if (rho * rho * rho != -one) throw ValidationError("rho^3 != -1");
  ModMat lambda = inverse_mod(rho);
  if (rho * lambda != one || lambda * rho != one)
    throw ValidationError("rho lambda != 1");  // unreachable; kept as a cross-check

  if (idem[0] + idem[1] + idem[2] != one) throw ValidationError("a1 + a2 + a3 != 1");
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      ModMat p = idem[i] * idem[j];
      ModMat want = i == j ? idem[i] : ModMat(modulus, k, k);
      if (p != want)
        throw ValidationError("a" + std::to_string(i + 1) + " a" + std::to_string(j + 1) +
                              (i == j ? " != a" + std::to_string(i + 1) : " != 0"));
    }
  // a_i = a_{i+1}^rho, i.e. rho a_i = a_{i+1} rho
  for (int i = 0; i < 3; ++i)
    if (rho * idem[i] != idem[(i + 1) % 3] * rho)
      throw ValidationError("conjugation relation fails: a" + std::to_string(i + 1) +
                            " != a" + std::to_string((i + 1) % 3 + 1) + "^rho");

  return {modulus, k, rho, std::move(lambda), idem};
}

// ---------------------------------------------------------------------------
// Materialized operations over the carrier Z_n^k.

inline constexpr long long kCarrierCap = 4096;

inline long long carrier_size(long long n, int k) {
  long long s = 1;
  for (int i = 0; i < k; ++i) {
    s *= n;
    if (s > kCarrierCap) throw ValidationError("carrier size n^k exceeds cap 4096");
  }
  return s;
}

inline ModVec decode_vec(long long idx, long long n, int k) {
  ModVec v(k);
  for (int i = k - 1; i >= 0; --i) {
    v[i] = idx % n;
    idx /= n;
  }
  return v;
}

inline long long encode_vec(const ModVec& v, long long n) {
  long long idx = 0;
  for (long long x : v) idx = idx * n + x;
  return idx;
}

inline std::string vec_name(const ModVec& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(v[i]);
  }
  return s;
}

struct LinSSOperations {
  FiniteQuasigroup mul;  // x . y = x rho + y lambda, elements of Z_n^k
  long long modulus;
  int dim;
  std::array<ModMat, 3> a;

  ModVec alpha(const ModVec& x1, const ModVec& x2, const ModVec& x3) const {
    return vadd(vadd((x1) * a[0], (x2) * a[1], modulus), (x3) * a[2], modulus);
  }
};

inline LinSSOperations build_operations(const LinSSAlgebra& alg) {
  const long long size = carrier_size(alg.modulus, alg.dim);
  std::vector<std::string> names;
  names.reserve(size);
  for (long long i = 0; i < size; ++i)
    names.push_back(vec_name(decode_vec(i, alg.modulus, alg.dim)));
  Table t(size, std::vector<int>(size));
  for (long long x = 0; x < size; ++x) {
    ModVec xr = (decode_vec(x, alg.modulus, alg.dim)) * alg.rho;
    for (long long y = 0; y < size; ++y) {
      ModVec yl = (decode_vec(y, alg.modulus, alg.dim)) * alg.lambda;
      t[x][y] = static_cast<int>(encode_vec(vadd(xr, yl, alg.modulus), alg.modulus));
    }
  }
  return {validate(std::move(names), std::move(t)), alg.modulus, alg.dim, alg.a};
}

// ---------------------------------------------------------------------------
// Axiom cross-validation on a concrete instance.

struct AxiomReport {
  bool ok = true;
  std::vector<std::string> lines;

  void record(const std::string& what, bool pass, const std::string& witness = "") {
    ok = ok && pass;
    lines.push_back(what + ": " + (pass ? "ok" : "FAIL" + (witness.empty() ? "" : " " + witness)));
  }
};

// Exhaustively checks (a) semisymmetric quasigroup, (b) idempotence plus the
// sampled diagonal identity, (c) the compatibility identity (exact matrix
// equivalents plus sampled instances). Works from the raw fields, so a
// corrupted algebra produces failure lines rather than an exception here.
inline AxiomReport verify_semisymmetrized_axioms(const LinSSAlgebra& alg,
                                                 int samples = 10'000,
                                                 std::uint32_t seed = 20220815) {
  AxiomReport rep;
  const long long n = alg.modulus;
  const long long size = carrier_size(n, alg.dim);
  std::mt19937 rng(seed);
  std::uniform_int_distribution<long long> pick(0, size - 1);
  auto rand_vec = [&] { return decode_vec(pick(rng), n, alg.dim); };

  // (a) quasigroup + semisymmetry
  bool latin = true;
  std::string latin_msg;
  try {
    (void)build_operations(alg);
  } catch (const ValidationError& e) {
    latin = false;
    latin_msg = e.what();
  }
  rep.record("(P,.) is a quasigroup", latin, latin_msg);

  auto dot = [&](const ModVec& x, const ModVec& y) {
    return vadd((x) * alg.rho, (y) * alg.lambda, n);
  };
  bool semisym = true;
  std::string w;
  for (long long x = 0; x < size && semisym; ++x)
    for (long long y = 0; y < size && semisym; ++y) {
      ModVec vx = decode_vec(x, n, alg.dim), vy = decode_vec(y, n, alg.dim);
      if (dot(vx, dot(vy, vx)) != vy) {
        semisym = false;
        w = "at x=" + vec_name(vx) + " y=" + vec_name(vy);
      }
    }
  rep.record("semisymmetry x(yx) = y", semisym, w);

  // R(0) = rho = L(0)^-1, as endomorphism identities on every element
  bool r0 = true;
  for (long long x = 0; x < size && r0; ++x) {
    ModVec vx = decode_vec(x, n, alg.dim);
    ModVec zero(alg.dim, 0);
    r0 = dot(vx, zero) == (vx) * alg.rho && dot(zero, vx) == (vx) * alg.lambda;
  }
  rep.record("R(0) = rho and L(0) = rho^-1", r0);

  auto alpha = [&](const ModVec& x1, const ModVec& x2, const ModVec& x3) {
    return vadd(vadd((x1) * alg.a[0], (x2) * alg.a[1], n), (x3) * alg.a[2], n);
  };

  // (b) idempotence, exhaustive
  bool idem = true;
  w.clear();
  for (long long x = 0; x < size && idem; ++x) {
    ModVec vx = decode_vec(x, n, alg.dim);
    if (alpha(vx, vx, vx) != vx) {
      idem = false;
      w = "at x=" + vec_name(vx);
    }
  }
  rep.record("idempotence (x,x,x)alpha = x", idem, w);

  // (b) diagonal identity, sampled 3x3 grids; the exact equivalent is the
  // orthogonal-idempotent condition checked in check_conditions
  bool diag = true;
  w.clear();
  for (int s = 0; s < samples && diag; ++s) {
    ModVec g[3][3];
    for (auto& row : g)
      for (auto& v : row) v = rand_vec();
    ModVec lhs = alpha(alpha(g[0][0], g[0][1], g[0][2]), alpha(g[1][0], g[1][1], g[1][2]),
                       alpha(g[2][0], g[2][1], g[2][2]));
    if (lhs != alpha(g[0][0], g[1][1], g[2][2])) {
      diag = false;
      w = "at sample " + std::to_string(s);
    }
  }
  rep.record("diagonal identity (sampled)", diag, w);

  // (c) compatibility: exact matrix form rho a_i = a_{i+1} rho and
  // lambda a_i = a_{i-1} lambda, plus sampled instances of the identity
  bool compat_exact = true;
  for (int i = 0; i < 3; ++i) {
    compat_exact = compat_exact && alg.rho * alg.a[i] == alg.a[(i + 1) % 3] * alg.rho;
    compat_exact = compat_exact && alg.lambda * alg.a[i] == alg.a[(i + 2) % 3] * alg.lambda;
  }
  rep.record("compatibility, coefficient identities", compat_exact);

  bool compat = true;
  w.clear();
  for (int s = 0; s < samples && compat; ++s) {
    ModVec x1 = rand_vec(), x2 = rand_vec(), x3 = rand_vec();
    ModVec y1 = rand_vec(), y2 = rand_vec(), y3 = rand_vec();
    ModVec lhs = alpha(dot(x1, y1), dot(x2, y2), dot(x3, y3));
    ModVec rhs = dot(alpha(x3, x1, x2), alpha(y2, y3, y1));
    if (lhs != rhs) {
      compat = false;
      w = "at sample " + std::to_string(s);
    }
  }
  rep.record("compatibility identity (sampled)", compat, w);

  return rep;
}

// ---------------------------------------------------------------------------
// Theta decomposition: P = S1 + S2 + S3 with S_i = Im a_i, and the blocks of
// rho: [x1 0 0]rho = [0 0 x1 theta1], [0 x2 0]rho = [x2 theta2 0 0],
// [0 0 x3]rho = [0 x3 theta3 0].

struct ThetaDecomposition {
  long long modulus = 0;
  int dim = 0;   // ambient dimension k
  int rank = 0;  // common rank f of the three summands
  std::array<ModMat, 3> basis;   // f x k, rows are basis vectors of Im a_i
  std::array<std::vector<int>, 3> pivots;
  std::array<ModMat, 3> theta;   // theta1 : S1->S3, theta2 : S2->S1, theta3 : S3->S2
};

namespace detail {

// Reduced row echelon sweep using unit pivots. Works for any field modulus;
// over composite moduli it errors out if no unit pivot can be found even
// though the image might still be free.
inline void image_basis(const ModMat& m, ModMat& basis, std::vector<int>& pivot_cols) {
  const long long n = m.mod;
  const int k = m.cols;
  std::vector<ModVec> rows;
  for (int i = 0; i < m.rows; ++i) {
    ModVec r(k);
    for (int j = 0; j < k; ++j) r[j] = m(i, j);
    rows.push_back(std::move(r));
  }
  std::vector<ModVec> done;
  pivot_cols.clear();
  while (true) {
    int pr = -1, pc = -1;
    long long pinv = 0;
    for (std::size_t i = 0; i < rows.size() && pr < 0; ++i)
      for (int j = 0; j < k; ++j) {
        long long inv;
        if (rows[i][j] != 0 && detail::unit_mod(rows[i][j], n, inv)) {
          pr = static_cast<int>(i);
          pc = j;
          pinv = inv;
          break;
        }
      }
    if (pr < 0) break;
    ModVec piv = rows[pr];
    for (auto& v : piv) v = v * pinv % n;
    rows.erase(rows.begin() + pr);
    auto eliminate = [&](ModVec& r) {
      long long c = r[pc];
      if (!c) return;
      for (int j = 0; j < k; ++j) r[j] = ((r[j] - c * piv[j]) % n + n) % n;
    };
    for (auto& r : rows) eliminate(r);
    for (auto& r : done) eliminate(r);
    done.push_back(std::move(piv));
    pivot_cols.push_back(pc);
  }
  for (const auto& r : rows)
    for (long long v : r)
      if (v) throw ValidationError("cannot extract a free basis for the image mod " +
                                   std::to_string(n));
  basis = ModMat(n, static_cast<int>(done.size()), k);
  for (int i = 0; i < basis.rows; ++i)
    for (int j = 0; j < k; ++j) basis(i, j) = done[i][j];
}

// Coordinates of v in the reduced basis; throws if v is not in the span.
inline ModVec coords_in_basis(const ModVec& v, const ModMat& basis,
                              const std::vector<int>& pivot_cols) {
  ModVec c(basis.rows);
  for (int i = 0; i < basis.rows; ++i) c[i] = v[pivot_cols[i]];
  if ((c) * basis != v) throw ValidationError("block structure violated");
  return c;
}

}  // namespace detail

inline ThetaDecomposition extract_thetas(const LinSSAlgebra& alg) {
  ThetaDecomposition dec;
  dec.modulus = alg.modulus;
  dec.dim = alg.dim;
  for (int i = 0; i < 3; ++i) detail::image_basis(alg.a[i], dec.basis[i], dec.pivots[i]);
  if (dec.basis[0].rows != dec.basis[1].rows || dec.basis[1].rows != dec.basis[2].rows)
    throw ValidationError("summands have different ranks");
  dec.rank = dec.basis[0].rows;
  if (3 * dec.rank != alg.dim) throw ValidationError("ranks do not add up to the dimension");

  // the stacked bases must be a basis of the whole space
  ModMat stacked(alg.modulus, alg.dim, alg.dim);
  for (int b = 0; b < 3; ++b)
    for (int i = 0; i < dec.rank; ++i)
      for (int j = 0; j < alg.dim; ++j) stacked(b * dec.rank + i, j) = dec.basis[b](i, j);
  if (!invertible_mod(stacked)) throw ValidationError("S1 + S2 + S3 is not a direct sum");

  // theta_i read off rho on each block: S1 -> S3, S2 -> S1, S3 -> S2
  const int to[3] = {2, 0, 1};
  for (int i = 0; i < 3; ++i) {
    ModMat th(alg.modulus, dec.rank, dec.rank);
    for (int r = 0; r < dec.rank; ++r) {
      ModVec b(alg.dim);
      for (int j = 0; j < alg.dim; ++j) b[j] = dec.basis[i](r, j);
      ModVec img = (b) * alg.rho;
      ModVec c = detail::coords_in_basis(img, dec.basis[to[i]], dec.pivots[to[i]]);
      for (int j = 0; j < dec.rank; ++j) th(r, j) = c[j];
    }
    dec.theta[i] = std::move(th);
  }

  const ModMat minus_one = -ModMat::identity(alg.modulus, dec.rank);
  if (dec.theta[0] * dec.theta[2] * dec.theta[1] != minus_one ||
      dec.theta[1] * dec.theta[0] * dec.theta[2] != minus_one ||
      dec.theta[2] * dec.theta[1] * dec.theta[0] != minus_one)
    throw ValidationError("theta products are not -1");
  return dec;
}

// ---------------------------------------------------------------------------
// The reversible automaton on (S1, S2, S3):
//   y3 / x2 = y3 theta1^-1 + x2 theta2,  y1 \ x3 = y1 theta2^-1 + x3 theta3,
//   x1 . y2 = x1 theta1 + y2 theta3^-1.
// State spaces are materialized in theta coordinates.

inline ReversibleAutomaton to_automaton(const ThetaDecomposition& dec) {
  const long long n = dec.modulus;
  const int f = dec.rank;
  const long long size = carrier_size(n, f);
  std::vector<std::string> names;
  for (long long i = 0; i < size; ++i) names.push_back(vec_name(decode_vec(i, n, f)));

  // inverses via the cyclic relations: theta1^-1 = -theta3 theta2, etc.
  ModMat t1i = -(dec.theta[2] * dec.theta[1]);
  ModMat t2i = -(dec.theta[0] * dec.theta[2]);
  ModMat t3i = -(dec.theta[1] * dec.theta[0]);

  ReversibleAutomaton a;
  a.s1 = a.s2 = a.s3 = names;
  a.mul.assign(size, std::vector<int>(size));
  a.rdiv.assign(size, std::vector<int>(size));
  a.ldiv.assign(size, std::vector<int>(size));
  for (long long x = 0; x < size; ++x) {
    ModVec vx = decode_vec(x, n, f);
    for (long long y = 0; y < size; ++y) {
      ModVec vy = decode_vec(y, n, f);
      a.mul[x][y] = static_cast<int>(
          encode_vec(vadd((vx) * dec.theta[0], (vy) * t3i, n), n));
      a.rdiv[x][y] = static_cast<int>(
          encode_vec(vadd((vx) * t1i, (vy) * dec.theta[1], n), n));
      a.ldiv[x][y] = static_cast<int>(
          encode_vec(vadd((vx) * t2i, (vy) * dec.theta[2], n), n));
    }
  }
  return validate_automaton(std::move(a));
}

// ---------------------------------------------------------------------------
// Identification of (P, .) with the semisymmetrization of an abelian-group
// isotope: A = S1, l1 = 1, l2 = theta2^-1, l3 = l2 theta3^-1, extraction
// along (l1, l2, l3) gives opposed subtraction x . y = -x + y on A, and
// (q1, q2, q3) -> q1 l1 + q2 l2 + q3 l3 (embedded in P) is an isomorphism
// from the semisymmetrization of (A, -x+y) onto (P, .).

struct IdentifyReport {
  bool ok = true;
  std::vector<std::string> lines;
  FiniteQuasigroup extracted;

  void record(const std::string& what, bool pass) {
    ok = ok && pass;
    lines.push_back(what + ": " + (pass ? "ok" : "FAIL"));
  }
};

inline IdentifyReport identify_semisymmetrization(const LinSSAlgebra& alg) {
  IdentifyReport rep;
  ThetaDecomposition dec = extract_thetas(alg);
  ReversibleAutomaton aut = to_automaton(dec);
  const long long n = dec.modulus;
  const int f = dec.rank;
  const long long size = static_cast<long long>(aut.s1.size());

  ModMat l2 = -(dec.theta[0] * dec.theta[2]);   // theta2^-1
  ModMat t3i = -(dec.theta[1] * dec.theta[0]);  // theta3^-1
  ModMat l3 = l2 * t3i;
  rep.record("l3 = l2 theta3^-1 = -theta1", l3 == -dec.theta[0]);

  std::vector<int> l1_idx(size), l2_idx(size), l3_idx(size);
  for (long long x = 0; x < size; ++x) {
    ModVec v = decode_vec(x, n, f);
    l1_idx[x] = static_cast<int>(x);
    l2_idx[x] = static_cast<int>(encode_vec((v) * l2, n));
    l3_idx[x] = static_cast<int>(encode_vec((v) * l3, n));
  }
  rep.extracted = extract_quasigroup(aut, l1_idx, l2_idx, l3_idx, aut.s1);

  bool opposed = true;
  for (long long x = 0; x < size && opposed; ++x)
    for (long long y = 0; y < size && opposed; ++y) {
      ModVec want = vadd(vneg(decode_vec(x, n, f), n), decode_vec(y, n, f), n);
      opposed = rep.extracted.mul[x][y] == static_cast<int>(encode_vec(want, n));
    }
  rep.record("extracted operation is -x + y on A", opposed);

  // phi : A^3 -> P, (q1,q2,q3) -> q1 B1 + (q2 l2) B2 + (q3 l3) B3
  LinSSOperations ops = build_operations(alg);
  FiniteQuasigroup semis = semisymmetrize(rep.extracted);
  const long long psize = static_cast<long long>(ops.mul.order());
  std::vector<int> phi(size * size * size);
  std::vector<char> hit(psize, 0);
  bool bijective = true;
  for (long long q1 = 0; q1 < size; ++q1)
    for (long long q2 = 0; q2 < size; ++q2)
      for (long long q3 = 0; q3 < size; ++q3) {
        ModVec p = (decode_vec(q1, n, f)) * dec.basis[0];
        p = vadd(p, ((decode_vec(q2, n, f)) * l2) * dec.basis[1], n);
        p = vadd(p, ((decode_vec(q3, n, f)) * l3) * dec.basis[2], n);
        long long idx = encode_vec(p, n);
        phi[(q1 * size + q2) * size + q3] = static_cast<int>(idx);
        if (hit[idx]) bijective = false;
        hit[idx] = 1;
      }
  rep.record("phi is a bijection A^3 -> P", bijective && size * size * size == psize);

  Homotopy h{semis, ops.mul, phi, phi, phi};
  rep.record("phi is an isomorphism onto (P,.)", is_homomorphism(h));
  return rep;
}

}  // namespace qgw
