#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "qgw/finiteqg.hpp"

namespace qgw {

// Reversible automaton of quasigroup type: state spaces S1, S2, S3 with
//   mul : S1 x S2 -> S3,  rdiv : S3 x S2 -> S1,  ldiv : S1 x S3 -> S2
// satisfying (ILA), (IRA), (SLA), (SRA). Empty state spaces are allowed.
struct ReversibleAutomaton {
  std::vector<std::string> s1, s2, s3;
  Table mul, rdiv, ldiv;

  friend bool operator==(const ReversibleAutomaton&, const ReversibleAutomaton&) = default;
};

namespace detail {

inline void check_shape(const Table& t, std::size_t rows, std::size_t cols, std::size_t range,
                        const char* name) {
  if (t.size() != rows) throw ValidationError(std::string(name) + ": wrong row count");
  for (const auto& row : t) {
    if (row.size() != cols) throw ValidationError(std::string(name) + ": wrong row length");
    for (int v : row)
      if (v < 0 || v >= static_cast<int>(range))
        throw ValidationError(std::string(name) + ": entry out of range");
  }
}

}  // namespace detail

inline ReversibleAutomaton validate_automaton(ReversibleAutomaton a) {
  const std::size_t n1 = a.s1.size(), n2 = a.s2.size(), n3 = a.s3.size();
  detail::check_shape(a.mul, n1, n2, n3, "mul");
  detail::check_shape(a.rdiv, n3, n2, n1, "rdiv");
  detail::check_shape(a.ldiv, n1, n3, n2, "ldiv");
  for (std::size_t x1 = 0; x1 < n1; ++x1)
    for (std::size_t x2 = 0; x2 < n2; ++x2) {
      int p = a.mul[x1][x2];
      if (a.ldiv[x1][p] != static_cast<int>(x2))
        throw ValidationError("(ILA) fails at x1=" + a.s1[x1] + ", x2=" + a.s2[x2]);
      if (a.rdiv[p][x2] != static_cast<int>(x1))
        throw ValidationError("(IRA) fails at x1=" + a.s1[x1] + ", x2=" + a.s2[x2]);
    }
  for (std::size_t x1 = 0; x1 < n1; ++x1)
    for (std::size_t x3 = 0; x3 < n3; ++x3)
      if (a.mul[x1][a.ldiv[x1][x3]] != static_cast<int>(x3))
        throw ValidationError("(SLA) fails at x1=" + a.s1[x1] + ", x3=" + a.s3[x3]);
  for (std::size_t x3 = 0; x3 < n3; ++x3)
    for (std::size_t x2 = 0; x2 < n2; ++x2)
      if (a.mul[a.rdiv[x3][x2]][x2] != static_cast<int>(x3))
        throw ValidationError("(SRA) fails at x3=" + a.s3[x3] + ", x2=" + a.s2[x2]);
  return a;
}

inline ReversibleAutomaton from_quasigroup(const FiniteQuasigroup& q) {
  return validate_automaton({q.elements, q.elements, q.elements, q.mul, q.rdiv, q.ldiv});
}

// ---------------------------------------------------------------------------
// Purity.

struct PurityAnalysis {
  bool pure = false;
  // witnesses, only when pure: bijections and their inverses, built from the
  // fixed elements s1 in S1 and s2 in S2 (indices 0)
  std::vector<int> s1_to_s3, s3_to_s1;  // x1 -> x1 . s2  and  x3 -> x3 / s2
  std::vector<int> s2_to_s3, s3_to_s2;  // x2 -> s1 . x2  and  x3 -> s1 \ x3
};

// Classifies a validated automaton: pure when all three state spaces are
// nonempty (at most one empty never validates unless a second is empty too),
// degenerate when two or three are empty.
inline PurityAnalysis purity_analysis(const ReversibleAutomaton& a) {
  PurityAnalysis out;
  int nonempty = (!a.s1.empty()) + (!a.s2.empty()) + (!a.s3.empty());
  if (nonempty < 3) return out;  // degenerate
  out.pure = true;
  const std::size_t n1 = a.s1.size(), n2 = a.s2.size(), n3 = a.s3.size();
  for (std::size_t x1 = 0; x1 < n1; ++x1) out.s1_to_s3.push_back(a.mul[x1][0]);
  for (std::size_t x3 = 0; x3 < n3; ++x3) out.s3_to_s1.push_back(a.rdiv[x3][0]);
  for (std::size_t x2 = 0; x2 < n2; ++x2) out.s2_to_s3.push_back(a.mul[0][x2]);
  for (std::size_t x3 = 0; x3 < n3; ++x3) out.s3_to_s2.push_back(a.ldiv[0][x3]);
  return out;
}

// ---------------------------------------------------------------------------
// Quasigroup extraction along chosen bijections l_i : Q -> S_i.

namespace detail {

inline std::vector<int> invert_bijection(const std::vector<int>& f, std::size_t range,
                                         const char* name) {
  std::vector<int> inv(range, -1);
  if (f.size() != range) throw ValidationError(std::string(name) + " is not a bijection");
  for (std::size_t x = 0; x < f.size(); ++x) {
    if (f[x] < 0 || f[x] >= static_cast<int>(range) || inv[f[x]] != -1)
      throw ValidationError(std::string(name) + " is not a bijection");
    inv[f[x]] = static_cast<int>(x);
  }
  return inv;
}

}  // namespace detail

// x . y = (x^l1 . y^l2) l3^-1 and its division counterparts. The triple
// (l1, l2, l3) is then an automaton isomorphism from_quasigroup(result) -> a.
inline FiniteQuasigroup extract_quasigroup(const ReversibleAutomaton& a,
                                           const std::vector<int>& l1,
                                           const std::vector<int>& l2,
                                           const std::vector<int>& l3,
                                           std::vector<std::string> carrier_names = {}) {
  const std::size_t n = a.s1.size();
  if (a.s2.size() != n || a.s3.size() != n)
    throw ValidationError("state spaces have different sizes; automaton is not pure");
  detail::invert_bijection(l1, n, "l1");
  detail::invert_bijection(l2, n, "l2");
  auto l3inv = detail::invert_bijection(l3, n, "l3");
  if (carrier_names.empty())
    for (std::size_t i = 0; i < n; ++i) carrier_names.push_back("q" + std::to_string(i));
  Table t(n, std::vector<int>(n));
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) t[x][y] = l3inv[a.mul[l1[x]][l2[y]]];
  return validate(std::move(carrier_names), std::move(t));
}

// ---------------------------------------------------------------------------
// Homomorphisms of reversible automata.

struct AutomatonHomomorphism {
  ReversibleAutomaton source, target;
  std::vector<int> f1, f2, f3;
};

inline bool is_automaton_homomorphism(const AutomatonHomomorphism& h) {
  const auto& a = h.source;
  const auto& b = h.target;
  if (h.f1.size() != a.s1.size() || h.f2.size() != a.s2.size() || h.f3.size() != a.s3.size())
    return false;
  for (int v : h.f1)
    if (v < 0 || v >= static_cast<int>(b.s1.size())) return false;
  for (int v : h.f2)
    if (v < 0 || v >= static_cast<int>(b.s2.size())) return false;
  for (int v : h.f3)
    if (v < 0 || v >= static_cast<int>(b.s3.size())) return false;
  for (std::size_t x1 = 0; x1 < a.s1.size(); ++x1)
    for (std::size_t x2 = 0; x2 < a.s2.size(); ++x2)
      if (b.mul[h.f1[x1]][h.f2[x2]] != h.f3[a.mul[x1][x2]]) return false;
  for (std::size_t x3 = 0; x3 < a.s3.size(); ++x3)
    for (std::size_t x2 = 0; x2 < a.s2.size(); ++x2)
      if (b.rdiv[h.f3[x3]][h.f2[x2]] != h.f1[a.rdiv[x3][x2]]) return false;
  for (std::size_t x1 = 0; x1 < a.s1.size(); ++x1)
    for (std::size_t x3 = 0; x3 < a.s3.size(); ++x3)
      if (b.ldiv[h.f1[x1]][h.f3[x3]] != h.f2[a.ldiv[x1][x3]]) return false;
  return true;
}

}  // namespace qgw
