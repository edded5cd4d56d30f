#pragma once

#include <algorithm>
#include <cstddef>
#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <unordered_set>
#include <utility>
#include <vector>

#include "qgw/freegrpalg.hpp"
#include "qgw/term.hpp"

namespace qgw {

// Edge labels of the homogeneous representation: node mu^g contributes the
// label pair (left edge, right edge) below.
//   mul   (X2,    X1^-1)     ldiv  (X3^-1, X1)     rrdiv (X3,    X2^-1)
//   opp   (X1^-1, X2)        lldiv (X1,    X3^-1)  rdiv  (X2^-1, X3)
inline std::pair<std::uint8_t, std::uint8_t> edge_labels(OpSymbol op) {
  static const std::pair<std::uint8_t, std::uint8_t> scheme[6] = {
      {x2, x1i}, {x3i, x1}, {x3, x2i}, {x1i, x2}, {x1, x3i}, {x2i, x3}};
  return scheme[static_cast<int>(op)];
}

// One generator leaf together with the product of the edge labels read from
// the leaf toward the root (leaf-nearest letter leftmost). The sign is
// always +1: edge labels are plain letters.
struct RawEntry {
  std::string gen;
  XMonomial mono;
  std::size_t leaf_index;  // 1-based over generator leaves, in-order
};

using RawForm = std::vector<RawEntry>;

namespace detail {

inline void raw_walk(const TermPtr& t, std::vector<std::uint8_t>& path_down,
                     RawForm& out) {
  switch (t->kind) {
    case Term::Kind::idempotent:
      return;  // e = 0 contributes nothing
    case Term::Kind::leaf: {
      std::vector<std::uint8_t> up(path_down.rbegin(), path_down.rend());
      out.push_back({t->generator, XMonomial::make(1, std::move(up)), out.size() + 1});
      return;
    }
    case Term::Kind::node: {
      auto [lx, rx] = edge_labels(t->op);
      path_down.push_back(lx);
      raw_walk(t->left, path_down, out);
      path_down.back() = rx;
      raw_walk(t->right, path_down, out);
      path_down.pop_back();
      return;
    }
  }
}

}  // namespace detail

inline RawForm raw_form(const TermPtr& t) {
  RawForm out;
  std::vector<std::uint8_t> path;
  detail::raw_walk(t, path, out);
  return out;
}

// generator -> canonical Z<R,L> coefficient, zero coefficients absent;
// generators are kept in lexicographic order by the map.
struct Representation {
  std::map<std::string, Alg> coeff;

  friend bool operator==(const Representation&, const Representation&) = default;

  bool is_zero() const { return coeff.empty(); }

  void add(const std::string& gen, const Alg& p) {
    auto it = coeff.find(gen);
    if (it == coeff.end()) {
      if (!p.is_zero()) coeff.emplace(gen, p);
      return;
    }
    it->second += p;
    if (it->second.is_zero()) coeff.erase(it);
  }

  // one "gen: c1*w1 + ..." line per generator
  std::string str() const {
    std::string out;
    for (const auto& [g, p] : coeff) {
      out += g;
      out += ": ";
      out += p.str();
      out += '\n';
    }
    return out;
  }
};

inline Representation represent(const TermPtr& t) {
  Representation rep;
  for (const RawEntry& e : raw_form(t)) rep.add(e.gen, normalize(e.mono));
  return rep;
}

// Equality in the free central pique on the generators, which is the
// equality criterion for central-quasigroup words.
inline bool equal(const TermPtr& a, const TermPtr& b) {
  return represent(a) == represent(b);
}

// Generators occurring in t whose total coefficient cancels to zero.
inline std::set<std::string> eliminated_arguments(const TermPtr& t) {
  Representation rep = represent(t);
  std::set<std::string> out;
  for (const RawEntry& e : raw_form(t))
    if (!rep.coeff.count(e.gen)) out.insert(e.gen);
  return out;
}

// ---------------------------------------------------------------------------
// Argument elimination patterns.

enum class PatternKind { left, right, generic };

struct PatternHit {
  std::string gen;
  std::size_t leaf_a, leaf_b;  // 1-based generator-leaf positions, a < b
  std::string meet;            // node path from the root, 'L'/'R'; "" = root
  PatternKind kind;
  int index;  // the i of the matched figure pattern; 0 for generic
};

namespace detail {

struct LeafPath {
  std::string gen;
  std::vector<std::uint8_t> labels;  // edge labels root -> leaf
  std::string dirs;                  // 'L'/'R' per step
};

inline void collect_paths(const TermPtr& t, LeafPath& cur, std::vector<LeafPath>& out) {
  switch (t->kind) {
    case Term::Kind::idempotent: return;
    case Term::Kind::leaf:
      cur.gen = t->generator;
      out.push_back(cur);
      return;
    case Term::Kind::node: {
      auto [lx, rx] = edge_labels(t->op);
      cur.labels.push_back(lx);
      cur.dirs.push_back('L');
      collect_paths(t->left, cur, out);
      cur.labels.back() = rx;
      cur.dirs.back() = 'R';
      collect_paths(t->right, cur, out);
      cur.labels.pop_back();
      cur.dirs.pop_back();
      return;
    }
  }
}

// Matches the two figure shapes against the freely reduced leaf-to-meet
// monomials: left pattern  {X_i^-1} vs {X_{i-1} X_{i+1}}, right pattern
// {X_i} vs {X_{i+1}^-1 X_{i-1}^-1} (indices mod 3), in either path order.
inline std::pair<PatternKind, int> classify(const XMonomial& m1, const XMonomial& m2) {
  auto try_pair = [](const XMonomial& a, const XMonomial& b) -> std::pair<PatternKind, int> {
    if (a.letters.size() != 1 || b.letters.size() != 2) return {PatternKind::generic, 0};
    for (int i = 1; i <= 3; ++i) {
      std::uint8_t xi = static_cast<std::uint8_t>(2 * (i - 1));
      std::uint8_t xprev = static_cast<std::uint8_t>(2 * ((i + 1) % 3));  // X_{i-1}
      std::uint8_t xnext = static_cast<std::uint8_t>(2 * (i % 3));        // X_{i+1}
      if (a.letters[0] == xinv(xi) && b.letters[0] == xprev && b.letters[1] == xnext)
        return {PatternKind::left, i};
      if (a.letters[0] == xi && b.letters[0] == xinv(xnext) && b.letters[1] == xinv(xprev))
        return {PatternKind::right, i};
    }
    return {PatternKind::generic, 0};
  };
  auto r = try_pair(m1, m2);
  if (r.first == PatternKind::generic) r = try_pair(m2, m1);
  return r;
}

}  // namespace detail

// All pairs of leaf occurrences of one generator whose leaf-to-meet-node
// label products m1, m2 satisfy m1 = -m2 in S.
inline std::vector<PatternHit> find_elimination_patterns(const TermPtr& t) {
  std::vector<detail::LeafPath> paths;
  detail::LeafPath cur;
  detail::collect_paths(t, cur, paths);

  std::vector<PatternHit> hits;
  for (std::size_t i = 0; i < paths.size(); ++i) {
    for (std::size_t j = i + 1; j < paths.size(); ++j) {
      if (paths[i].gen != paths[j].gen) continue;
      std::size_t cp = 0;
      while (cp < paths[i].dirs.size() && cp < paths[j].dirs.size() &&
             paths[i].dirs[cp] == paths[j].dirs[cp])
        ++cp;
      auto up = [cp](const detail::LeafPath& p) {
        std::vector<std::uint8_t> v(p.labels.rbegin(), p.labels.rend() - cp);
        return XMonomial::make(1, std::move(v));
      };
      XMonomial m1 = up(paths[i]), m2 = up(paths[j]);
      if (!(normalize(m1) + normalize(m2)).is_zero()) continue;
      auto [kind, index] = detail::classify(m1, m2);
      hits.push_back({paths[i].gen, i + 1, j + 1, paths[i].dirs.substr(0, cp), kind, index});
    }
  }
  return hits;
}

// ---------------------------------------------------------------------------
// Word enumeration.

struct EnumOptions {
  bool all_six_ops = false;        // default: basic ops {*, /, \}
  unsigned long long cap = 10'000'000;  // raw term budget
};

struct WordClass {
  TermPtr term;  // minimal representative under (leaf count, print string)
  Representation rep;
};

struct EnumerationLimitError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

namespace detail {

inline const std::vector<OpSymbol>& op_set(bool all_six) {
  static const std::vector<OpSymbol> basic = {OpSymbol::mul, OpSymbol::rdiv, OpSymbol::ldiv};
  static const std::vector<OpSymbol> all = {OpSymbol::mul, OpSymbol::ldiv, OpSymbol::rrdiv,
                                            OpSymbol::opp, OpSymbol::lldiv, OpSymbol::rdiv};
  return all_six ? all : basic;
}

}  // namespace detail

inline std::vector<WordClass> enumerate_words(const std::vector<std::string>& generators,
                                              std::size_t max_leaves,
                                              const EnumOptions& opts = {}) {
  if (generators.empty()) throw std::invalid_argument("generator list is empty");
  if (max_leaves < 1) throw std::invalid_argument("max_leaves must be >= 1");
  const auto& ops = detail::op_set(opts.all_six_ops);

  // raw term count: t(1) = |gens|, t(n) = |ops| * sum t(k) t(n-k)
  std::vector<unsigned long long> count(max_leaves + 1, 0);
  unsigned long long total = 0;
  count[1] = generators.size();
  total = count[1];
  for (std::size_t n = 2; n <= max_leaves; ++n) {
    for (std::size_t k = 1; k < n; ++k) {
      unsigned long long c = count[k] * count[n - k] * ops.size();
      if (count[k] && (c / count[k]) / ops.size() != count[n - k]) c = opts.cap + 1;
      count[n] += c;
      if (count[n] > opts.cap) break;
    }
    total += count[n];
    if (total > opts.cap)
      throw EnumerationLimitError("raw term count exceeds cap of " + std::to_string(opts.cap));
  }

  std::vector<std::vector<TermPtr>> by_leaves(max_leaves + 1);
  for (const auto& g : generators) by_leaves[1].push_back(Term::make_leaf(g));

  std::vector<WordClass> classes;
  std::unordered_set<std::string> seen;
  auto sweep = [&](std::vector<TermPtr>& terms) {
    std::sort(terms.begin(), terms.end(),
              [](const TermPtr& a, const TermPtr& b) { return print(a) < print(b); });
    for (const TermPtr& t : terms) {
      Representation rep = represent(t);
      if (seen.insert(rep.str()).second) classes.push_back({t, std::move(rep)});
    }
  };

  sweep(by_leaves[1]);
  for (std::size_t n = 2; n <= max_leaves; ++n) {
    auto& bucket = by_leaves[n];
    for (std::size_t k = 1; k < n; ++k)
      for (const TermPtr& l : by_leaves[k])
        for (const TermPtr& r : by_leaves[n - k])
          for (OpSymbol op : ops) bucket.push_back(Term::make_node(op, l, r));
    sweep(bucket);
  }
  return classes;
}

// ---------------------------------------------------------------------------
// The six hyperidentities x (xy mu^{tau g}) mu^g = y at representation level.

inline bool rep_identity_check(const S3& g) {
  TermPtr x = Term::make_leaf("x");
  TermPtr y = Term::make_leaf("y");
  TermPtr inner = Term::make_node(op_from_group_element(S3::tau() * g), x, y);
  TermPtr whole = Term::make_node(op_from_group_element(g), x, inner);
  Representation expect;
  expect.add("y", Alg::one());
  return represent(whole) == expect;
}

}  // namespace qgw
