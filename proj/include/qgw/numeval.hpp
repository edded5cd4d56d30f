#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdio>
#include <map>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

#include "qgw/homrep.hpp"

namespace qgw {

struct Rational {
  long long num = 0, den = 1;

  Rational() = default;
  Rational(long long n) : num(n) {}
  Rational(long long n, long long d) : num(n), den(d) { reduce_(); }

  void reduce_() {
    if (den == 0) throw std::invalid_argument("zero denominator");
    if (den < 0) {
      num = -num;
      den = -den;
    }
    long long g = std::gcd(num < 0 ? -num : num, den);
    if (g > 1) {
      num /= g;
      den /= g;
    }
  }

  friend bool operator==(const Rational&, const Rational&) = default;
  friend Rational operator+(const Rational& a, const Rational& b) {
    return {a.num * b.den + b.num * a.den, a.den * b.den};
  }
  friend Rational operator-(const Rational& a, const Rational& b) {
    return {a.num * b.den - b.num * a.den, a.den * b.den};
  }
  friend Rational operator*(const Rational& a, const Rational& b) {
    return {a.num * b.num, a.den * b.den};
  }
  Rational operator-() const { return {-num, den}; }
  double to_double() const { return static_cast<double>(num) / static_cast<double>(den); }
};

// Element of Q(sqrt2, sqrt5): c0 + c1 sqrt2 + c2 sqrt5 + c3 sqrt10, with
// exact rational components. sqrt2*sqrt5 = sqrt10, sqrt2*sqrt10 = 2 sqrt5,
// sqrt5*sqrt10 = 5 sqrt2, sqrt10^2 = 10.
struct FieldElement {
  std::array<Rational, 4> c{};

  FieldElement() = default;
  FieldElement(long long n) { c[0] = Rational(n); }

  static FieldElement sqrt2() {
    FieldElement f;
    f.c[1] = Rational(1);
    return f;
  }
  static FieldElement sqrt5() {
    FieldElement f;
    f.c[2] = Rational(1);
    return f;
  }

  bool is_zero() const { return *this == FieldElement(); }
  friend bool operator==(const FieldElement&, const FieldElement&) = default;

  friend FieldElement operator+(const FieldElement& a, const FieldElement& b) {
    FieldElement r;
    for (int i = 0; i < 4; ++i) r.c[i] = a.c[i] + b.c[i];
    return r;
  }
  friend FieldElement operator-(const FieldElement& a, const FieldElement& b) {
    FieldElement r;
    for (int i = 0; i < 4; ++i) r.c[i] = a.c[i] - b.c[i];
    return r;
  }
  FieldElement operator-() const {
    FieldElement r;
    for (int i = 0; i < 4; ++i) r.c[i] = -c[i];
    return r;
  }
  friend FieldElement operator*(const FieldElement& a, const FieldElement& b) {
    const auto& x = a.c;
    const auto& y = b.c;
    FieldElement r;
    r.c[0] = x[0] * y[0] + Rational(2) * (x[1] * y[1]) + Rational(5) * (x[2] * y[2]) +
             Rational(10) * (x[3] * y[3]);
    r.c[1] = x[0] * y[1] + x[1] * y[0] + Rational(5) * (x[2] * y[3] + x[3] * y[2]);
    r.c[2] = x[0] * y[2] + x[2] * y[0] + Rational(2) * (x[1] * y[3] + x[3] * y[1]);
    r.c[3] = x[0] * y[3] + x[3] * y[0] + x[1] * y[2] + x[2] * y[1];
    return r;
  }

  double to_double() const {
    return c[0].to_double() + c[1].to_double() * std::sqrt(2.0) +
           c[2].to_double() * std::sqrt(5.0) + c[3].to_double() * std::sqrt(10.0);
  }
};

struct Matrix2 {
  std::array<std::array<FieldElement, 2>, 2> m{};

  static Matrix2 identity() {
    Matrix2 r;
    r.m[0][0] = FieldElement(1);
    r.m[1][1] = FieldElement(1);
    return r;
  }

  friend bool operator==(const Matrix2&, const Matrix2&) = default;

  friend Matrix2 operator*(const Matrix2& a, const Matrix2& b) {
    Matrix2 r;
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 2; ++j)
        r.m[i][j] = a.m[i][0] * b.m[0][j] + a.m[i][1] * b.m[1][j];
    return r;
  }
  Matrix2 operator-() const {
    Matrix2 r;
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 2; ++j) r.m[i][j] = -m[i][j];
    return r;
  }
};

struct Point2 {
  std::array<FieldElement, 2> p{};

  friend bool operator==(const Point2&, const Point2&) = default;
  friend Point2 operator+(const Point2& a, const Point2& b) {
    return {{a.p[0] + b.p[0], a.p[1] + b.p[1]}};
  }
  friend Point2 operator*(const Point2& x, const Matrix2& a) {
    return {{x.p[0] * a.m[0][0] + x.p[1] * a.m[1][0], x.p[0] * a.m[0][1] + x.p[1] * a.m[1][1]}};
  }
};

// X1 = [[1,0],[-s5,1]], X2 = [[1,s5],[0,1]], X3 = [[-1,s5],[-s5,4]];
// X3 X2 X1 = -1 holds exactly.
struct ModelMatrices {
  Matrix2 x1, x2, x3;
};

inline ModelMatrices model_matrices() {
  const FieldElement s5 = FieldElement::sqrt5();
  ModelMatrices mm;
  mm.x1.m = {{{FieldElement(1), FieldElement(0)}, {-s5, FieldElement(1)}}};
  mm.x2.m = {{{FieldElement(1), s5}, {FieldElement(0), FieldElement(1)}}};
  mm.x3.m = {{{FieldElement(-1), s5}, {-s5, FieldElement(4)}}};
  return mm;
}

// Matrices of the group letters: R = X2, L = X1^-1.
inline const Matrix2& letter_matrix(std::uint8_t letter) {
  static const std::array<Matrix2, 4> tab = [] {
    const FieldElement s5 = FieldElement::sqrt5();
    std::array<Matrix2, 4> t;
    t[gR].m = {{{FieldElement(1), s5}, {FieldElement(0), FieldElement(1)}}};
    t[gRi].m = {{{FieldElement(1), -s5}, {FieldElement(0), FieldElement(1)}}};
    t[gL].m = {{{FieldElement(1), FieldElement(0)}, {s5, FieldElement(1)}}};
    t[gLi].m = {{{FieldElement(1), FieldElement(0)}, {-s5, FieldElement(1)}}};
    return t;
  }();
  return tab[letter];
}

inline Matrix2 word_matrix(const GroupWord& w) {
  Matrix2 m = Matrix2::identity();
  for (std::uint8_t x : w) m = m * letter_matrix(x);
  return m;
}

inline Matrix2 alg_matrix(const Alg& p) {
  Matrix2 acc;
  for (const auto& [w, c] : p.terms) {
    Matrix2 wm = word_matrix(w);
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 2; ++j) acc.m[i][j] = acc.m[i][j] + FieldElement(c) * wm.m[i][j];
  }
  return acc;
}

inline Point2 evaluate(const Representation& rep,
                       const std::map<std::string, Point2>& assignment) {
  Point2 acc;
  for (const auto& [gen, coeff] : rep.coeff) {
    auto it = assignment.find(gen);
    if (it == assignment.end())
      throw std::invalid_argument("no assignment for generator " + gen);
    acc = acc + it->second * alg_matrix(coeff);
  }
  return acc;
}

// ---------------------------------------------------------------------------
// Point cloud of the shortest words on one generator, at a = [sqrt2, 2].

struct PlotRow {
  std::string word;
  Point2 exact;
  double x, y;
};

struct PlotData {
  std::vector<PlotRow> rows;
  std::string csv() const;
  std::string svg() const;
};

namespace detail {

inline std::string fmt12(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12f", v);
  return buf;
}

inline std::string fmt2(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.2f", v);
  return buf;
}

}  // namespace detail

inline PlotData shortest_words_plot(std::size_t count = 16) {
  if (count < 1) throw std::invalid_argument("count must be >= 1");
  std::vector<WordClass> classes;
  for (std::size_t budget = 1;; ++budget) {
    classes = enumerate_words({"a"}, budget);
    if (classes.size() >= count) break;
  }
  classes.resize(count);

  Point2 a{{FieldElement::sqrt2(), FieldElement(2)}};
  PlotData out;
  for (const auto& cls : classes) {
    Point2 p = evaluate(cls.rep, {{"a", a}});
    out.rows.push_back({print(cls.term), p, p.p[0].to_double(), p.p[1].to_double()});
  }
  // distinct representations must land on distinct points in this model;
  // verified rather than assumed
  for (std::size_t i = 0; i < out.rows.size(); ++i)
    for (std::size_t j = i + 1; j < out.rows.size(); ++j)
      if (out.rows[i].exact == out.rows[j].exact)
        throw std::runtime_error("matrix model collapses words " + out.rows[i].word + " and " +
                                 out.rows[j].word);
  return out;
}

inline std::string PlotData::csv() const {
  std::string out = "word,x,y\n";
  for (const auto& r : rows)
    out += r.word + "," + detail::fmt12(r.x) + "," + detail::fmt12(r.y) + "\n";
  return out;
}

inline std::string PlotData::svg() const {
  double xmin = rows[0].x, xmax = rows[0].x, ymin = rows[0].y, ymax = rows[0].y;
  for (const auto& r : rows) {
    xmin = std::min(xmin, r.x);
    xmax = std::max(xmax, r.x);
    ymin = std::min(ymin, r.y);
    ymax = std::max(ymax, r.y);
  }
  const double spanx = xmax > xmin ? xmax - xmin : 1.0;
  const double spany = ymax > ymin ? ymax - ymin : 1.0;
  const double W = 800.0, H = 680.0, mx = 0.05 * W, my = 0.05 * H;
  auto px = [&](double x) { return (x - xmin) / spanx * W; };
  auto py = [&](double y) { return (ymax - y) / spany * H; };  // y up

  std::string s;
  s += "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" viewBox=\"";
  s += detail::fmt2(-mx) + " " + detail::fmt2(-my) + " " + detail::fmt2(W + 2 * mx) + " " +
       detail::fmt2(H + 2 * my) + "\">\n";
  for (const auto& r : rows) {
    s += "  <circle cx=\"" + detail::fmt2(px(r.x)) + "\" cy=\"" + detail::fmt2(py(r.y)) +
         "\" r=\"3\" fill=\"black\"/>\n";
    std::string label;
    for (char c : r.word) {  // escape the XML-significant characters
      if (c == '<')
        label += "&lt;";
      else if (c == '>')
        label += "&gt;";
      else if (c == '&')
        label += "&amp;";
      else
        label += c;
    }
    s += "  <text x=\"" + detail::fmt2(px(r.x) + 5) + "\" y=\"" + detail::fmt2(py(r.y) - 5) +
         "\" font-size=\"10\" font-family=\"sans-serif\">" + label + "</text>\n";
  }
  s += "</svg>\n";
  return s;
}

}  // namespace qgw
