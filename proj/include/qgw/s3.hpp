#pragma once

#include <array>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace qgw {

// Element of the symmetric group S3 on {1,2,3}, stored as 0-based images.
// Composition is postfix throughout: x^(g*h) = (x^g)^h, so (g*h).img[i] =
// h.img[g.img[i]].
struct S3 {
  std::array<std::uint8_t, 3> img{0, 1, 2};

  friend bool operator==(const S3&, const S3&) = default;

  S3 operator*(const S3& h) const {
    S3 r;
    for (int i = 0; i < 3; ++i) r.img[i] = h.img[img[i]];
    return r;
  }

  S3 inverse() const {
    S3 r;
    for (int i = 0; i < 3; ++i) r.img[img[i]] = static_cast<std::uint8_t>(i);
    return r;
  }

  bool is_identity() const { return img == std::array<std::uint8_t, 3>{0, 1, 2}; }

  static S3 identity() { return {}; }
  static S3 sigma() { return {{1, 0, 2}}; }  // (1 2)
  static S3 tau() { return {{0, 2, 1}}; }    // (2 3)

  // The six elements in the order 1, t, ts, s, st, sts of the Cayley diagram.
  static const std::array<S3, 6>& all() {
    static const std::array<S3, 6> a = {
        identity(),        tau(),           tau() * sigma(),
        sigma(),           sigma() * tau(), sigma() * tau() * sigma()};
    return a;
  }

  // Canonical word in the generators s = (1 2), t = (2 3); "1" if trivial.
  std::string word() const {
    static const char* names[6] = {"1", "t", "ts", "s", "st", "sts"};
    for (int i = 0; i < 6; ++i)
      if (all()[i] == *this) return names[i];
    throw std::logic_error("corrupt S3 element");
  }

  // Accepts any word over {s,t} ("tst" is fine), or "1"/"" for the identity.
  static S3 parse(const std::string& w) {
    if (w == "1" || w.empty()) return identity();
    S3 g = identity();
    for (char c : w) {
      if (c == 's')
        g = g * sigma();
      else if (c == 't')
        g = g * tau();
      else
        throw std::invalid_argument("bad S3 word (use letters s, t): " + w);
    }
    return g;
  }
};

}  // namespace qgw
