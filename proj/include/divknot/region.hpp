#pragma once

#include "divknot/core.hpp"

#include <ostream>
#include <stdexcept>
#include <string>

namespace divknot {

/// L-shaped region [a1, a2; b1, b2]: the union of the a1 x b2 and a2 x b1
/// rectangles anchored at the origin. The concave corner sits at (a1, b1).
struct LRegion {
  Int a1, a2, b1, b2;

  LRegion(Int a1_, Int a2_, Int b1_, Int b2_)
      : a1(std::move(a1_)), a2(std::move(a2_)), b1(std::move(b1_)), b2(std::move(b2_)) {
    if (a1 < 1 || b1 < 1)
      throw std::invalid_argument("L-region sides must be positive: " + to_string());
    if (!(a1 < a2) || !(b1 < b2))
      throw std::invalid_argument("L-region needs a1 < a2 and b1 < b2: " + to_string());
  }

  bool operator==(const LRegion&) const = default;

  std::string to_string() const {
    return "[" + a1.str() + "," + a2.str() + ";" + b1.str() + "," + b2.str() + "]";
  }
};

inline std::ostream& operator<<(std::ostream& os, const LRegion& r) { return os << r.to_string(); }

/// a x b rectangle (billiard region).
struct Rect {
  Int a, b;

  Rect(Int a_, Int b_) : a(std::move(a_)), b(std::move(b_)) {
    if (a < 1 || b < 1) throw std::invalid_argument("rectangle sides must be positive");
  }

  bool operator==(const Rect&) const = default;

  std::string to_string() const { return "R(" + a.str() + "," + b.str() + ")"; }
};

inline Int area(const LRegion& r) { return r.a2 * r.b1 + r.a1 * r.b2 - r.a1 * r.b1; }

inline Int area(const Rect& r) { return r.a * r.b; }

/// Number of double points of the L-shaped curve, i.e. the interior even
/// lattice points when the concave corner is odd.
inline Int double_points(const LRegion& r) {
  Int num = r.a2 * (r.b1 - 1) + r.b2 * (r.a1 - 1) - r.a1 * r.b1 + 1;
  if (num % 2 != 0)
    throw std::domain_error("odd double-point numerator for " + r.to_string() +
                            "; region cannot be an immersed arc");
  return num / 2;
}

/// Reflection across the diagonal: [a1,a2;b1,b2] -> [b1,b2;a1,a2].
inline LRegion swap(const LRegion& r) { return LRegion(r.b1, r.b2, r.a1, r.a2); }

}  // namespace divknot
