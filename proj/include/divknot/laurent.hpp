#pragma once

#include "divknot/core.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>
#include <vector>

namespace divknot {

/// Integer Laurent polynomial sum_i coef[i] t^(lo+i), kept trimmed: no zero
/// coefficient at either end; the zero polynomial has no coefficients and lo 0.
class LaurentPoly {
 public:
  LaurentPoly() = default;
  LaurentPoly(long lo, std::vector<Int> coef) : lo_(lo), c_(std::move(coef)) { trim(); }

  static LaurentPoly constant(const Int& v) { return LaurentPoly(0, {v}); }
  static LaurentPoly monomial(const Int& v, long exp) { return LaurentPoly(exp, {v}); }

  bool is_zero() const noexcept { return c_.empty(); }
  long lo() const noexcept { return lo_; }
  long hi() const noexcept { return lo_ + static_cast<long>(c_.size()) - 1; }
  long span() const noexcept { return is_zero() ? 0 : hi() - lo_; }
  const std::vector<Int>& coefficients() const noexcept { return c_; }

  Int operator[](long exp) const {
    if (is_zero() || exp < lo_ || exp > hi()) return 0;
    return c_[static_cast<std::size_t>(exp - lo_)];
  }
  const Int& leading() const { return c_.back(); }
  const Int& trailing() const { return c_.front(); }

  LaurentPoly operator-() const {
    LaurentPoly r = *this;
    for (auto& v : r.c_) v = -v;
    return r;
  }

  LaurentPoly& operator+=(const LaurentPoly& o) {
    if (o.is_zero()) return *this;
    if (is_zero()) return *this = o;
    const long nlo = std::min(lo_, o.lo_), nhi = std::max(hi(), o.hi());
    std::vector<Int> out(static_cast<std::size_t>(nhi - nlo + 1));
    for (std::size_t i = 0; i < c_.size(); ++i) out[static_cast<std::size_t>(lo_ - nlo) + i] += c_[i];
    for (std::size_t i = 0; i < o.c_.size(); ++i) out[static_cast<std::size_t>(o.lo_ - nlo) + i] += o.c_[i];
    lo_ = nlo;
    c_ = std::move(out);
    trim();
    return *this;
  }
  LaurentPoly& operator-=(const LaurentPoly& o) { return *this += -o; }

  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }

  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<Int> out(a.c_.size() + b.c_.size() - 1);
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
      if (a.c_[i] == 0) continue;
      for (std::size_t j = 0; j < b.c_.size(); ++j) out[i + j] += a.c_[i] * b.c_[j];
    }
    return LaurentPoly(a.lo_ + b.lo_, std::move(out));
  }

  friend LaurentPoly operator*(const Int& s, const LaurentPoly& a) {
    if (s == 0) return {};
    LaurentPoly r = a;
    for (auto& v : r.c_) v *= s;
    return r;
  }

  /// Multiplication by t^k.
  LaurentPoly shifted(long k) const {
    LaurentPoly r = *this;
    if (!r.is_zero()) r.lo_ += k;
    return r;
  }

  /// Exact quotient; throws std::domain_error when d does not divide *this.
  LaurentPoly exact_div(const LaurentPoly& d) const {
    if (d.is_zero()) throw std::domain_error("division by zero polynomial");
    if (is_zero()) return {};
    std::vector<Int> rem = c_;
    const std::size_t dn = d.c_.size();
    if (rem.size() < dn) throw std::domain_error("inexact polynomial division");
    std::vector<Int> q(rem.size() - dn + 1);
    const Int& lead = d.c_.back();
    for (std::size_t k = q.size(); k-- > 0;) {
      const Int& top = rem[k + dn - 1];
      if (top == 0) continue;
      if (top % lead != 0) throw std::domain_error("inexact polynomial division");
      q[k] = top / lead;
      for (std::size_t j = 0; j < dn; ++j) rem[k + j] -= q[k] * d.c_[j];
    }
    for (const auto& v : rem)
      if (v != 0) throw std::domain_error("inexact polynomial division");
    return LaurentPoly(lo_ - d.lo_, std::move(q));
  }

  /// Representative with lowest degree 0 and positive constant term.
  LaurentPoly normalized() const {
    if (is_zero()) return {};
    LaurentPoly r = shifted(-lo_);
    return r.trailing() < 0 ? -r : r;
  }

  bool is_palindromic() const {
    for (std::size_t i = 0, j = c_.size(); i < j--; ++i)
      if (c_[i] != c_[j]) return false;
    return true;
  }

  /// Value at x; x must be +-1 when negative powers are present.
  Int evaluate(const Int& x) const {
    if (lo_ < 0 && x != 1 && x != -1) throw std::domain_error("evaluating negative powers at non-unit");
    Int acc = 0;
    for (std::size_t i = c_.size(); i-- > 0;) acc = acc * x + c_[i];
    if (lo_ > 0) {
      Int p = 1;
      for (long i = 0; i < lo_; ++i) p *= x;
      acc *= p;
    } else if (lo_ < 0 && (-lo_) % 2 == 1 && x == -1) {
      acc = -acc;
    }
    return acc;
  }

  bool operator==(const LaurentPoly&) const = default;

  /// Human-readable form, highest degree first: "t^2 - t + 1".
  std::string to_string(const char* var = "t") const {
    if (is_zero()) return "0";
    std::string out;
    for (long e = hi(); e >= lo_; --e) {
      const Int v = (*this)[e];
      if (v == 0) continue;
      const bool neg = v < 0;
      const Int mag = neg ? Int(-v) : v;
      if (out.empty())
        out += neg ? "-" : "";
      else
        out += neg ? " - " : " + ";
      if (e == 0) {
        out += mag.str();
        continue;
      }
      if (mag != 1) out += mag.str();
      out += var;
      if (e != 1) out += "^" + std::to_string(e);
    }
    return out;
  }

 private:
  void trim() {
    std::size_t b = 0;
    while (b < c_.size() && c_[b] == 0) ++b;
    if (b == c_.size()) {
      c_.clear();
      lo_ = 0;
      return;
    }
    std::size_t e = c_.size();
    while (c_[e - 1] == 0) --e;
    c_ = std::vector<Int>(c_.begin() + static_cast<long>(b), c_.begin() + static_cast<long>(e));
    lo_ += static_cast<long>(b);
  }

  long lo_ = 0;
  std::vector<Int> c_;
};

/// t^n - 1.
inline LaurentPoly t_power_minus_one(long n) {
  return LaurentPoly::monomial(1, n) - LaurentPoly::constant(1);
}

}  // namespace divknot
