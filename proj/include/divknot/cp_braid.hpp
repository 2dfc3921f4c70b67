#pragma once

#include "divknot/braid.hpp"
#include "divknot/handle_reduction.hpp"
#include "divknot/region.hpp"

#include <stdexcept>

namespace divknot {

/// Ascending product of the even generators s_i with i < n.
inline BraidWord e_word(int n, int index) {
  BraidWord w(index);
  for (int i = 2; i < n; i += 2) w.push(i);
  return w;
}

/// Ascending product of the odd generators s_i with i < n.
inline BraidWord o_word(int n, int index) {
  BraidWord w(index);
  for (int i = 1; i < n; i += 2) w.push(i);
  return w;
}

/// e(n)o(n), or o(n)e(n) when `odd_first`.
inline BraidWord eo_word(int n, int index, bool odd_first) {
  return odd_first ? o_word(n, index) * e_word(n, index) : e_word(n, index) * o_word(n, index);
}

/// W(a2)^b1 W(a1)^(b2-b1) at index a2.
inline MacroBraid cp_macro(const LRegion& r) {
  const int a2 = narrow<int>(r.a2, "a2");
  const int a1 = narrow<int>(r.a1, "a1");
  return MacroBraid{a2, {{a2, r.b1}, {a1, r.b2 - r.b1}}};
}

inline BraidWord cp_braid(const LRegion& r) { return cp_macro(r).expand(); }

/// The alternating form before conjugation: (e(a2)o(a2))^b1 (e(a1)o(a1))^(b2-b1),
/// with o before e when a1 is even.
inline BraidWord claim1_braid(const LRegion& r) {
  const int a2 = narrow<int>(r.a2, "a2");
  const int a1 = narrow<int>(r.a1, "a1");
  const bool odd_first = a1 % 2 == 0;
  return eo_word(a2, a2, odd_first).power(narrow<long>(r.b1, "b1")) *
         eo_word(a1, a2, odd_first).power(narrow<long>(r.b2 - r.b1, "b2-b1"));
}

/// G(n) = head(n) G(n-2); empty for n <= 1.
inline BraidWord conjugator_g(int n, int index) {
  BraidWord w(index);
  for (int m = n; m >= 2; m -= 2) {
    if (m % 2 == 1)
      w *= e_word(m + 1, index) * o_word(m, index);
    else
      w *= o_word(m + 1, index) * e_word(m, index);
  }
  return w;
}

struct Conjugators {
  BraidWord g;      // G(a1-2)
  BraidWord h;      // rho(G(a2-a1-1)) at index a2
  BraidWord omega;  // H^-1 G(a1-2)
};

inline Conjugators conjugators(int a1, int a2) {
  if (a1 < 1 || a1 >= a2) throw std::invalid_argument("conjugators need 1 <= a1 < a2");
  Conjugators c{conjugator_g(a1 - 2, a2), rho(conjugator_g(a2 - a1 - 1, a2)), BraidWord(a2)};
  c.omega = c.h.inverse() * c.g;
  return c;
}

inline BraidWord conj(const BraidWord& x, const BraidWord& by) { return by.inverse() * x * by; }

/// G(n-2)^-1 e(n)o(n) G(n-2) == W(n); o(n)e(n) for even n.
inline bool check_w_conjugation(int n, long budget = budget_from_env()) {
  return equal(conj(eo_word(n, n, n % 2 == 0), conjugator_g(n - 2, n)), W(n, n), budget);
}

/// H commutes with e(a1), o(a1) and G(a1-2).
inline bool check_h_commutes(int a1, int a2, long budget = budget_from_env()) {
  const auto c = conjugators(a1, a2);
  auto commutes = [&](const BraidWord& x) { return equal(c.h * x, x * c.h, budget); };
  return commutes(e_word(a1, a2)) && commutes(o_word(a1, a2)) && commutes(c.g);
}

/// Omega^-1 (e(a1)o(a1)) Omega == W(a1).
inline bool check_omega_short(int a1, int a2, long budget = budget_from_env()) {
  const auto c = conjugators(a1, a2);
  return equal(conj(eo_word(a1, a2, a1 % 2 == 0), c.omega), W(a1, a2), budget);
}

/// Omega^-1 (e(a2)o(a2)) Omega == W(a1) W(a2) W(a1)^-1.
inline bool check_omega_long(int a1, int a2, long budget = budget_from_env()) {
  const auto c = conjugators(a1, a2);
  const BraidWord rhs = W(a1, a2) * W(a2, a2) * W(a1, a2).inverse();
  return equal(conj(eo_word(a2, a2, a1 % 2 == 0), c.omega), rhs, budget);
}

/// Omega^-1 (alternating form) Omega == W(a1) W(a2)^b1 W(a1)^(b2-b1-1).
inline bool check_conjugated_alternating(const LRegion& r, long budget = budget_from_env()) {
  const int a1 = narrow<int>(r.a1, "a1");
  const int a2 = narrow<int>(r.a2, "a2");
  const auto c = conjugators(a1, a2);
  const BraidWord rhs = W(a1, a2) * W(a2, a2).power(narrow<long>(r.b1, "b1")) *
                        W(a1, a2).power(narrow<long>(r.b2 - r.b1 - 1, "b2-b1-1"));
  return equal(conj(claim1_braid(r), c.omega), rhs, budget);
}

/// Region (and mirror flag) presenting W(a2)^(c_sign c) W(a1)^delta.
struct MirrorCase {
  LRegion region;
  bool mirror;
};

inline MirrorCase mirror_case(int c_sign, int delta, const Int& a1, const Int& a2, const Int& c) {
  if (!is_sign(c_sign) || !is_sign(delta)) throw std::invalid_argument("mirror_case signs must be +-1");
  if (a1 < 1 || !(a1 < a2)) throw std::invalid_argument("mirror_case needs 0 < a1 < a2");
  if (c < 1) throw std::invalid_argument("mirror_case needs c > 0");
  // (++) and (--) share a region, as do (+-) and (-+).
  const bool same = c_sign == delta;
  if (same) return {LRegion(a1, a2, c, c + 1), c_sign < 0};
  if (c == 1) throw std::invalid_argument("mirror_case (+-) with c = 1 degenerates");
  return {LRegion(a2 - a1 + 1, a2, c - 1, c), c_sign < 0};
}

}  // namespace divknot
