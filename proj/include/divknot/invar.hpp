#pragma once

#include "divknot/braid.hpp"
#include "divknot/laurent.hpp"

#include <cstdint>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace divknot {

using PolyMatrix = std::vector<std::vector<LaurentPoly>>;

/// (letters - index + 1) / 2 for a positive braid whose closure is a knot.
inline long bennequin_genus(const BraidWord& w) {
  if (!w.is_positive()) throw std::invalid_argument("Bennequin genus needs a positive word");
  if (closure_components(w) != 1) throw std::invalid_argument("Bennequin genus needs a knot closure");
  return (static_cast<long>(w.length()) - w.index() + 1) / 2;
}

/// Reduced Burau image of w, an (index-1) x (index-1) matrix.
inline PolyMatrix burau_matrix(const BraidWord& w) {
  const int n = w.index();
  const std::size_t m = static_cast<std::size_t>(n - 1);
  PolyMatrix M(m, std::vector<LaurentPoly>(m));
  for (std::size_t i = 0; i < m; ++i) M[i][i] = LaurentPoly::constant(1);
  if (m == 0) return M;
  const LaurentPoly t = LaurentPoly::monomial(1, 1);
  const LaurentPoly mt = LaurentPoly::monomial(-1, 1);
  const LaurentPoly ti = LaurentPoly::monomial(1, -1);
  const LaurentPoly mti = LaurentPoly::monomial(-1, -1);

  for (int x : w.letters()) {
    const int g = std::abs(x);
    const bool pos = x > 0;
    for (std::size_t r = 0; r < m; ++r) {
      auto& row = M[r];
      if (n == 2) {
        row[0] = (pos ? mt : mti) * row[0];
      } else if (g == 1) {
        // column 0 <- -t c0 + c1  (inverse: -t^-1 c0 + t^-1 c1)
        row[0] = pos ? mt * row[0] + row[1] : mti * row[0] + ti * row[1];
      } else if (g == n - 1) {
        const std::size_t a = m - 2, b = m - 1;
        row[b] = pos ? t * row[a] + mt * row[b] : row[a] + mti * row[b];
      } else {
        const std::size_t a = static_cast<std::size_t>(g - 2), b = a + 1, c = a + 2;
        row[b] = pos ? t * row[a] + mt * row[b] + row[c] : row[a] + mti * row[b] + ti * row[c];
      }
    }
  }
  return M;
}

namespace detail {

inline std::uint64_t pow_mod(std::uint64_t b, std::uint64_t e, std::uint64_t p) {
  std::uint64_t r = 1;
  b %= p;
  while (e) {
    if (e & 1) r = r * b % p;
    b = b * b % p;
    e >>= 1;
  }
  return r;
}

inline std::uint64_t inv_mod(std::uint64_t a, std::uint64_t p) { return pow_mod(a, p - 2, p); }

inline bool is_prime(std::uint64_t v) {
  if (v < 2) return false;
  for (std::uint64_t d = 2; d * d <= v; ++d)
    if (v % d == 0) return false;
  return true;
}

/// Primes just below 2^31, largest first.
inline std::uint64_t nth_prime_below_2_31(std::size_t k) {
  static std::vector<std::uint64_t> cache;
  std::uint64_t v = cache.empty() ? (1ULL << 31) : cache.back();
  while (cache.size() <= k) {
    do --v;
    while (!is_prime(v));
    cache.push_back(v);
  }
  return cache[k];
}

inline std::uint64_t mod_of(const Int& v, std::uint64_t p) {
  Int r = v % p;
  if (r < 0) r += p;
  return static_cast<std::uint64_t>(r);
}

inline std::uint64_t det_mod(std::vector<std::vector<std::uint64_t>>& a, std::uint64_t p) {
  const std::size_t n = a.size();
  std::uint64_t det = 1;
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t piv = k;
    while (piv < n && a[piv][k] == 0) ++piv;
    if (piv == n) return 0;
    if (piv != k) {
      std::swap(a[piv], a[k]);
      det = (p - det) % p;
    }
    det = det * a[k][k] % p;
    const std::uint64_t inv = inv_mod(a[k][k], p);
    for (std::size_t i = k + 1; i < n; ++i) {
      if (a[i][k] == 0) continue;
      const std::uint64_t f = a[i][k] * inv % p;
      for (std::size_t j = k; j < n; ++j) a[i][j] = (a[i][j] + (p - f) * a[k][j]) % p;
    }
  }
  return det;
}

/// Coefficients of the degree <= D polynomial through (x, values[x]), x = 0..D.
inline std::vector<std::uint64_t> interpolate_mod(const std::vector<std::uint64_t>& values, std::uint64_t p) {
  const std::size_t n = values.size();
  std::vector<std::uint64_t> dd = values;  // Newton divided differences at nodes 0..n-1
  for (std::size_t j = 1; j < n; ++j) {
    const std::uint64_t inv = inv_mod(j, p);
    for (std::size_t i = n - 1; i >= j; --i) {
      dd[i] = (dd[i] + p - dd[i - 1]) % p * inv % p;
      if (i == j) break;
    }
  }
  // Expand the Newton form from the innermost term outwards.
  std::vector<std::uint64_t> c(n, 0);
  for (std::size_t k = n; k-- > 0;) {
    // c <- c * (x - k) + dd[k]
    for (std::size_t i = n - 1; i > 0; --i) c[i] = (c[i - 1] + (p - k % p) * c[i] % p) % p;
    c[0] = ((p - k % p) * c[0] % p + dd[k]) % p;
  }
  return c;
}

inline Int l1_norm(const LaurentPoly& f) {
  Int s = 0;
  for (const auto& v : f.coefficients()) s += abs_of(v);
  return s;
}

}  // namespace detail

/// Determinant over Z[t, t^-1] by evaluation and interpolation modulo primes
/// near 2^31, recombined by CRT under a rigorous coefficient bound.
inline LaurentPoly det_modular(const PolyMatrix& a) {
  const std::size_t n = a.size();
  if (n == 0) return LaurentPoly::constant(1);
  std::vector<long> row_lo(n), row_hi(n);
  Int bound = 1;
  for (std::size_t r = 0; r < n; ++r) {
    bool any = false;
    Int norm = 0;
    for (const auto& e : a[r]) {
      if (e.is_zero()) continue;
      row_lo[r] = any ? std::min(row_lo[r], e.lo()) : e.lo();
      row_hi[r] = any ? std::max(row_hi[r], e.hi()) : e.hi();
      any = true;
      norm += detail::l1_norm(e);
    }
    if (!any) return {};
    bound *= norm;
  }
  long shift = 0, D = 0;
  for (std::size_t r = 0; r < n; ++r) {
    shift += row_lo[r];
    D += row_hi[r] - row_lo[r];
  }
  const Int need = 2 * bound + 1;

  std::vector<Int> result(static_cast<std::size_t>(D + 1), 0);
  Int modulus = 1;
  for (std::size_t k = 0; modulus < need; ++k) {
    const std::uint64_t p = detail::nth_prime_below_2_31(k);
    // Row-shifted entry coefficients mod p.
    std::vector<std::vector<std::vector<std::uint64_t>>> cm(n, std::vector<std::vector<std::uint64_t>>(n));
    for (std::size_t r = 0; r < n; ++r)
      for (std::size_t c = 0; c < n; ++c) {
        const auto& e = a[r][c];
        if (e.is_zero()) continue;
        auto& v = cm[r][c];
        v.assign(static_cast<std::size_t>(e.hi() - row_lo[r] + 1), 0);
        for (long d = e.lo(); d <= e.hi(); ++d) v[static_cast<std::size_t>(d - row_lo[r])] = detail::mod_of(e[d], p);
      }
    std::vector<std::uint64_t> values(static_cast<std::size_t>(D + 1));
    std::vector<std::vector<std::uint64_t>> num(n, std::vector<std::uint64_t>(n));
    for (long x = 0; x <= D; ++x) {
      const auto xp = static_cast<std::uint64_t>(x) % p;
      for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = 0; c < n; ++c) {
          std::uint64_t acc = 0;
          const auto& v = cm[r][c];
          for (std::size_t i = v.size(); i-- > 0;) acc = (acc * xp + v[i]) % p;
          num[r][c] = acc;
        }
      values[static_cast<std::size_t>(x)] = detail::det_mod(num, p);
    }
    const auto coef = detail::interpolate_mod(values, p);
    // Garner step: result += modulus * ((coef - result) / modulus mod p).
    const std::uint64_t minv = detail::inv_mod(detail::mod_of(modulus, p), p);
    for (std::size_t i = 0; i < result.size(); ++i) {
      const std::uint64_t cur = detail::mod_of(result[i], p);
      const std::uint64_t step = (coef[i] + p - cur) % p * minv % p;
      result[i] += modulus * step;
    }
    modulus *= p;
  }
  const Int half = modulus / 2;
  for (auto& v : result)
    if (v > half) v -= modulus;
  return LaurentPoly(shift, std::move(result));
}

/// Fraction-free (Bareiss) determinant over Z[t, t^-1].
inline LaurentPoly det_bareiss(PolyMatrix a) {
  const std::size_t n = a.size();
  if (n == 0) return LaurentPoly::constant(1);
  LaurentPoly prev = LaurentPoly::constant(1);
  int sign = 1;
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t piv = k;
    while (piv < n && a[piv][k].is_zero()) ++piv;
    if (piv == n) return {};
    if (piv != k) {
      std::swap(a[piv], a[k]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j)
        a[i][j] = (a[k][k] * a[i][j] - a[i][k] * a[k][j]).exact_div(prev);
      a[i][k] = {};
    }
    prev = a[k][k];
  }
  return sign < 0 ? -a[n - 1][n - 1] : a[n - 1][n - 1];
}

/// Alexander polynomial of a knot closure from the reduced Burau matrix:
/// det(I - M) (1 - t) / (1 - t^n), normalized.
inline LaurentPoly alexander(const BraidWord& w) {
  if (closure_components(w) != 1) throw std::invalid_argument("Alexander polynomial needs a knot closure");
  const int n = w.index();
  if (n == 1) return LaurentPoly::constant(1);
  PolyMatrix M = burau_matrix(w);
  for (std::size_t i = 0; i < M.size(); ++i) {
    for (auto& e : M[i]) e = -e;
    M[i][i] += LaurentPoly::constant(1);
  }
  const LaurentPoly det = det_modular(M);
  const LaurentPoly one = LaurentPoly::constant(1);
  const LaurentPoly delta = (det * (one - LaurentPoly::monomial(1, 1))).exact_div(one - LaurentPoly::monomial(1, n));
  const LaurentPoly out = delta.normalized();
  if (!out.is_palindromic()) throw std::logic_error("non-palindromic Alexander polynomial");
  return out;
}

/// Seifert matrix of the canonical surface of a braid closure: one generator
/// per pair of consecutive crossings on the same level.
inline std::vector<std::vector<int>> seifert_matrix(const BraidWord& w) {
  const auto& x = w.letters();
  const std::size_t L = x.size();
  std::vector<std::size_t> h(L, 0);  // next crossing on the same level, 0 if none
  for (std::size_t i = 0; i < L; ++i)
    for (std::size_t j = i + 1; j < L; ++j)
      if (std::abs(x[j]) == std::abs(x[i])) {
        h[i] = j;
        break;
      }
  std::vector<std::size_t> idx;
  for (std::size_t i = 0; i < L; ++i)
    if (h[i]) idx.push_back(i);
  std::vector<std::vector<int>> A(L, std::vector<int>(L, 0));
  auto sgn = [](int v) { return v > 0 ? 1 : (v < 0 ? -1 : 0); };
  for (std::size_t i : idx) {
    const std::size_t hi = h[i];
    for (std::size_t j = i; j < L; ++j) {
      if (i == j) {
        A[i][j] = -sgn(x[i] + x[hi]);
      } else if (hi > h[j] || hi < j) {
        // disjoint or nested loops do not link
      } else if (hi == j) {
        if (x[j] > 0)
          A[j][i] = 1;
        else
          A[i][j] = -1;
      } else if (std::abs(x[i]) - std::abs(x[j]) == 1) {
        A[j][i] = -1;
      } else if (std::abs(x[j]) - std::abs(x[i]) == 1) {
        A[i][j] = 1;
      }
    }
  }
  std::vector<std::vector<int>> out(idx.size(), std::vector<int>(idx.size()));
  for (std::size_t r = 0; r < idx.size(); ++r)
    for (std::size_t c = 0; c < idx.size(); ++c) out[r][c] = A[idx[r]][idx[c]];
  return out;
}

/// Alexander polynomial as det(V - t V^T), computed by Bareiss elimination.
inline LaurentPoly alexander_seifert(const BraidWord& w) {
  if (closure_components(w) != 1) throw std::invalid_argument("Alexander polynomial needs a knot closure");
  const auto V = seifert_matrix(w);
  const std::size_t n = V.size();
  PolyMatrix M(n, std::vector<LaurentPoly>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      M[i][j] = LaurentPoly::constant(V[i][j]) - LaurentPoly::monomial(V[j][i], 1);
  return det_bareiss(std::move(M)).normalized();
}

/// (t^pq - 1)(t - 1) / ((t^p - 1)(t^q - 1)).
inline LaurentPoly torus_alexander(long p, long q) {
  if (p < 2 || q < 2) throw std::invalid_argument("torus knot needs p, q >= 2");
  if (std::gcd(p, q) != 1) throw std::invalid_argument("torus knot needs coprime p, q");
  const LaurentPoly num = t_power_minus_one(p * q) * t_power_minus_one(1);
  return num.exact_div(t_power_minus_one(p) * t_power_minus_one(q)).normalized();
}

/// Size limits for the Alexander computation.
struct ProfileCaps {
  int max_index = 20;
  std::size_t max_length = 400;
};

struct KnotProfile {
  int components = 1;
  std::optional<long> genus;          // exact for homogeneous-sign words
  long genus_lower_bound = 0;         // span/2 when only Alexander is known
  std::optional<LaurentPoly> alexander;
  std::optional<Int> determinant;
  bool positive_braid = false;
  bool negative_braid = false;
  bool alexander_capped = false;
};

/// Invariants of the closure of w, computed on its cyclic free reduction.
inline KnotProfile profile(const BraidWord& w, const ProfileCaps& caps = {}) {
  KnotProfile out;
  const BraidWord r = cyclic_reduce(w);
  out.components = closure_components(r);
  if (out.components != 1) return out;
  out.positive_braid = r.is_positive();
  out.negative_braid = r.is_negative();
  if (out.positive_braid || out.negative_braid) {
    out.genus = (static_cast<long>(r.length()) - r.index() + 1) / 2;
    out.genus_lower_bound = *out.genus;
  }
  if (r.index() <= caps.max_index && r.length() <= caps.max_length) {
    out.alexander = alexander(r);
    out.determinant = abs_of(out.alexander->evaluate(-1));
    out.genus_lower_bound = std::max(out.genus_lower_bound, out.alexander->span() / 2);
  } else {
    out.alexander_capped = true;
  }
  return out;
}

struct ProfileComparison {
  bool agree = true;
  bool genus_compared = false;
  bool alexander_compared = false;
};

/// Compares every invariant computed on both sides. Genus and Alexander
/// polynomial do not see mirror images, so this is mirror-insensitive.
inline ProfileComparison compare_profiles(const KnotProfile& a, const KnotProfile& b) {
  ProfileComparison c;
  if (a.components != b.components) {
    c.agree = false;
    return c;
  }
  if (a.genus && b.genus) {
    c.genus_compared = true;
    c.agree = c.agree && *a.genus == *b.genus;
  }
  if (a.alexander && b.alexander) {
    c.alexander_compared = true;
    c.agree = c.agree && *a.alexander == *b.alexander && *a.determinant == *b.determinant;
  }
  return c;
}

inline bool same_profile(const BraidWord& w1, const BraidWord& w2, const ProfileCaps& caps = {}) {
  return compare_profiles(profile(w1, caps), profile(w2, caps)).agree;
}

}  // namespace divknot
