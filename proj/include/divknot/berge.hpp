#pragma once

#include "divknot/braid.hpp"
#include "divknot/core.hpp"

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace divknot {

enum class KnotType { III, IV, V, VI };

inline const char* to_string(KnotType t) {
  switch (t) {
    case KnotType::III: return "III";
    case KnotType::IV: return "IV";
    case KnotType::V: return "V";
    case KnotType::VI: return "VI";
  }
  return "?";
}

inline KnotType parse_knot_type(std::string_view s) {
  if (s == "III" || s == "3") return KnotType::III;
  if (s == "IV" || s == "4") return KnotType::IV;
  if (s == "V" || s == "5") return KnotType::V;
  if (s == "VI" || s == "6") return KnotType::VI;
  throw std::invalid_argument("unknown knot type '" + std::string(s) + "' (expected III, IV, V or VI)");
}

struct InvalidParams : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct BergeParams {
  KnotType type = KnotType::III;
  int delta = 1;
  int epsilon = 1;
  Int A, k, t;
  /// Type VI input whose (epsilon, k) was replaced by (-1, 0).
  bool normalized = false;

  bool operator==(const BergeParams&) const = default;

  std::string to_string() const {
    return std::string("K_") + divknot::to_string(type) + "(" + std::to_string(delta) + "," +
           std::to_string(epsilon) + "," + A.str() + "," + k.str() + "," + t.str() + ")";
  }
};

/// Range and parity gate for (type, delta, epsilon, A, k, t).
inline BergeParams validate(KnotType type, int delta, int epsilon, const Int& A, const Int& k, const Int& t) {
  if (!is_sign(delta)) throw InvalidParams("delta must be +1 or -1, got " + std::to_string(delta));
  if (!is_sign(epsilon)) throw InvalidParams("epsilon must be +1 or -1, got " + std::to_string(epsilon));
  if (k < 0) throw InvalidParams("k must be non-negative, got " + k.str());
  BergeParams p{type, delta, epsilon, A, k, t, false};
  switch (type) {
    case KnotType::III:
      if (A < 2) throw InvalidParams("Type III needs A >= 2, got " + A.str());
      break;
    case KnotType::IV:
      if (A < 5 || A % 2 == 0) throw InvalidParams("Type IV needs A odd and >= 5, got " + A.str());
      break;
    case KnotType::V:
      if (A < 3 || A % 2 == 0) throw InvalidParams("Type V needs A odd and >= 3, got " + A.str());
      break;
    case KnotType::VI:
      if (A < 4 || A % 2 != 0) throw InvalidParams("Type VI needs A even and >= 4, got " + A.str());
      if (epsilon != -1 || k != 0) {
        p.epsilon = -1;
        p.k = 0;
        p.normalized = true;
      }
      break;
  }
  return p;
}

struct BergeRecord {
  BergeParams params;
  int a = 0;
  Int l, B, b, coef;

  bool operator==(const BergeRecord&) const = default;
};

inline BergeRecord derive(const BergeParams& p) {
  const Int& A = p.A;
  const Int& k = p.k;
  const Int& t = p.t;
  const int d = p.delta, e = p.epsilon;
  BergeRecord r{p, 0, 0, 0, 0, 0};
  switch (p.type) {
    case KnotType::III:
      r.a = 0;
      r.l = 3 + 2 * k;
      r.B = A * r.l - e;
      r.b = -d * e * (2 * A + t * r.B);
      break;
    case KnotType::IV: {
      r.a = 1;
      r.l = 5 + 2 * k;
      const Int twice = A * r.l - e;
      if (twice % 2 != 0) throw InvalidParams("Type IV: A*l - epsilon is odd for " + p.to_string());
      r.B = twice / 2;
      r.b = -d * e * (A + t * r.B);
      break;
    }
    case KnotType::V:
      r.a = 1;
      r.l = (e == 1 ? 2 : 3) + k;
      r.B = A * r.l + e;
      r.b = -d * e * (A + t * r.B);
      break;
    case KnotType::VI:
      r.a = 0;
      r.l = 0;
      r.B = 2 * A + 1;
      r.b = d * (A - 1 + t * r.B);
      break;
  }
  if (!(2 * A < r.B)) throw InvalidParams("derived B = " + r.B.str() + " violates 2A < B for " + p.to_string());
  r.coef = r.b * r.B + d * A;
  return r;
}

inline BergeRecord derive(KnotType type, int delta, int epsilon, const Int& A, const Int& k, const Int& t) {
  return derive(validate(type, delta, epsilon, A, k, t));
}

/// Closed-form surgery coefficient, independent of b and B.
inline Int coef_closed_form(const BergeRecord& r) {
  const auto& p = r.params;
  const Int& A = p.A;
  const Int& k = p.k;
  const Int tB2 = p.t * r.B * r.B;
  const int d = p.delta, e = p.epsilon;
  switch (p.type) {
    case KnotType::III: return -d * e * (6 * A * A - 3 * e * A + 4 * k * A * A + tB2);
    case KnotType::IV: {
      const Int half = 5 * A * A - 3 * e * A;  // always even for odd A
      return -d * e * (half / 2 + k * A * A + tB2);
    }
    case KnotType::V:
      if (e == 1) return -d * (2 * A * A + k * A * A + tB2);
      return d * (3 * A * A + k * A * A + tB2);
    case KnotType::VI: return d * (2 * A * A - 1 + tB2);
  }
  throw std::logic_error("unreachable");
}

/// The sign delta for which the coefficient is positive: -epsilon sgn(t).
inline int delta_choice(int epsilon, const Int& t) {
  if (!is_sign(epsilon)) throw std::invalid_argument("epsilon must be +-1");
  return -epsilon * sign_of(t);
}

/// The record with delta replaced by delta_choice.
inline BergeRecord positive_record(BergeParams p) {
  p.delta = delta_choice(p.epsilon, p.t);
  return derive(p);
}

struct AK {
  Int A, k;
  bool operator==(const AK&) const = default;
};

struct NP {
  Int n;
  std::optional<Int> p;  // absent for Type VI
  bool operator==(const NP&) const = default;
};

/// (n, p) from the other common parametrization to (A, k).
inline AK translate_np(KnotType type, int epsilon, const Int& n, const std::optional<Int>& p) {
  if (!is_sign(epsilon)) throw InvalidParams("epsilon must be +-1");
  AK out;
  if (type == KnotType::VI) {
    out = {2 * n + 2, 0};
  } else {
    if (!p) throw InvalidParams(std::string("Type ") + to_string(type) + " translation needs p");
    const Int ep = epsilon * *p;
    if (*p < 1) throw InvalidParams("p must be positive, got " + p->str());
    if (type == KnotType::III) {
      if (ep == -1 || ep == 0) throw InvalidParams("Type III forbids epsilon*p in {-1,0}, got " + ep.str());
      out = {n + 1, epsilon == 1 ? *p - 1 : *p - 2};
    } else {
      if (ep >= -2 && ep <= 1)
        throw InvalidParams(std::string("Type ") + to_string(type) + " forbids epsilon*p in {-2,-1,0,1}, got " +
                            ep.str());
      out = {type == KnotType::IV ? 2 * n + 1 : 2 * n + 3, epsilon == 1 ? *p - 2 : *p - 3};
    }
  }
  if (out.A < 1) throw InvalidParams("translation gives non-positive A = " + out.A.str());
  if (out.k < 0) throw InvalidParams("translation gives negative k = " + out.k.str());
  return out;
}

/// Inverse of translate_np.
inline NP translate_ak(KnotType type, int epsilon, const Int& A, const Int& k) {
  if (!is_sign(epsilon)) throw InvalidParams("epsilon must be +-1");
  if (k < 0) throw InvalidParams("k must be non-negative");
  switch (type) {
    case KnotType::III: return {A - 1, epsilon == 1 ? k + 1 : k + 2};
    case KnotType::IV:
      if (A % 2 == 0) throw InvalidParams("Type IV needs odd A");
      return {(A - 1) / 2, epsilon == 1 ? k + 2 : k + 3};
    case KnotType::V:
      if (A % 2 == 0) throw InvalidParams("Type V needs odd A");
      return {(A - 3) / 2, epsilon == 1 ? k + 2 : k + 3};
    case KnotType::VI:
      if (A % 2 != 0) throw InvalidParams("Type VI needs even A");
      return {(A - 2) / 2, std::nullopt};
  }
  throw std::logic_error("unreachable");
}

/// W(B)^b W(A+1-a)^delta at index B.
inline MacroBraid berge_macro(const BergeRecord& r) {
  const int B = narrow<int>(r.B, "B");
  const int m = narrow<int>(r.params.A + 1 - r.a, "A+1-a");
  return MacroBraid{B, {{B, r.b}, {m, r.params.delta}}};
}

inline BraidWord berge_braid(const BergeRecord& r) { return berge_macro(r).expand(); }

}  // namespace divknot
