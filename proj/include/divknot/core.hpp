#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <limits>
#include <stdexcept>
#include <string>

namespace divknot {

/// Arbitrary-precision integer used for every parameter, region coordinate and
/// polynomial coefficient.
using Int = boost::multiprecision::cpp_int;

/// Sign with the convention sgn(0) = +1.
inline int sign_of(const Int& v) { return v >= 0 ? 1 : -1; }

inline bool is_sign(int s) noexcept { return s == 1 || s == -1; }

inline Int abs_of(const Int& v) { return v < 0 ? Int(-v) : v; }

/// Checked conversion to a machine integer; throws std::overflow_error.
template <class T = long>
T narrow(const Int& v, const char* what) {
  if (v > std::numeric_limits<T>::max() || v < std::numeric_limits<T>::min())
    throw std::overflow_error(std::string(what) + " out of machine range: " + v.str());
  return static_cast<T>(v);
}

inline std::string str(const Int& v) { return v.str(); }

}  // namespace divknot
