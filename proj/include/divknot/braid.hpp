#pragma once

#include "divknot/core.hpp"

#include <algorithm>
#include <cctype>
#include <cstdlib>
#include <numeric>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace divknot {

/// Hard ceiling on materialized word length.
inline constexpr std::size_t kMaxLetters = 100'000'000;

/// A braid word on `index` strands. Letters are signed generator numbers:
/// +i is sigma_i, -i is sigma_i^{-1}, with 1 <= i < index.
class BraidWord {
 public:
  BraidWord() = default;

  explicit BraidWord(int index) : index_(index) {
    if (index < 1) throw std::invalid_argument("braid index must be >= 1");
  }

  BraidWord(int index, std::vector<int> letters) : BraidWord(index) {
    for (int x : letters) check(x);
    letters_ = std::move(letters);
  }

  int index() const noexcept { return index_; }
  const std::vector<int>& letters() const noexcept { return letters_; }
  std::size_t length() const noexcept { return letters_.size(); }
  bool empty() const noexcept { return letters_.empty(); }

  void push(int letter) {
    check(letter);
    letters_.push_back(letter);
  }

  BraidWord& operator*=(const BraidWord& rhs) {
    if (rhs.index_ != index_)
      throw std::invalid_argument("braid index mismatch: " + std::to_string(index_) + " vs " +
                                  std::to_string(rhs.index_));
    if (letters_.size() + rhs.letters_.size() > kMaxLetters)
      throw std::length_error("braid word too long");
    letters_.insert(letters_.end(), rhs.letters_.begin(), rhs.letters_.end());
    return *this;
  }

  BraidWord inverse() const {
    BraidWord out(index_);
    out.letters_.reserve(letters_.size());
    for (auto it = letters_.rbegin(); it != letters_.rend(); ++it) out.letters_.push_back(-*it);
    return out;
  }

  BraidWord power(long e) const {
    const BraidWord base = e < 0 ? inverse() : *this;
    const unsigned long n = e < 0 ? static_cast<unsigned long>(-e) : static_cast<unsigned long>(e);
    if (n != 0 && base.letters_.size() > kMaxLetters / n) throw std::length_error("braid word too long");
    BraidWord out(index_);
    out.letters_.reserve(base.letters_.size() * n);
    for (unsigned long i = 0; i < n; ++i)
      out.letters_.insert(out.letters_.end(), base.letters_.begin(), base.letters_.end());
    return out;
  }

  /// Same letters viewed on a larger number of strands.
  BraidWord with_index(int n) const {
    BraidWord out(n);
    for (int x : letters_) out.push(x);
    return out;
  }

  bool is_positive() const {
    return std::all_of(letters_.begin(), letters_.end(), [](int x) { return x > 0; });
  }
  bool is_negative() const {
    return std::all_of(letters_.begin(), letters_.end(), [](int x) { return x < 0; });
  }

  long exponent_sum() const {
    long s = 0;
    for (int x : letters_) s += x > 0 ? 1 : -1;
    return s;
  }

  bool operator==(const BraidWord&) const = default;

 private:
  void check(int letter) const {
    if (letter == 0 || std::abs(letter) >= index_)
      throw std::out_of_range("generator " + std::to_string(letter) + " invalid on " +
                              std::to_string(index_) + " strands");
  }

  int index_ = 1;
  std::vector<int> letters_;
};

inline BraidWord operator*(BraidWord a, const BraidWord& b) {
  a *= b;
  return a;
}

/// W(n) = sigma_{n-1} sigma_{n-2} ... sigma_1, embedded on `index` strands.
inline BraidWord W(int n, int index) {
  if (n < 1 || n > index)
    throw std::invalid_argument("W(" + std::to_string(n) + ") needs 1 <= n <= index " +
                                std::to_string(index));
  BraidWord w(index);
  for (int i = n - 1; i >= 1; --i) w.push(i);
  return w;
}

/// pi-rotation: anti-homomorphic involution sigma_i -> sigma_{n-i}.
inline BraidWord rho(const BraidWord& w) {
  const int n = w.index();
  BraidWord out(n);
  const auto& l = w.letters();
  for (auto it = l.rbegin(); it != l.rend(); ++it) {
    const int g = std::abs(*it);
    out.push(*it > 0 ? n - g : -(n - g));
  }
  return out;
}

/// Appends n full twists (W(m)^m)^n on the first m strands.
inline BraidWord full_twist(const BraidWord& w, int m, long n) {
  if (m < 1 || m > w.index()) throw std::invalid_argument("full twist width out of range");
  return w * W(m, w.index()).power(m).power(n);
}

/// Permutation induced on strand positions (0-based), composed left to right.
inline std::vector<int> closure_permutation(const BraidWord& w) {
  std::vector<int> at(w.index());
  std::iota(at.begin(), at.end(), 0);  // at[pos] = strand currently at pos
  for (int x : w.letters()) {
    const int g = std::abs(x);
    std::swap(at[g - 1], at[g]);
  }
  std::vector<int> perm(w.index());
  for (int pos = 0; pos < w.index(); ++pos) perm[at[pos]] = pos;
  return perm;
}

/// Number of components of the closure (cycles of the permutation).
inline int closure_components(const BraidWord& w) {
  const auto perm = closure_permutation(w);
  std::vector<char> seen(perm.size(), 0);
  int cycles = 0;
  for (std::size_t i = 0; i < perm.size(); ++i) {
    if (seen[i]) continue;
    ++cycles;
    for (std::size_t j = i; !seen[j]; j = static_cast<std::size_t>(perm[j])) seen[j] = 1;
  }
  return cycles;
}

/// Cancels adjacent inverse pairs.
inline BraidWord free_reduce(const BraidWord& w) {
  std::vector<int> st;
  st.reserve(w.length());
  for (int x : w.letters()) {
    if (!st.empty() && st.back() == -x)
      st.pop_back();
    else
      st.push_back(x);
  }
  return BraidWord(w.index(), std::move(st));
}

/// Free reduction followed by cancellation across the ends (a conjugation).
inline BraidWord cyclic_reduce(const BraidWord& w) {
  auto l = free_reduce(w).letters();
  std::size_t lo = 0, hi = l.size();
  while (hi - lo >= 2 && l[lo] == -l[hi - 1]) {
    ++lo;
    --hi;
  }
  return BraidWord(w.index(), std::vector<int>(l.begin() + static_cast<long>(lo),
                                               l.begin() + static_cast<long>(hi)));
}

/// Expanded form: "s4 s3 s2 s1", with "S<i>" for inverse letters.
inline std::string to_expanded(const BraidWord& w) {
  std::string out;
  for (int x : w.letters()) {
    if (!out.empty()) out += ' ';
    out += x > 0 ? 's' : 'S';
    out += std::to_string(std::abs(x));
  }
  return out;
}

/// One factor W(n)^exponent of a macro word.
struct WPower {
  int n;
  Int exponent;
  bool operator==(const WPower&) const = default;
};

/// Product of W(n) powers, e.g. "W(13)^16 W(11)".
struct MacroBraid {
  int index = 1;
  std::vector<WPower> factors;

  BraidWord expand() const {
    Int total = 0;
    for (const auto& f : factors) total += abs_of(f.exponent) * (f.n - 1);
    if (total > Int(kMaxLetters)) throw std::length_error("macro braid too long to expand: " + to_string());
    BraidWord w(index);
    for (const auto& f : factors) w *= W(f.n, index).power(narrow<long>(f.exponent, "exponent"));
    return w;
  }

  std::string to_string() const {
    std::string out;
    for (const auto& f : factors) {
      if (f.exponent == 0) continue;
      if (!out.empty()) out += ' ';
      out += "W(" + std::to_string(f.n) + ")";
      if (f.exponent != 1) out += "^" + f.exponent.str();
    }
    return out.empty() ? "1" : out;
  }

  bool operator==(const MacroBraid&) const = default;
};

namespace detail {

inline long parse_long(std::string_view s, std::size_t& pos) {
  std::size_t start = pos;
  if (pos < s.size() && (s[pos] == '-' || s[pos] == '+')) ++pos;
  while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
  if (pos == start || (pos == start + 1 && !std::isdigit(static_cast<unsigned char>(s[start]))))
    throw std::invalid_argument("expected integer in braid text at offset " + std::to_string(start));
  return std::stol(std::string(s.substr(start, pos - start)));
}

inline long parse_exponent(std::string_view s, std::size_t& pos) {
  if (pos >= s.size() || s[pos] != '^') return 1;
  ++pos;
  const bool braced = pos < s.size() && (s[pos] == '{' || s[pos] == '(');
  if (braced) ++pos;
  long e = parse_long(s, pos);
  if (braced) {
    if (pos >= s.size() || (s[pos] != '}' && s[pos] != ')'))
      throw std::invalid_argument("unbalanced exponent brace in braid text");
    ++pos;
  }
  return e;
}

}  // namespace detail

/// Parses macro ("W(5)^3 W(3)^-1") and expanded ("s4 s3 S2") notation, which
/// may be mixed. Without an explicit index, the smallest index that fits all
/// tokens is used.
inline BraidWord parse_braid(std::string_view text, std::optional<int> index = std::nullopt) {
  struct Tok {
    bool macro;
    int n;
    long e;
  };
  std::vector<Tok> toks;
  int need = 1;
  std::size_t pos = 0;
  while (pos < text.size()) {
    const char c = text[pos];
    if (std::isspace(static_cast<unsigned char>(c)) || c == '*' || c == '.') {
      ++pos;
      continue;
    }
    if (c == 'W' || c == 'w') {
      ++pos;
      if (pos >= text.size() || text[pos] != '(') throw std::invalid_argument("expected '(' after W");
      ++pos;
      const long n = detail::parse_long(text, pos);
      if (pos >= text.size() || text[pos] != ')') throw std::invalid_argument("expected ')' in W(n)");
      ++pos;
      if (n < 1) throw std::invalid_argument("W(n) needs n >= 1");
      toks.push_back({true, static_cast<int>(n), detail::parse_exponent(text, pos)});
      need = std::max(need, static_cast<int>(n));
    } else if (c == 's' || c == 'S') {
      ++pos;
      const long g = detail::parse_long(text, pos);
      if (g < 1) throw std::invalid_argument("generator index must be >= 1");
      long e = detail::parse_exponent(text, pos);
      if (c == 'S') e = -e;
      toks.push_back({false, static_cast<int>(g), e});
      need = std::max(need, static_cast<int>(g) + 1);
    } else if (c == '1' && toks.empty()) {
      ++pos;  // identity
    } else {
      throw std::invalid_argument(std::string("unexpected character '") + c + "' in braid text");
    }
  }
  const int n = index.value_or(need);
  if (n < need) throw std::invalid_argument("braid index " + std::to_string(n) + " too small");
  BraidWord w(n);
  for (const auto& t : toks) {
    if (t.macro) {
      w *= W(t.n, n).power(t.e);
    } else {
      BraidWord g(n, {t.n});
      w *= g.power(t.e);
    }
  }
  return w;
}

}  // namespace divknot
