#pragma once

#include "divknot/braid.hpp"

#include <cstdlib>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace divknot {

/// Letter-operation budget used when none is given.
inline constexpr long kDefaultBudget = 10'000'000;

/// Budget from the ATLAS_BUDGET environment variable, or the default.
inline long budget_from_env() {
  if (const char* s = std::getenv("ATLAS_BUDGET")) {
    char* end = nullptr;
    const long v = std::strtol(s, &end, 10);
    if (end != s && *end == '\0' && v > 0) return v;
  }
  return kDefaultBudget;
}

struct BudgetExceeded : std::runtime_error {
  explicit BudgetExceeded(long budget)
      : std::runtime_error("handle reduction exceeded budget of " + std::to_string(budget) +
                           " letter operations") {}
};

struct ReducedForm {
  BraidWord word;
  bool trivial = false;
  /// Set when nontrivial: whether the lowest generator occurs only positively.
  std::optional<bool> sigma_positive;
  long steps = 0;  // handle reductions performed
};

/// Dehornoy handle reduction. A sigma_g-handle is s_g^e v s_g^-e where v only
/// contains generators above g. Each pass reduces the leftmost-ending handle,
/// which is automatically permitted (it contains no inner handle).
inline ReducedForm handle_reduce(const BraidWord& w, long budget = budget_from_env()) {
  const int n = w.index();
  const int slots = n + 1;
  // left: processed letters; state: last[] after each prefix of left.
  std::vector<int> left;
  std::vector<int> state(static_cast<std::size_t>(slots), -1);
  // right: unprocessed letters, next letter at the back.
  std::vector<int> right(w.letters().rbegin(), w.letters().rend());
  std::vector<int> last(static_cast<std::size_t>(slots), -1);
  long ops = 0;
  long steps = 0;
  std::vector<int> middle;

  auto charge = [&](long c) {
    ops += c;
    if (ops > budget) throw BudgetExceeded(budget);
  };

  while (!right.empty()) {
    const int x = right.back();
    right.pop_back();
    charge(1);
    const int g = std::abs(x);
    const int q = last[static_cast<std::size_t>(g)];
    if (q >= 0 && left[static_cast<std::size_t>(q)] == -x) {
      // Handle left[q] .. x. Rewrite its interior onto the unprocessed stack.
      const int e = left[static_cast<std::size_t>(q)] > 0 ? 1 : -1;
      middle.assign(left.begin() + q + 1, left.end());
      left.resize(static_cast<std::size_t>(q));
      state.resize(static_cast<std::size_t>(q + 1) * static_cast<std::size_t>(slots));
      std::copy(state.end() - slots, state.end(), last.begin());
      for (auto it = middle.rbegin(); it != middle.rend(); ++it) {
        const int y = *it;
        if (std::abs(y) == g + 1) {
          const int d = y > 0 ? 1 : -1;
          // s_{g+1}^{-e} s_g^d s_{g+1}^e, pushed in reverse.
          right.push_back(e * (g + 1));
          right.push_back(d * g);
          right.push_back(-e * (g + 1));
          charge(3);
        } else {
          right.push_back(y);
          charge(1);
        }
      }
      ++steps;
      continue;
    }
    for (int j = g + 1; j < slots; ++j) last[static_cast<std::size_t>(j)] = -1;
    last[static_cast<std::size_t>(g)] = static_cast<int>(left.size());
    left.push_back(x);
    state.insert(state.end(), last.begin(), last.end());
  }

  ReducedForm out{BraidWord(n, std::move(left)), false, std::nullopt, steps};
  out.trivial = out.word.empty();
  if (!out.trivial) {
    int lo = n;
    bool pos = true;
    for (int y : out.word.letters())
      if (std::abs(y) < lo) {
        lo = std::abs(y);
        pos = y > 0;
      }
    out.sigma_positive = pos;
  }
  return out;
}

inline bool is_trivial(const BraidWord& w, long budget = budget_from_env()) {
  return handle_reduce(w, budget).trivial;
}

/// Word-problem equality: w1 w2^-1 reduces to the empty word.
inline bool equal(const BraidWord& w1, const BraidWord& w2, long budget = budget_from_env()) {
  const int n = std::max(w1.index(), w2.index());
  return is_trivial(w1.with_index(n) * w2.with_index(n).inverse(), budget);
}

}  // namespace divknot
