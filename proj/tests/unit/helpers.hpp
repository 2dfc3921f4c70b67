#pragma once

#include "divknot/divknot.hpp"

#include <random>

namespace testing_helpers {

inline divknot::BraidWord random_word(std::mt19937& rng, int index, int length, bool positive = false) {
  divknot::BraidWord w(index);
  std::uniform_int_distribution<int> gen(1, index - 1);
  for (int i = 0; i < length; ++i) {
    const int g = gen(rng);
    w.push(positive || rng() % 2 ? g : -g);
  }
  return w;
}

/// Interior lattice points of the placed region whose coordinate sum is even.
inline long brute_double_points(const divknot::LRegion& r) {
  const divknot::PlacedRegion p = divknot::place(r);
  const long a1 = divknot::narrow(r.a1, "a1"), a2 = divknot::narrow(r.a2, "a2");
  const long b1 = divknot::narrow(r.b1, "b1"), b2 = divknot::narrow(r.b2, "b2");
  long count = 0;
  for (long x = 1; x < a2; ++x)
    for (long y = 1; y < b2; ++y) {
      const bool inside = (y < b1) || (x < a1);
      if (inside && (x + p.offset.x + y + p.offset.y) % 2 == 0) ++count;
    }
  return count;
}

}  // namespace testing_helpers
