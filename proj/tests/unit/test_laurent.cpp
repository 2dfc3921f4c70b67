#include "helpers.hpp"

#include <gtest/gtest.h>

using namespace divknot;

namespace {
LaurentPoly P(long lo, std::vector<Int> c) { return LaurentPoly(lo, std::move(c)); }
}  // namespace

TEST(Laurent, TrimAndAccessors) {
  const LaurentPoly p = P(-1, {0, 2, 0, -3, 0});
  EXPECT_EQ(p.lo(), 0);
  EXPECT_EQ(p.hi(), 2);
  EXPECT_EQ(p.span(), 2);
  EXPECT_EQ(p[0], 2);
  EXPECT_EQ(p[5], 0);
  EXPECT_TRUE(P(3, {0, 0}).is_zero());
  EXPECT_EQ(P(0, {}), LaurentPoly());
}

TEST(Laurent, Arithmetic) {
  const LaurentPoly a = P(0, {1, 1});   // 1 + t
  const LaurentPoly b = P(0, {-1, 1});  // -1 + t
  EXPECT_EQ(a * b, P(0, {-1, 0, 1}));
  EXPECT_EQ(a + b, P(1, {2}));
  EXPECT_EQ(a - a, LaurentPoly());
  EXPECT_EQ(Int(3) * a, P(0, {3, 3}));
  EXPECT_EQ(a.shifted(-2), P(-2, {1, 1}));
}

TEST(Laurent, ExactDivision) {
  EXPECT_EQ(t_power_minus_one(6).exact_div(t_power_minus_one(2)), P(0, {1, 0, 1, 0, 1}));
  EXPECT_THROW(P(0, {1, 1, 1}).exact_div(P(0, {1, 1})), std::domain_error);
  EXPECT_THROW(P(0, {1}).exact_div(LaurentPoly()), std::domain_error);
}

TEST(Laurent, NormalizeAndEvaluate) {
  const LaurentPoly p = P(-3, {-1, 1, -1});
  const LaurentPoly n = p.normalized();
  EXPECT_EQ(n.lo(), 0);
  EXPECT_GT(n.trailing(), 0);
  EXPECT_TRUE(n.is_palindromic());
  EXPECT_EQ(P(0, {1, -3, 1}).evaluate(-1), 5);
  EXPECT_EQ(P(-1, {1, -1, 1}).evaluate(1), 1);
  EXPECT_THROW(P(-1, {1, 1}).evaluate(2), std::domain_error);
  EXPECT_EQ(P(0, {1, 1}).evaluate(2), 3);
}

TEST(Laurent, ToString) {
  EXPECT_EQ(P(0, {1, -1, 1}).to_string(), "t^2 - t + 1");
  EXPECT_EQ(P(0, {1}).to_string(), "1");
  EXPECT_EQ(LaurentPoly().to_string(), "0");
  EXPECT_EQ(P(-1, {-2, 0, 1}).to_string(), "t - 2t^-1");
}

TEST(LaurentProperty, RingAxiomsOnRandomPolynomials) {
  std::mt19937 rng(2);
  auto rnd = [&] {
    std::vector<Int> c(1 + rng() % 6);
    for (auto& v : c) v = static_cast<int>(rng() % 11) - 5;
    return P(static_cast<long>(rng() % 7) - 3, c);
  };
  for (int i = 0; i < 300; ++i) {
    const LaurentPoly a = rnd(), b = rnd(), c = rnd();
    EXPECT_EQ(a * (b + c), a * b + a * c);
    EXPECT_EQ(a * b, b * a);
    EXPECT_EQ((a + b) - b, a);
    if (!b.is_zero()) EXPECT_EQ((a * b).exact_div(b), a);
  }
}
