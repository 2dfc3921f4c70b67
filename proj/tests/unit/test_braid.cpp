#include "helpers.hpp"

#include <gtest/gtest.h>

using namespace divknot;

TEST(Braid, WExamples) {
  EXPECT_EQ(W(5, 5), BraidWord(5, {4, 3, 2, 1}));
  EXPECT_TRUE(W(1, 5).empty());
  EXPECT_EQ(W(3, 7), BraidWord(7, {2, 1}));
  EXPECT_THROW(W(6, 5), std::invalid_argument);
}

TEST(Braid, GeneratorRangeChecked) {
  EXPECT_THROW(BraidWord(3, {3}), std::out_of_range);
  EXPECT_THROW(BraidWord(3, {0}), std::out_of_range);
  EXPECT_THROW(BraidWord(0), std::invalid_argument);
  EXPECT_THROW(BraidWord(3) * BraidWord(4), std::invalid_argument);
}

TEST(Braid, Rotation) {
  EXPECT_EQ(rho(BraidWord(3, {1})), BraidWord(3, {2}));
  for (int n = 2; n <= 9; ++n) EXPECT_EQ(rho(W(n, n)), W(n, n));
  std::mt19937 rng(11);
  for (int i = 0; i < 100; ++i) {
    const BraidWord w = testing_helpers::random_word(rng, 2 + rng() % 8, rng() % 40);
    EXPECT_EQ(rho(rho(w)), w);
  }
}

TEST(Braid, InverseAndPower) {
  const BraidWord w(4, {1, -2, 3});
  EXPECT_EQ(w.inverse(), BraidWord(4, {-3, 2, -1}));
  EXPECT_EQ(w.power(-2), w.inverse() * w.inverse());
  EXPECT_TRUE(w.power(0).empty());
  EXPECT_EQ(w.exponent_sum(), 1);
}

TEST(Braid, ClosureComponents) {
  EXPECT_EQ(closure_components(W(5, 5).power(3) * W(3, 5)), 1);
  EXPECT_EQ(closure_components(BraidWord(2, {1, 1})), 2);
  EXPECT_EQ(closure_components(W(6, 6).power(5)), 1);
  EXPECT_EQ(closure_components(W(6, 6).power(4)), 2);
  EXPECT_EQ(closure_components(BraidWord(4)), 4);
}

TEST(Braid, FullTwist) {
  EXPECT_EQ(full_twist(BraidWord(2), 2, 1), BraidWord(2, {1, 1}));
  const BraidWord w = W(5, 5).power(3) * W(3, 5);
  EXPECT_TRUE(equal(full_twist(w, 5, 1), W(5, 5).power(8) * W(3, 5)));
  EXPECT_THROW(full_twist(w, 6, 1), std::invalid_argument);
}

TEST(Braid, Reductions) {
  EXPECT_EQ(free_reduce(BraidWord(3, {1, 2, -2, -1, 2})), BraidWord(3, {2}));
  EXPECT_EQ(cyclic_reduce(BraidWord(3, {-1, 2, 2, 1})), BraidWord(3, {2, 2}));
  EXPECT_EQ(to_expanded(BraidWord(5, {4, -2})), "s4 S2");
}

TEST(Braid, MacroToString) {
  EXPECT_EQ((MacroBraid{13, {{13, 16}, {11, 1}}}.to_string()), "W(13)^16 W(11)");
  EXPECT_EQ((MacroBraid{13, {{13, -17}, {3, 1}}}.to_string()), "W(13)^-17 W(3)");
  EXPECT_EQ((MacroBraid{5, {{5, 3}, {3, 0}}}.to_string()), "W(5)^3");
  EXPECT_EQ((MacroBraid{5, {}}.to_string()), "1");
}

TEST(Braid, Parse) {
  EXPECT_EQ(parse_braid("W(5)^3 W(3)"), W(5, 5).power(3) * W(3, 5));
  EXPECT_EQ(parse_braid("W(7)^4 W(3)^-1"), W(7, 7).power(4) * W(3, 7).inverse());
  EXPECT_EQ(parse_braid("W(7)^{-1}"), W(7, 7).inverse());
  EXPECT_EQ(parse_braid("s1 S2 s3"), BraidWord(4, {1, -2, 3}));
  EXPECT_EQ(parse_braid("s1", 5).index(), 5);
  EXPECT_TRUE(parse_braid("1", 3).empty());
  EXPECT_THROW(parse_braid("W(5"), std::invalid_argument);
  EXPECT_THROW(parse_braid("x1"), std::invalid_argument);
  EXPECT_THROW(parse_braid("s4", 3), std::invalid_argument);
}

TEST(BraidProperty, MacroExpandRoundTripsThroughParse) {
  std::mt19937 rng(3);
  for (int i = 0; i < 100; ++i) {
    const int idx = 2 + rng() % 10;
    MacroBraid m{idx, {}};
    for (int f = 0; f < 3; ++f) m.factors.push_back({static_cast<int>(1 + rng() % idx), Int(static_cast<int>(rng() % 7) - 3)});
    EXPECT_EQ(parse_braid(m.to_string(), idx), m.expand()) << m.to_string();
  }
}
