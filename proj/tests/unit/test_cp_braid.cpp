#include "helpers.hpp"

#include <gtest/gtest.h>

using namespace divknot;

TEST(CpBraid, MacroExamples) {
  EXPECT_EQ(cp_macro(LRegion(3, 5, 3, 4)).to_string(), "W(5)^3 W(3)");
  EXPECT_EQ(cp_macro(LRegion(11, 13, 16, 17)).to_string(), "W(13)^16 W(11)");
  EXPECT_EQ(cp_macro(LRegion(3, 5, 1, 2)).to_string(), "W(5) W(3)");
}

TEST(CpBraid, AlternatingForms) {
  EXPECT_EQ(claim1_braid(LRegion(3, 5, 3, 4)), BraidWord(5, {2, 4, 1, 3}).power(3) * BraidWord(5, {2, 1}));
  EXPECT_EQ(claim1_braid(LRegion(2, 3, 1, 2)), BraidWord(3, {1, 2, 1}));
  EXPECT_EQ(claim1_braid(LRegion(3, 5, 1, 2)), BraidWord(5, {2, 4, 1, 3, 2, 1}));
}

TEST(CpBraid, Conjugators) {
  EXPECT_TRUE(conjugators(3, 5).omega.empty());
  EXPECT_EQ(conjugator_g(3, 4), BraidWord(4, {2, 1}));
  EXPECT_EQ(conjugator_g(2, 4), BraidWord(4, {1}));
  EXPECT_TRUE(conjugator_g(1, 4).empty());
  EXPECT_TRUE(conjugator_g(0, 4).empty());
  EXPECT_THROW(conjugators(5, 5), std::invalid_argument);
}

TEST(CpBraid, ConjugationIdentitiesOnSmallGrid) {
  for (int n = 3; n <= 7; ++n) EXPECT_TRUE(check_w_conjugation(n)) << n;
  for (int a2 = 3; a2 <= 7; ++a2)
    for (int a1 = 2; a1 < a2; ++a1) {
      EXPECT_TRUE(check_h_commutes(a1, a2)) << a1 << "," << a2;
      EXPECT_TRUE(check_omega_short(a1, a2)) << a1 << "," << a2;
      EXPECT_TRUE(check_omega_long(a1, a2)) << a1 << "," << a2;
    }
}

TEST(CpBraid, ConjugatedAlternatingFormExample) {
  const LRegion r(3, 5, 3, 4);
  EXPECT_TRUE(check_conjugated_alternating(r));
  // W(a1) W(a2)^b1 W(a1)^(b2-b1-1) is conjugate to the region braid W(a2)^b1 W(a1)^(b2-b1).
  const BraidWord rhs = W(3, 5) * W(5, 5).power(3);
  const BraidWord x = W(3, 5);
  EXPECT_TRUE(equal(x.inverse() * rhs * x, cp_braid(r)));
}

TEST(CpBraid, ConjugationCheckRejectsWrongExponent) {
  // Sanity: the checker distinguishes different exponents.
  const auto c = conjugators(3, 5);
  const BraidWord wrong = W(3, 5) * W(5, 5).power(2);
  EXPECT_FALSE(equal(conj(claim1_braid(LRegion(3, 5, 3, 4)), c.omega), wrong));
}

TEST(CpBraid, MirrorCases) {
  const MirrorCase pp = mirror_case(1, 1, 11, 13, 16);
  EXPECT_EQ(pp.region, LRegion(11, 13, 16, 17));
  EXPECT_FALSE(pp.mirror);
  const MirrorCase pm = mirror_case(1, -1, 3, 7, 4);
  EXPECT_EQ(pm.region, LRegion(5, 7, 3, 4));
  EXPECT_FALSE(pm.mirror);
  const MirrorCase mp = mirror_case(-1, 1, 3, 7, 4);
  EXPECT_EQ(mp.region, pm.region);
  EXPECT_TRUE(mp.mirror);
  EXPECT_TRUE(mirror_case(-1, -1, 11, 13, 16).mirror);
  EXPECT_THROW(mirror_case(1, -1, 3, 7, 1), std::invalid_argument);
}

TEST(CpBraidProperty, MirrorCaseRegionSharesProfile) {
  for (int a2 = 3; a2 <= 7; ++a2)
    for (int a1 = 2; a1 < a2; ++a1)
      for (int c = 2; c <= 4; ++c)
        for (int d : {1, -1}) {
          const BraidWord w = W(a2, a2).power(c) * W(a1, a2).power(d);
          const MirrorCase mc = mirror_case(1, d, a1, a2, c);
          EXPECT_TRUE(same_profile(w, cp_braid(mc.region))) << a1 << "," << a2 << "," << c << "," << d;
        }
}
