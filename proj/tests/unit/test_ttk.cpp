#include "helpers.hpp"

#include <gtest/gtest.h>

using namespace divknot;

TEST(Ttk, Validation) {
  EXPECT_THROW(TwistedTorus(4, 2, 3, 1), std::invalid_argument);
  EXPECT_THROW(TwistedTorus(4, 3, 4, 1), std::invalid_argument);
  EXPECT_THROW(TwistedTorus(4, 3, 3, 0), std::invalid_argument);
  EXPECT_EQ(TwistedTorus(4, 3, 5, 1).to_string(), "T(4,3;5,1)");
}

TEST(Ttk, RegionExamples) {
  EXPECT_EQ(ttk_region({4, 3, 3, 3}), LRegion(3, 12, 3, 4));
  EXPECT_EQ(ttk_region({4, 3, 5, 1}), LRegion(6, 8, 4, 5));
  EXPECT_EQ(ttk_region({3, 5, 4, 1}), LRegion(5, 9, 3, 4));
  EXPECT_EQ(ttk_region({3, 5, 4, 1}), region_for(KnotType::VI, -1, 4, 0, 0));
}

TEST(Ttk, BraidPresentsRegion) {
  for (const TwistedTorus k : {TwistedTorus(4, 3, 5, 1), TwistedTorus(4, 3, 3, 3), TwistedTorus(3, 5, 4, 1),
                               TwistedTorus(5, 7, 3, 2), TwistedTorus(3, 4, 7, 1)})
    EXPECT_TRUE(same_profile(ttk_braid(k), cp_braid(ttk_region(k)))) << k.to_string();
}

TEST(Ttk, OneStrandTwistIsTrivial) {
  for (long s = 1; s <= 4; ++s) {
    const TwistedTorus k(2, 3, 1, s);
    EXPECT_EQ(ttk_braid(k), parse_braid("W(2)^3"));
    EXPECT_TRUE(same_profile(ttk_braid(k), parse_braid("W(3)^2")));
  }
}

TEST(Ttk, AuditExamples) {
  const auto rows = audit_lemma62({4, 1, {}});
  auto find = [&](const std::string& params) -> const AuditRow* {
    for (const auto& r : rows)
      if (r.params.to_string() == params) return &r;
    return nullptr;
  };
  const AuditRow* vi = find("K_VI(1,-1,4,0,0)");
  ASSERT_TRUE(vi);
  EXPECT_EQ(vi->target, "T(3,5;4,1)");
  EXPECT_EQ(vi->verdict, Verdict::region_match);
  EXPECT_EQ(vi->berge_region, LRegion(5, 9, 3, 4));

  const AuditRow* v = find("K_V(-1,-1,3,0,-1)");
  ASSERT_TRUE(v);
  EXPECT_EQ(v->target, "T(4,3;5,1)");
  EXPECT_EQ(v->verdict, Verdict::region_match);
  EXPECT_EQ(v->berge_region, LRegion(6, 8, 4, 5));

  const AuditRow* bad = find("K_III(1,1,2,1,-1)");
  ASSERT_TRUE(bad);
  EXPECT_EQ(bad->verdict, Verdict::mismatch);
  EXPECT_FALSE(bad->expected);
  EXPECT_EQ(bad->berge_genus, 17);
  EXPECT_EQ(bad->ttk_genus, 1);
}

TEST(Ttk, AuditFullGrid) {
  const auto rows = audit_lemma62();
  long expected = 0, mismatched = 0;
  for (const auto& r : rows) {
    EXPECT_TRUE(r.region_presents_ttk) << r.target;
    if (r.expected) {
      ++expected;
      EXPECT_EQ(r.verdict, Verdict::region_match) << r.label << " " << r.params.to_string();
    } else if (r.verdict == Verdict::mismatch) {
      ++mismatched;
      EXPECT_EQ(r.params.t, -1);
      EXPECT_GE(r.params.k, 1);
    }
  }
  EXPECT_EQ(expected, 99);
  EXPECT_EQ(mismatched, 57);
}

TEST(Ttk, TwoTwistChainExample) {
  const BergeRecord rec = derive(KnotType::III, delta_choice(-1, 0), -1, 2, 2, 0);
  const auto chain = two_twist_chain(rec);
  ASSERT_EQ(chain.size(), 3u);
  for (const auto& s : chain) EXPECT_TRUE(s.braid.is_positive());
  EXPECT_EQ(chain.back().region, region_for(rec));
  EXPECT_TRUE(same_profile(chain.back().braid, cp_braid(region_for(rec))));
  EXPECT_THROW(two_twist_chain(derive(KnotType::III, 1, 1, 2, 0, -1)), std::invalid_argument);
}

TEST(TtkProperty, ChainStepsPresentTheirRegions) {
  for (auto ty : {KnotType::III, KnotType::IV, KnotType::V, KnotType::VI})
    for (int e : {1, -1})
      for (long A = 2; A <= 7; ++A)
        for (long k = 0; k <= 2; ++k)
          for (long t = 0; t <= 2; ++t) {
            BergeParams p;
            try {
              p = validate(ty, delta_choice(e, t), e, A, k, t);
            } catch (const InvalidParams&) {
              continue;
            }
            if (p.normalized) continue;
            const auto chain = two_twist_chain(derive(p));
            EXPECT_EQ(chain.size(), static_cast<std::size_t>(narrow(p.k, "k") + t + 1));
            EXPECT_EQ(chain.back().region, region_for(derive(p))) << p.to_string();
            for (const auto& s : chain) {
              const LRegion shown = s.swapped ? swap(s.region) : s.region;
              EXPECT_TRUE(equal(s.braid, cp_braid(shown))) << p.to_string() << " " << s.region;
            }
          }
}
