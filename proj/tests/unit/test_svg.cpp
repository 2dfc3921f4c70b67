#include "helpers.hpp"

#include <gtest/gtest.h>

using namespace divknot;

namespace {
std::size_t count(const std::string& s, const std::string& needle) {
  std::size_t n = 0;
  for (auto p = s.find(needle); p != std::string::npos; p = s.find(needle, p + 1)) ++n;
  return n;
}
}  // namespace

TEST(Svg, PretzelRegion) {
  const std::string s = render_svg(place(LRegion(3, 5, 3, 4)));
  EXPECT_EQ(count(s, "<polygon"), 1u);
  EXPECT_EQ(count(s, "<path"), 1u);
  EXPECT_EQ(count(s, "<circle"), 5u);
  EXPECT_NE(s.find(" Q"), std::string::npos);
  EXPECT_EQ(s.find(" Z"), std::string::npos);
}

TEST(Svg, TorusBilliard) {
  const std::string s = render_svg(place(Rect(6, 5)));
  EXPECT_EQ(count(s, "<circle"), 10u);
  EXPECT_EQ(count(s, "<path"), 1u);
}

TEST(Svg, ClosedComponentsAndOptions) {
  SvgOptions opt;
  opt.mark_double_points = false;
  const std::string s = render_svg(place(Rect(3, 3)), opt);
  EXPECT_EQ(count(s, "<circle"), 0u);
  EXPECT_EQ(count(s, "<path"), 2u);
  EXPECT_EQ(count(s, " Z\""), 1u);
}

TEST(Svg, Deterministic) {
  const PlacedRegion p = place(LRegion(11, 13, 16, 17));
  EXPECT_EQ(render_svg(p), render_svg(p));
}
