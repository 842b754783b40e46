#include <gtest/gtest.h>

#include "postlie/planar.hpp"
#include "postlie/syntax.hpp"

using namespace postlie;

namespace {

constexpr std::size_t kD = 2;
PlanarTree P(std::string_view s) { return parse_planar(s, kD); }
TreeComb C(std::string_view s) { return parse_tree_comb(s, kD); }

}  // namespace

TEST(Planar, LeftGraftOntoXVanishes) {
  EXPECT_TRUE(left_graft(parse_planar_v("I[(0,0)](Xi)", kD), parse_planar_v("X_0", kD)).is_zero());
}

TEST(Planar, NormalizeXEdgeIntoRoot) {
  EXPECT_EQ(planar_normalize(P("X_0 I[(1,0)](Xi)"), kD), C("X^(1,0) I[(1,0)](Xi)"));
  EXPECT_EQ(planar_normalize(P("I[(1,0)](Xi) X_0"), kD), C("X^(1,0) I[(1,0)](Xi) + I[(0,0)](Xi)"));
}

TEST(Planar, NormalFormIsItsImage) {
  DecoratedTree t = parse_tree("X^(1,0) Xi I[(0,1)](X^(0,1))", kD);
  EXPECT_EQ(planar_normalize(to_planar(t), kD), TreeComb(t));
}

TEST(Planar, SwappedSiblings) {
  EXPECT_EQ(planar_normalize(P("I[(1,0)](Xi) I[(0,0)](1)"), kD), planar_normalize(P("I[(0,0)](1) I[(1,0)](Xi)"), kD));
}

TEST(Planar, AllOrdersAgree) {
  auto results = planar_normalize_all_orders(P("X_0 X_1 I[(1,1)](X_0 I[(1,0)](Xi))"), kD);
  ASSERT_FALSE(results.empty());
  for (const auto& r : results) EXPECT_EQ(r, results.front());
}

TEST(Planar, LeftRouteMatchesDirect) {
  auto sigma = parse_planar_v("X_1", kD), tau = parse_planar_v("I[(0,0)](X_0 Xi)", kD);
  EXPECT_TRUE(check_left_equiv(sigma, tau, kD).ok());
  EXPECT_TRUE(check_left_equiv(parse_planar_v("I[(1,0)](Xi)", kD), tau, kD).ok());
}
