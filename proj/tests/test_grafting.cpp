#include <gtest/gtest.h>

#include "postlie/grafting.hpp"
#include "postlie/syntax.hpp"

using namespace postlie;

namespace {

DecoratedTree T(std::string_view s, std::size_t d = 2) { return parse_tree(s, d); }
TreeComb C(std::string_view s, std::size_t d = 2) { return parse_tree_comb(s, d); }

}  // namespace

TEST(Grafting, OntoCherry) {
  DecoratedTree cherry = T("I[(0)](1) I[(0)](1)", 1);
  EXPECT_EQ(graft(T("1", 1), DecVec(1), cherry),
            C("I[(0)](1) I[(0)](1) I[(0)](1) + 2 * I[(0)](I[(0)](1)) I[(0)](1)", 1));
}

TEST(Grafting, NeverOnNoise) {
  EXPECT_EQ(graft(T("X^(1,0)"), {0, 1}, T("Xi")), C("Xi I[(0,1)](X^(1,0))"));
  EXPECT_EQ(graft(T("1"), {0, 0}, T("X^(0,1) Xi I[(1,0)](X^(1,1))")),
            C("X^(0,1) Xi I[(0,0)](1) I[(1,0)](X^(1,1)) + X^(0,1) Xi I[(1,0)](X^(1,1) I[(0,0)](1))"));
}

TEST(Grafting, DeformedExpandsDecrements) {
  EXPECT_EQ(deformed_graft(T("1", 1), DecVec{2}, T("X^(1)", 1)), C("X^(1) I[(2)](1) + I[(1)](1)", 1));
  EXPECT_EQ(deformed_graft(T("Xi"), {0, 0}, T("X^(1,1)")), graft(T("Xi"), {0, 0}, T("X^(1,1)")));
}

TEST(Grafting, Up) {
  EXPECT_EQ(up(0, C("X^(1,1)")), C("X^(2,1)"));
  EXPECT_EQ(up(1, C("X^(1,0) Xi I[(0,1)](X^(0,1))")),
            C("X^(1,1) Xi I[(0,1)](X^(0,1)) + X^(1,0) Xi I[(0,1)](X^(0,2))"));
  EXPECT_TRUE(up(0, T("I[(0,0)](1)"), std::vector<std::size_t>{}).is_zero());
}

TEST(Grafting, UpMulti) {
  DecoratedTree t = mark_all(T("I[(0,0)](Xi)"));
  EXPECT_EQ(strip_marks(up_multi(DecVec(2), t)), C("I[(0,0)](Xi)"));
  EXPECT_EQ(strip_marks(up_multi({1, 0}, t)), strip_marks(up_marked(0, t)));
  DecoratedTree s = mark_all(T("I[(0)](1)", 1));
  EXPECT_EQ(strip_marks(up_multi(DecVec{2}, s)), C("X^(2) I[(0)](1) + X^(1) I[(0)](X^(1)) + I[(0)](X^(2))", 1));
}

TEST(Grafting, PlantedPreLie) {
  DecoratedTree p = T("I[(1,0)](X^(1,0))"), q = T("I[(0,1)](Xi I[(0,0)](X^(0,1)))");
  TreeComb expect;
  for (const auto& [t, c] : graft(T("X^(1,0)"), {1, 0}, T("Xi I[(0,0)](X^(0,1))"))) expect.add(planted({0, 1}, t), c);
  EXPECT_EQ(planted_pre_lie(p, q, false), expect);
}

TEST(Grafting, T0Deformed) {
  T0Tree sigma = parse_t0_tree("Xi", 2), tau = parse_t0_tree("X^(1,0) I(Xi)", 2);
  EXPECT_EQ(deformed_graft_T0(sigma, DecVec(2), tau), graft_T0(sigma, tau));
  EXPECT_TRUE(deformed_graft_T0(sigma, {0, 1}, tau).is_zero());
  EXPECT_FALSE(deformed_graft_T0(sigma, {1, 0}, tau).is_zero());
}
