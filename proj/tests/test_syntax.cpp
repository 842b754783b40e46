#include <gtest/gtest.h>

#include "postlie/syntax.hpp"

using namespace postlie;

TEST(Syntax, TreeExample) {
  DecoratedTree t = parse_tree("X^(1,0) Xi I[(0,1)](Xi)", 2);
  DecoratedTree xi = parse_tree("Xi", 2);
  EXPECT_EQ(t, tree_product(DecoratedTree::node({1, 0}), tree_product(xi, planted({0, 1}, xi))));
  EXPECT_EQ(t.dec(), (DecVec{1, 0}));
  EXPECT_EQ(t.noise(), 1u);
  ASSERT_EQ(t.branches().size(), 1u);
  EXPECT_EQ(t.branches()[0].edge, (DecVec{0, 1}));
  EXPECT_EQ(format(t), "X^(1,0) Xi I[(0,1)](Xi)");
}

TEST(Syntax, UnitAndZero) {
  EXPECT_EQ(parse_tree("1", 2), DecoratedTree::unit(2));
  EXPECT_EQ(format(TreeComb()), "0");
  EXPECT_TRUE(parse_tree_comb("0", 2).is_zero());
}

TEST(Syntax, Word) {
  auto w = parse_tree_word("X_0 ; I[(1,0)](Xi)", 2);
  ASSERT_EQ(w.size(), 2u);
  EXPECT_EQ(w[0], VComb(VBasis(XLetter{0})));
}

TEST(Syntax, Coefficients) {
  TreeComb x = parse_tree_comb("2/4 * Xi + -3 * X_1 + Xi", 2);
  EXPECT_EQ(x.coefficient(parse_tree("Xi", 2)), coef(3, 2));
  EXPECT_EQ(parse_tree_comb(format(x), 2), x);
  EXPECT_EQ(format(x), "3/2 * Xi + -3 * X^(0,1)");
}

TEST(Syntax, Errors) {
  try {
    parse_tree("Xi I[(0,1)](Xi", 2);
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.position(), 14u);
  }
  EXPECT_THROW(parse_tree("X^(1,0,0)", 2), DimensionError);
  EXPECT_THROW(parse_tree("X_2", 2), DimensionError);
  EXPECT_THROW(parse_tree("Q", 2), ParseError);
  EXPECT_THROW(parse_decvec("(1,", 2), ParseError);
}

TEST(Syntax, WhitespaceInsensitive) {
  EXPECT_EQ(parse_tree("X^(1,0)Xi I[(0,1)]( Xi )", 2), parse_tree("X^( 1 , 0 ) Xi I[(0,1)](Xi)", 2));
}

TEST(Syntax, MultiIndex) {
  MIComb x = parse_mi_comb("z_1 z(1,0)^2 D(0,1) + -1/3 * d_1", 2);
  EXPECT_EQ(parse_mi_comb(format(x), 2), x);
  MIPolynomial p = parse_mi_poly("z_0 z_2^3 + 1", 2);
  EXPECT_EQ(parse_mi_poly(format(p), 2), p);
}

TEST(Syntax, Planar) {
  PlanarTree t = parse_planar("X_0 Xi I[(1,0)](X_1 Xi)", 2);
  EXPECT_EQ(parse_planar(format(t), 2), t);
}
