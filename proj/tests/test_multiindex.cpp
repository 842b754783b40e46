#include <gtest/gtest.h>

#include "postlie/multiindex.hpp"
#include "postlie/syntax.hpp"

using namespace postlie;

namespace {

constexpr std::size_t kD = 2;
MIPolynomial P(std::string_view s) { return parse_mi_poly(s, kD); }
MIMonomial M(std::string_view s) { return P(s).begin()->first; }
MIComb C(std::string_view s) { return parse_mi_comb(s, kD); }
MIGenerator G(std::string_view s) { return C(s).begin()->first; }
MIGenerator Dn(std::string_view gamma, DecVec n) { return MIGenerator(Deriv{M(gamma), n}); }

}  // namespace

TEST(MultiIndex, Actions) {
  EXPECT_EQ(derivation_action(G("D(0,0)"), M("z_1"), kD), P("2 * z_2"));
  EXPECT_EQ(derivation_action(G("D(1,1)"), M("z(1,1)"), kD), P("1"));
  EXPECT_EQ(derivation_action(G("d_0"), M("z(1,1)"), kD), P("2 * z(2,1)"));
  EXPECT_EQ(derivation_action(G("d_1"), M("z(1,1)"), kD), P("2 * z(1,2)"));
  EXPECT_TRUE(derivation_action(G("D(0,1)"), M("z_2 z(1,0)"), kD).is_zero());
}

TEST(MultiIndex, MatrixCoefficients) {
  DecVec n{1, 0};
  EXPECT_EQ(matrix_coeff(Dn("1", n), MIMonomial::label(n), MIMonomial(), kD), 1);
  EXPECT_EQ(matrix_coeff(Dn("1", n), M("z_1"), MIMonomial(), kD), 0);
  EXPECT_EQ(matrix_coeff(Dn("1", n), MIMonomial::label(n), M("z_1"), kD), 0);
  EXPECT_EQ(matrix_coeff(G("D(0,0)"), M("z_1"), M("z_2"), kD), 2);
}

TEST(MultiIndex, ArityGrade) {
  EXPECT_EQ(arity_grade(MIMonomial::arity(3)), 3);
  EXPECT_EQ(arity_grade(MIMonomial::label({0, 1})), -1);
  EXPECT_EQ(arity_grade(MIMonomial()), 0);
  EXPECT_EQ(arity_grade(M("z_2^2 z(1,0)")), 3);
}

TEST(MultiIndex, PreLie) {
  DecVec n{1, 0}, m{0, 1};
  EXPECT_EQ(mi_pre_lie(Dn("1", n), MIGenerator(Deriv{MIMonomial::label(n), m}), kD), MIComb(Dn("1", m)));
  EXPECT_TRUE(mi_pre_lie(Dn("1", n), Dn("z_1", m), kD).is_zero());
  auto x = Dn("z_1", {0, 0}), y = Dn("z(1,0)", {1, 0}), z = Dn("z_1 z(1,0)", {0, 1});
  auto assoc = [&](const MIGenerator& a, const MIGenerator& b, const MIGenerator& c) {
    MIComb out;
    for (const auto& [g, k] : mi_pre_lie(b, c, kD)) out.add(mi_pre_lie(a, g, kD), k);
    for (const auto& [g, k] : mi_pre_lie(a, b, kD)) out.add(mi_pre_lie(g, c, kD), -k);
    return out;
  };
  EXPECT_EQ(assoc(x, y, z), assoc(y, x, z));
}

TEST(MultiIndex, Post) {
  DecVec n{1, 0}, m{0, 1};
  MIGenerator d0(XLetter{0}), d1(XLetter{1});
  EXPECT_EQ(mi_post(d0, MIGenerator(Deriv{MIMonomial::label(n), m}), kD),
            coef(2) * MIComb(MIGenerator(Deriv{MIMonomial::label({2, 0}), m})));
  EXPECT_TRUE(mi_post(Dn("z(1,0)", n), d0, kD).is_zero());
  EXPECT_TRUE(mi_post(d0, d1, kD).is_zero());
}

TEST(MultiIndex, Bracket0) {
  MIGenerator d0(XLetter{0}), d1(XLetter{1});
  EXPECT_EQ(mi_bracket0(Dn("z_1", {2, 1}), d0), coef(2) * MIComb(Dn("z_1", {1, 1})));
  EXPECT_TRUE(mi_bracket0(Dn("z_1", {0, 1}), d0).is_zero());
  EXPECT_TRUE(mi_bracket0(d0, d1).is_zero());
  EXPECT_EQ(mi_bracket0(d0, Dn("z_1", {2, 1})), coef(-2) * MIComb(Dn("z_1", {1, 1})));
}

TEST(MultiIndex, FullBracket) {
  MIGenerator d0(XLetter{0}), d1(XLetter{1});
  EXPECT_TRUE(mi_bracket(d0, d1, kD).is_zero());
  EXPECT_EQ(mi_bracket(Dn("1", {1, 1}), d1, kD), MIComb(Dn("1", {1, 0})));
}

TEST(MultiIndex, OperatorOrder) {
  MIGenerator d0(XLetter{0});
  MIMonomial m = M("z_1 z(1,0)");
  DecVec n{1, 0};
  auto lhs = apply_sequence({d0, Dn("1", n)}, m, kD);
  auto rhs = apply_sequence({Dn("1", n), d0}, m, kD) + derivation_action(Dn("1", {0, 0}), m, kD);
  EXPECT_EQ(lhs, rhs);
}

TEST(MultiIndex, MonomialAlgebra) {
  MIMonomial a = M("z_1^2 z(1,0)"), b = M("z_1 z_3");
  EXPECT_EQ(a * b, M("z_1^3 z_3 z(1,0)"));
  EXPECT_EQ(a.degree(), 3u);
  EXPECT_FALSE(b.shift_label({1, 0}, -1).has_value());
  EXPECT_EQ(*a.shift_arity(1, -2), M("z(1,0)"));
}
