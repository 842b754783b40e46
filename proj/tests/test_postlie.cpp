#include <gtest/gtest.h>

#include "postlie/grafting.hpp"
#include "postlie/syntax.hpp"
#include "postlie/tree_postlie.hpp"

using namespace postlie;

namespace {

constexpr std::size_t kD = 2;
VComb V(std::string_view s) { return parse_v_comb(s, kD); }
VBasis G(std::string_view s) { return V(s).begin()->first; }

VComb post(std::string_view x, std::string_view y) {
  return bilinear(V(x), V(y), [](const VBasis& u, const VBasis& v) { return post_product(u, v); });
}
VComb bracket(std::string_view x, std::string_view y) {
  return bilinear(V(x), V(y), [](const VBasis& u, const VBasis& v) { return bracket0_trees(u, v); });
}

class Env : public ::testing::Test {
 protected:
  TreeEnvelope env{TreeAlgebra(kD)};
  TreeEnvElement E(std::string_view s) { return parse_tree_env(s, env); }
};

}  // namespace

TEST(TreePostLie, Products) {
  EXPECT_TRUE(post("X_0", "X_1").is_zero());
  EXPECT_TRUE(post("I[(1,0)](Xi)", "X_0").is_zero());
  EXPECT_EQ(post("X_0", "I[(1,0)](Xi)"), V("I[(1,0)](X^(1,0) Xi)"));
  EXPECT_EQ(post("X_1", "I[(0,0)](X^(0,1) I[(0,1)](1))"),
            V("I[(0,0)](X^(0,2) I[(0,1)](1)) + I[(0,0)](X^(0,1) I[(0,1)](X^(0,1)))"));
}

TEST(TreePostLie, Brackets) {
  EXPECT_EQ(bracket("I[(1,0)](Xi)", "X_0"), V("I[(0,0)](Xi)"));
  EXPECT_TRUE(bracket("I[(0,1)](Xi)", "X_0").is_zero());
  EXPECT_TRUE(bracket("X_0", "X_1").is_zero());
  EXPECT_EQ(bracket("X_0", "I[(1,0)](Xi)"), -V("I[(0,0)](Xi)"));
}

TEST_F(Env, PostLieAxiomsOnExample) {
  auto rep = env.check_post_lie(G("X_0"), G("I[(1,0)](Xi)"), G("X_0"));
  EXPECT_TRUE(rep.ok());
  auto same = env.check_post_lie(G("I[(1,1)](Xi)"), G("I[(1,1)](Xi)"), G("X_1"));
  EXPECT_TRUE(same.ident2_lhs.is_zero());
  EXPECT_TRUE(same.ok());
  EXPECT_TRUE(env.derived_bracket(G("I[(1,0)](X^(1,0))"), G("I[(1,0)](X^(1,0))")).is_zero());
}

TEST_F(Env, NormalForm) {
  EXPECT_EQ(env.normal_form({G("I[(1,0)](Xi)"), G("X_0")}), E("X_0 ; I[(1,0)](Xi) + I[(0,0)](Xi)"));
  EXPECT_EQ(env.normal_form({G("X_0"), G("I[(1,0)](Xi)")}), E("X_0 ; I[(1,0)](Xi)"));
  auto results = env.all_rewrite_results({G("I[(1,1)](Xi)"), G("X_0"), G("X_1")});
  ASSERT_EQ(results.size(), 1u);
  EXPECT_EQ(results[0], env.normal_form({G("I[(1,1)](Xi)"), G("X_0"), G("X_1")}));
}

TEST_F(Env, Coproduct) {
  using T = TreeEnvelope::Tensor;
  auto one = env.unit_basis();
  auto x = E("X_0").begin()->first;
  auto xx = E("X_0 ; X_0").begin()->first;
  EXPECT_EQ(env.coproduct(one), T({{{one, one}, 1}}));
  EXPECT_EQ(env.coproduct(x), T({{{x, one}, 1}, {{one, x}, 1}}));
  EXPECT_EQ(env.coproduct(xx), T({{{xx, one}, 1}, {{x, x}, 2}, {{one, xx}, 1}}));
}

TEST_F(Env, TriangleAndStar) {
  auto a = E("X_1 ; I[(1,0)](Xi) ; I[(0,0)](1)");
  EXPECT_EQ(env.triangle(env.unit(), a), a);
  auto x = E("X_0"), y1 = E("I[(1,0)](X^(1,0))"), y2 = E("I[(0,0)](Xi)");
  EXPECT_EQ(env.triangle(x, env.mul(y1, y2)), env.mul(env.triangle(x, y1), y2) + env.mul(y1, env.triangle(x, y2)));
  EXPECT_EQ(env.star(env.unit(), a), a);
  EXPECT_EQ(env.star(a, env.unit()), a);
  auto p = E("I[(0,1)](X^(0,1) Xi)");
  EXPECT_EQ(env.star(x, p), env.mul(x, p) + env.triangle(x, p));
  EXPECT_EQ(env.star(x, p), E("X_0 ; I[(0,1)](X^(0,1) Xi) + I[(0,1)](X^(1,1) Xi)"));
}

TEST_F(Env, InducedRepresentation) {
  EXPECT_EQ(env.induced_rep(G("X_1"), env.unit()), E("X_1"));
  auto a = E("I[(1,0)](Xi) ; I[(0,0)](X^(1,0))");
  auto x = G("I[(1,0)](X^(1,0))"), y = G("X_0");
  auto lhs = env.induced_rep(env.derived_bracket(x, y), a);
  auto rhs = env.induced_rep(x, env.induced_rep(y, a)) - env.induced_rep(y, env.induced_rep(x, a));
  EXPECT_EQ(lhs, rhs);
}

TEST_F(Env, Star2) {
  DecoratedTree tau = parse_tree("X^(1,0) Xi", kD);
  EXPECT_EQ(star2(env, env.unit_basis(), tau, {1, 0}), TreeComb(tau));
  EXPECT_TRUE(verify_identification(env, env.unit_basis(), tau, {1, 0}).ok());
  auto sigma = E("X_0 ; I[(0,0)](Xi)").begin()->first;
  EXPECT_TRUE(verify_identification(env, sigma, tau, {0, 1}).ok());
}
