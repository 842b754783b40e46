#include <gtest/gtest.h>

#include "postlie/morphism.hpp"
#include "postlie/syntax.hpp"

using namespace postlie;

namespace {

constexpr std::size_t kD = 2;
MIPolynomial P(std::string_view s) { return parse_mi_poly(s, kD); }
MIComb C(std::string_view s) { return parse_mi_comb(s, kD); }
T0Tree T(std::string_view s) { return parse_t0_tree(s, kD); }
V0Comb V(std::string_view s) { return parse_v0_comb(s, kD); }

}  // namespace

TEST(Psi, RecursiveBase) {
  EXPECT_EQ(psi(T("Xi")), P("z_0"));
  EXPECT_EQ(psi(T("Xi I(Xi)")), P("z_1 z_0"));
  EXPECT_EQ(psi(T("Xi X^(2,0)")), P("2 * z_1 z(2,0)"));
}

TEST(Psi, VerbatimBase) {
  EXPECT_EQ(psi(T("Xi"), PsiBase::Verbatim), P("1"));
  EXPECT_EQ(psi(T("Xi I(Xi)"), PsiBase::Verbatim), P("z_1"));
  EXPECT_EQ(psi(T("Xi X^(2,0)"), PsiBase::Verbatim), P("2 * z_1 z(2,0)"));
}

TEST(PsiHat, Generators) {
  EXPECT_EQ(psi_hat(V("X_1")), C("d_1"));
  EXPECT_EQ(psi_hat(V("I[(2,0)](Xi)")), C("1/2 * z_0 D(2,0)"));
  EXPECT_EQ(psi_hat(V("I[(2,0)](Xi)"), PsiBase::Verbatim), C("1/2 * D(2,0)"));
  EXPECT_EQ(psi_hat(V("I[(1,1)](Xi I(Xi))")), C("z_0 z_1 D(1,1)"));
  EXPECT_EQ(psi_hat(V("I[(1,1)](Xi I(Xi))"), PsiBase::Verbatim), C("z_1 D(1,1)"));
}

TEST(PsiHat, VerbatimBaseBreaksPostMorphism) {
  T0Envelope tenv{T0Algebra(kD)};
  MIEnvelope menv{MIAlgebra(kD)};
  V0Comb x = V("X_0"), y = V("I[(1,0)](Xi)");
  for (auto base : {PsiBase::Recursive, PsiBase::Verbatim}) {
    MIComb lhs = psi_hat(tenv.post(x, y), base);
    MIComb rhs = menv.post(psi_hat(x, base), psi_hat(y, base));
    if (base == PsiBase::Recursive) {
      EXPECT_EQ(lhs, rhs);
    } else {
      EXPECT_EQ(lhs, C("z_1 z(1,0) D(1,0)"));
      EXPECT_TRUE(rhs.is_zero());
    }
  }
}

TEST(PsiHat, EnvelopeWords) {
  T0Envelope tenv{T0Algebra(kD)};
  MIEnvelope menv{MIAlgebra(kD)};
  auto x = parse_t0_env("X_0", tenv), y = parse_t0_env("I[(1,0)](Xi)", tenv);
  EXPECT_EQ(psi_hat_env(tenv, menv, tenv.star(x, y)),
            menv.star(psi_hat_env(tenv, menv, x), psi_hat_env(tenv, menv, y)));
}
