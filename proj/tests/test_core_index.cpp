#include <gtest/gtest.h>

#include <random>

#include "postlie/decvec.hpp"
#include "postlie/lincomb.hpp"
#include "postlie/rational.hpp"

using namespace postlie;

TEST(DecVec, Binom) {
  EXPECT_EQ(binom({2, 1}, {1, 0}), 2);
  EXPECT_EQ(binom({1, 1}, {2, 0}), 0);
  EXPECT_EQ(binom({4, 3}, {2, 1}), 18);
}

TEST(DecVec, PascalRule) {
  for (int n0 = 0; n0 <= 3; ++n0)
    for (int n1 = 0; n1 <= 3; ++n1) {
      DecVec n{n0, n1};
      for (std::size_t i = 0; i < 2; ++i)
        for_each_below(n + DecVec::unit(2, i), [&](const DecVec& l) {
          std::int64_t lower = 0;
          if (auto m = l.minus(DecVec::unit(2, i))) lower = binom(n, *m);
          EXPECT_EQ(binom(n + DecVec::unit(2, i), l), binom(n, l) + lower) << n.to_string() << l.to_string();
        });
    }
}

TEST(DecVec, ScaledNorm) {
  EXPECT_EQ(snorm({1, 1}, Scaling::parabolic(2)), 3);
  EXPECT_EQ(snorm({0, 0}, Scaling::parabolic(2)), 0);
  EXPECT_EQ(snorm({3, 2}, Scaling::unit(2)), 5);
}

TEST(DecVec, Factorial) {
  EXPECT_EQ(factorial({0, 0}), 1);
  EXPECT_EQ(factorial({2, 1}), 2);
  EXPECT_EQ(factorial({3, 2}), 12);
}

TEST(DecVec, Arithmetic) {
  DecVec a{2, 1}, b{1, 1};
  EXPECT_EQ(a + b, (DecVec{3, 2}));
  EXPECT_EQ(a.minus(b), (DecVec{1, 0}));
  EXPECT_FALSE(b.minus(a).has_value());
  EXPECT_TRUE(b.leq(a));
  EXPECT_FALSE(a.leq(b));
  EXPECT_EQ(meet(a, DecVec{0, 3}), (DecVec{0, 1}));
  EXPECT_THROW(require_same_dim(a, DecVec(3)), DimensionError);
  int count = 0;
  for_each_below(a, [&](const DecVec&) { ++count; });
  EXPECT_EQ(count, 6);
}

TEST(DecVec, Order) {
  EXPECT_LT((DecVec{0, 1}), (DecVec{1, 0}));
  EXPECT_LT(DecVec(2), DecVec(3));
}

TEST(Rational, Parse) {
  EXPECT_EQ(parse_coefficient("3/6"), coef(1, 2));
  EXPECT_EQ(parse_coefficient("-2"), coef(-2));
  EXPECT_EQ(to_string(coef(-4, 6)), "-2/3");
  EXPECT_THROW(parse_coefficient("x"), std::invalid_argument);
  EXPECT_THROW(parse_coefficient("1/0"), std::invalid_argument);
}

namespace {

LinComb<int> random_comb(std::mt19937_64& rng) {
  LinComb<int> x;
  for (int k = 0; k < 5; ++k)
    x.add(static_cast<int>(rng() % 6), coef(static_cast<long>(rng() % 7) - 3, static_cast<long>(rng() % 3) + 1));
  return x;
}

}  // namespace

TEST(LinComb, VectorSpaceLaws) {
  std::mt19937_64 rng(7);
  for (int s = 0; s < 200; ++s) {
    auto x = random_comb(rng), y = random_comb(rng), z = random_comb(rng);
    Coefficient c = coef(static_cast<long>(rng() % 5) - 2, 3);
    EXPECT_EQ(x + y, y + x);
    EXPECT_EQ((x + y) + z, x + (y + z));
    EXPECT_EQ(c * (x + y), c * x + c * y);
    EXPECT_TRUE((x - x).is_zero());
    EXPECT_EQ(x + LinComb<int>(), x);
    for (const auto& [b, k] : x + y) EXPECT_NE(sgn(k), 0);
  }
}

TEST(LinComb, Bilinear) {
  LinComb<int> x{{1, 2}, {2, -1}}, y{{3, coef(1, 2)}};
  auto p = bilinear(x, y, [](int a, int b) { return LinComb<int>(a * b); });
  EXPECT_EQ(p, (LinComb<int>{{3, 1}, {6, coef(-1, 2)}}));
  EXPECT_EQ(p.coefficient(6), coef(-1, 2));
  EXPECT_EQ(p.coefficient(7), 0);
}
