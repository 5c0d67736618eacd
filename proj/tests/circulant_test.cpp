#include <gtest/gtest.h>

#include "helm/circulant.hpp"
#include "helm/formulas.hpp"
#include "oracles.hpp"

namespace helm {
namespace {

TEST(Circulant, RowsShiftRight) {
  const RatMatrix c = circ({1, 2, 3, 4});
  const RatMatrix expected{{1, 2, 3, 4}, {4, 1, 2, 3}, {3, 4, 1, 2}, {2, 3, 4, 1}};
  EXPECT_EQ(c, expected);
}

TEST(Circulant, SingleEntry) { EXPECT_EQ(circ({7}), (RatMatrix{{7}})); }

TEST(Circulant, RejectsEmpty) { EXPECT_THROW(circ({}), DimensionError); }

TEST(Circulant, GeneratorMaterializes) {
  const CircSpec s{{0, 1, 2, 1}};
  EXPECT_EQ(s.size(), 4u);
  EXPECT_EQ(s.materialize(), circ(s.first_row));
}

TEST(Circulant, IsCirculant) {
  EXPECT_TRUE(is_circulant(circ({5, -1, 0, 2, 3})));
  RatMatrix a = circ({5, -1, 0, 2, 3});
  a(2, 4) += 1;
  EXPECT_FALSE(is_circulant(a));
  EXPECT_FALSE(is_circulant(RatMatrix(2, 3)));
}

TEST(Circulant, RimBlockIsCircOfV) {
  for (int n = 4; n <= 14; n += 2) {
    const HelmContext ctx(n);
    EXPECT_EQ(rim_block(ctx), circ(ctx.v())) << "n=" << n;
  }
}

TEST(Circulant, VVectorShape) {
  const HelmContext ctx(8);
  EXPECT_EQ(ctx.v(), (RatVec{0, 1, 2, 2, 2, 2, 1}));
}

TEST(CVector, Positions) {
  EXPECT_EQ(c_vector(1, 6), (RatVec{0, 1, 0, 0, 1}));
  EXPECT_EQ(c_vector(2, 6), (RatVec{0, 0, 1, 1, 0}));
  EXPECT_EQ(c_vector(1, 4), (RatVec{0, 1, 1}));
  EXPECT_EQ(c_vector(3, 8), (RatVec{0, 0, 0, 1, 1, 0, 0}));
}

TEST(CVector, Symmetric) {
  for (int n = 4; n <= 20; n += 2)
    for (int k = 1; k <= n / 2 - 1; ++k) EXPECT_TRUE(circ(c_vector(k, n)).symmetric()) << n << "," << k;
}

TEST(CVector, RejectsBadArguments) {
  EXPECT_THROW(c_vector(1, 5), std::invalid_argument);
  EXPECT_THROW(c_vector(0, 6), std::invalid_argument);
  EXPECT_THROW(c_vector(3, 6), std::invalid_argument);
}

TEST(CircMul, FixedInstance) {
  const RatVec s{1, -2, 3};
  const CircSpec c{{0, 1, 5}};
  EXPECT_TRUE(circ_mul_identity_check(s, c));
}

TEST(CircMul, LengthMismatch) {
  EXPECT_THROW(circ_mul_identity_check({1, 2}, CircSpec{{1, 2, 3}}), DimensionError);
}

TEST(CircMul, RandomInstances) {
  oracle::RationalGen gen(11);
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t mu = gen.size(1, 9);
    const RatVec s = gen.vec(mu);
    const CircSpec c{gen.vec(mu)};
    ASSERT_TRUE(circ_mul_identity_check(s, c)) << "trial " << trial;
  }
}

TEST(CircMul, ProductsCommute) {
  oracle::RationalGen gen(12);
  for (int trial = 0; trial < 30; ++trial) {
    const std::size_t mu = gen.size(2, 7);
    const RatMatrix a = circ(gen.vec(mu)), b = circ(gen.vec(mu));
    EXPECT_EQ(a * b, b * a);
    EXPECT_TRUE(is_circulant(a * b));
  }
}

}  // namespace
}  // namespace helm
