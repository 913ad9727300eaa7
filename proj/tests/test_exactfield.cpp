#include <gtest/gtest.h>

#include <complex>
#include <random>

#include "hopf/exactfield.hpp"

using namespace hopf;

namespace {

Cyclotomic random_element(int m, std::mt19937& rng) {
  std::uniform_int_distribution<int> num(-9, 9), den(1, 5);
  std::vector<Rational> c;
  for (int i = 0; i < euler_phi(m); ++i) c.emplace_back(num(rng), den(rng));
  return Cyclotomic(m, c);
}

}  // namespace

TEST(Cyclotomic, ZetaSquaredIsMinusOneInOrderFour) {
  Cyclotomic z = primitive_root(4);
  EXPECT_EQ(z * z, Cyclotomic(4, Rational(-1)));
}

TEST(Cyclotomic, ThirdRootsProduct) {
  Cyclotomic z = primitive_root(3), one = Cyclotomic::one(3);
  Cyclotomic prod = (one + z) * (one + z * z);
  EXPECT_EQ(prod, one);
  // numeric cross-check of the same identity
  std::complex<double> w = std::polar(1.0, 2 * std::acos(-1.0) / 3);
  std::complex<double> v = (1.0 + w) * (1.0 + w * w);
  EXPECT_NEAR(v.real(), 1.0, 1e-12);
  EXPECT_NEAR(v.imag(), 0.0, 1e-12);
}

TEST(Cyclotomic, RationalSum) {
  EXPECT_EQ(Cyclotomic(1, Rational(2, 3)) + Cyclotomic(1, Rational(1, 3)), Cyclotomic::one(1));
}

TEST(Cyclotomic, Errors) {
  EXPECT_THROW(Cyclotomic::one(4) / Cyclotomic::zero(4), DivisionByZero);
  EXPECT_THROW(Cyclotomic::one(4) + Cyclotomic::one(8), OrderMismatch);
  EXPECT_THROW(cyclo_arith(Cyclotomic::one(3), Cyclotomic::one(6), ArithOp::mul), OrderMismatch);
  EXPECT_THROW(embed(primitive_root(4), 6), NotDivisible);
}

TEST(Cyclotomic, PrimitiveRootOrders) {
  EXPECT_EQ(primitive_root(2), Cyclotomic(2, Rational(-1)));
  for (int m : {1, 2, 3, 4, 5, 6, 8, 9, 12, 15, 16}) {
    Cyclotomic z = primitive_root(m);
    EXPECT_EQ(multiplicative_order(z), m) << m;
    EXPECT_TRUE(z.pow(m).is_one());
  }
  Cyclotomic w = primitive_root(8);
  EXPECT_EQ(w.pow(4), Cyclotomic(8, Rational(-1)));
  Cyclotomic sq = w;
  for (int i = 0; i < 3; ++i) sq = sq * sq;
  EXPECT_TRUE(sq.is_one());
}

TEST(Cyclotomic, Embedding) {
  EXPECT_EQ(embed(Cyclotomic(2, Rational(-1)), 4), Cyclotomic::zeta_power(4, 2));
  EXPECT_EQ(embed(primitive_root(4), 8), Cyclotomic::zeta_power(8, 2));
  Cyclotomic e = embed(primitive_root(3), 12);
  EXPECT_EQ(e, Cyclotomic::zeta_power(12, 4));
  EXPECT_EQ(multiplicative_order(e), 3);
}

TEST(Cyclotomic, FieldAxiomsOnSamples) {
  std::mt19937 rng(7);
  for (int m : {3, 4, 5, 8, 12}) {
    for (int trial = 0; trial < 20; ++trial) {
      Cyclotomic a = random_element(m, rng), b = random_element(m, rng), c = random_element(m, rng);
      EXPECT_EQ((a * b) * c, a * (b * c));
      EXPECT_EQ(a * (b + c), a * b + a * c);
      EXPECT_EQ(a * b, b * a);
      if (!a.is_zero()) EXPECT_TRUE((a * a.inverse()).is_one());
      // numeric consistency of multiplication
      auto d = (a * b).approx() - a.approx() * b.approx();
      EXPECT_LT(std::abs(d), 1e-9);
    }
  }
}

TEST(Cyclotomic, EmbeddingIsMultiplicativeAndInjective) {
  std::mt19937 rng(11);
  for (auto [m, M] : {std::pair{3, 12}, std::pair{4, 8}, std::pair{4, 12}, std::pair{2, 8}}) {
    for (int trial = 0; trial < 10; ++trial) {
      Cyclotomic a = random_element(m, rng), b = random_element(m, rng);
      EXPECT_EQ(embed(a * b, M), embed(a, M) * embed(b, M));
      EXPECT_EQ(embed(a + b, M), embed(a, M) + embed(b, M));
      EXPECT_EQ(a == b, embed(a, M) == embed(b, M));
    }
  }
}

TEST(Cyclotomic, NegativePowersAndPrinting) {
  Cyclotomic q = primitive_root(4);
  EXPECT_EQ(q.pow(-1), -q);
  EXPECT_EQ((Cyclotomic::one(4) - q).str(), "1 - zeta");
  EXPECT_EQ(Cyclotomic(4, Rational(-1, 2)).str(), "-1/2");
}
