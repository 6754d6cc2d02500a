#include <gtest/gtest.h>

#include <random>

#include "asmkit/pfaffian_formulas.hpp"

using namespace asmkit;

namespace {

Rational rnd(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> num(1, 50), sgn(0, 1);
  Rational r(num(rng), num(rng));
  return sgn(rng) ? -r : r;
}

Rational generic(std::mt19937_64& rng) {
  for (;;) {
    Rational r = rnd(rng);
    if (r != 1 && r != -1) return r;
  }
}

std::vector<Rational> distinct(std::mt19937_64& rng, int n) {
  std::vector<Rational> u;
  while (static_cast<int>(u.size()) < n) {
    Rational r = generic(rng);
    bool clash = false;
    for (const auto& x : u) clash = clash || r == x || r == -x || r * x == 1 || r * x == -1;
    if (!clash) u.push_back(r);
  }
  return u;
}

}  // namespace

TEST(PartitionPfaffian, OrdersOneAndTwo) {
  std::mt19937_64 rng(1);
  for (int k = 0; k < 5; ++k) {
    auto u = distinct(rng, 2);
    WeightParams<Rational> p{rnd(rng), rnd(rng), rnd(rng), rnd(rng), generic(rng), PhiForm::one};
    EXPECT_EQ(partition_pfaffian(1, std::vector<Rational>{u[0]}, p), partition_direct(1, std::vector<Rational>{u[0]}, p));
    EXPECT_EQ(partition_pfaffian(2, u, p), partition_direct(2, u, p));
  }
}

TEST(PartitionPfaffian, AgreesWithDirectSum) {
  std::mt19937_64 rng(2);
  for (int n = 3; n <= 5; ++n) {
    for (int k = 0; k < 3; ++k) {
      auto u = distinct(rng, n);
      Rational q = generic(rng);
      WeightParams<Rational> p = k == 2 ? WeightParams<Rational>::specialized(rnd(rng), q)
                                        : WeightParams<Rational>{rnd(rng), rnd(rng), rnd(rng), rnd(rng), q, PhiForm::one};
      EXPECT_EQ(partition_pfaffian(n, u, p), partition_direct(n, u, p)) << "n=" << n;
    }
  }
}

TEST(PartitionPfaffian, CollidingParametersArePoles) {
  std::vector<Rational> u{Rational(2), Rational(2), Rational(3)};
  WeightParams<Rational> p{1, 2, 3, 4, Rational(5), PhiForm::one};
  EXPECT_THROW(partition_pfaffian(3, u, p), PoleError);
}

TEST(ZxFormula, DegenerateZEqualsOne) {
  // At z = 1 the second term vanishes and the t-argument is 1.
  std::mt19937_64 rng(3);
  for (int n = 2; n <= 4; ++n) {
    Rational s = rnd(rng), q = generic(rng);
    std::vector<Rational> ones(n, Rational(1));
    EXPECT_EQ(zx_rhs(n, Rational(1), s, q), partition_specialized(n, ones, s, q));
  }
}

TEST(ZxFormula, RandomPoints) {
  std::mt19937_64 rng(4);
  for (int n = 2; n <= 5; ++n) {
    for (int k = 0; k < 3; ++k) {
      Rational z = generic(rng), s = rnd(rng), q = generic(rng);
      std::vector<Rational> u(n, Rational(1));
      u[0] = z;
      EXPECT_EQ(zx_rhs(n, z, s, q), partition_specialized(n, u, s, q)) << "n=" << n;
    }
  }
}

TEST(ZxFormula, SZeroSlice) {
  std::mt19937_64 rng(5);
  Rational z = generic(rng), q = generic(rng);
  EXPECT_EQ(zx_rhs(2, z, Rational(0), q), partition_specialized(2, std::vector<Rational>{z, Rational(1)}, Rational(0), q));
  EXPECT_EQ(zx_rhs(2, z, Rational(0), q), osasm_partition(2, std::vector<Rational>{z, Rational(1)}, q));
}

TEST(PsiValues, RatioIsSix) {
  auto psi = psi_values(1, {Cyclo12(2)});
  EXPECT_FALSE(psi.psi1.is_zero());
  EXPECT_EQ(psi.psi2, Cyclo12(6) * psi.psi1);
  std::mt19937_64 rng(6);
  for (int n = 2; n <= 3; ++n) {
    auto u = distinct(rng, n);
    auto p = psi_values(n, std::vector<Cyclo12>(u.begin(), u.end()));
    EXPECT_EQ(p.psi2, Cyclo12(6) * p.psi1) << n;
  }
}

TEST(PsiValues, PoleWhenDenominatorVanishes) {
  // u = z^2 makes u^2 * 1^2 + u^-2 + 1 = z^4 + z^-4 + 1 = 0 against the entry 1.
  EXPECT_THROW(psi_values(1, {Cyclo12::zeta_power(2)}), PoleError);
}
