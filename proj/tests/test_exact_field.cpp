#include <gtest/gtest.h>

#include <random>

#include "asmkit/field.hpp"

using namespace asmkit;

namespace {

Cyclo12 z() { return Cyclo12::zeta(); }

Cyclo12 random_cyclo(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> d(-20, 20);
  std::uniform_int_distribution<int> den(1, 9);
  return {Rational(d(rng), den(rng)), Rational(d(rng), den(rng)), Rational(d(rng), den(rng)), Rational(d(rng), den(rng))};
}

}  // namespace

TEST(Rational, CanonicalForm) {
  Rational r(BigInt(6), BigInt(-4));
  EXPECT_EQ(r.numerator(), -3);
  EXPECT_EQ(r.denominator(), 2);
  EXPECT_EQ(r.to_string(), "-3/2");
  EXPECT_EQ(Rational(4, 2).to_string(), "2");
  Rational s = Rational(1, 6) + Rational(1, 3);
  EXPECT_EQ(s, Rational(1, 2));
  EXPECT_EQ(s.denominator(), 2);
}

TEST(Rational, CanonicalFormAfterEveryOperation) {
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<int> d(-30, 30);
  for (int k = 0; k < 200; ++k) {
    Rational a(d(rng), d(rng) == 0 ? 1 : 7);
    Rational b(d(rng), 1 + (k % 11));
    for (Rational r : {a + b, a - b, a * b}) {
      BigInt g;
      mpz_gcd(g.get_mpz_t(), r.numerator().get_mpz_t(), r.denominator().get_mpz_t());
      EXPECT_EQ(g, 1);
      EXPECT_GT(r.denominator(), 0);
    }
  }
}

TEST(Rational, ParseAndDivisionByZero) {
  EXPECT_EQ(Rational::parse("-7/21"), Rational(-1, 3));
  EXPECT_EQ(Rational::parse(" 5 "), Rational(5));
  EXPECT_THROW(Rational::parse("x"), std::invalid_argument);
  EXPECT_THROW(Rational(1) / Rational(0), DivisionByZero);
  EXPECT_THROW(Rational(BigInt(1), BigInt(0)), DivisionByZero);
}

TEST(Cyclo12, MultiplicationReducesByMinimalPolynomial) {
  EXPECT_EQ(z() * Cyclo12::zeta_power(3), Cyclo12(-1, 0, 1, 0));
  Cyclo12 a(Rational(1, 2), -3, 4, Rational(2, 7));
  EXPECT_EQ(Cyclo12(1) * a, a);
  EXPECT_EQ(Cyclo12::zeta_power(6), Cyclo12(-1));
  EXPECT_EQ(Cyclo12::zeta_power(12), Cyclo12(1));
}

TEST(Cyclo12, SqrtThreeSquared) {
  // The inverse of z is z - z^3 (z^11 reduced); z + 1/z squares to 3.
  Cyclo12 zinv = z() - Cyclo12::zeta_power(3);
  EXPECT_EQ(z() * zinv, Cyclo12(1));
  EXPECT_EQ((z() + zinv) * (z() + zinv), Cyclo12(3));
  EXPECT_EQ(z() + zinv, Cyclo12::sqrt3());
}

TEST(Cyclo12, Inverse) {
  EXPECT_EQ(Cyclo12(1).inverse(), Cyclo12(1));
  EXPECT_EQ(z().inverse(), Cyclo12(0, 1, 0, -1));
  EXPECT_EQ(Cyclo12::zeta_power(11), Cyclo12(0, 1, 0, -1));
  EXPECT_EQ(Cyclo12::imaginary_unit().inverse(), -Cyclo12::imaginary_unit());
  EXPECT_THROW(Cyclo12(0).inverse(), DivisionByZero);
  EXPECT_THROW(Cyclo12(1) / Cyclo12(0), DivisionByZero);
}

TEST(Cyclo12, DefiningConstants) {
  Cyclo12 q = z();
  Cyclo12 qi = q.inverse();
  EXPECT_EQ(q * q + qi * qi, Cyclo12(1));
  EXPECT_EQ(q - qi, Cyclo12::imaginary_unit());
  EXPECT_EQ((q + qi) * (q + qi), Cyclo12(3));
  EXPECT_EQ(Cyclo12::imaginary_unit() * Cyclo12::imaginary_unit(), Cyclo12(-1));
}

TEST(Cyclo12, FieldAxiomsOnRandomSamples) {
  std::mt19937_64 rng(2024);
  for (int k = 0; k < 100; ++k) {
    Cyclo12 a = random_cyclo(rng), b = random_cyclo(rng), c = random_cyclo(rng);
    EXPECT_EQ((a + b) + c, a + (b + c));
    EXPECT_EQ((a * b) * c, a * (b * c));
    EXPECT_EQ(a * b, b * a);
    EXPECT_EQ(a * (b + c), a * b + a * c);
    if (!a.is_zero()) {
      EXPECT_EQ(a * a.inverse(), Cyclo12(1));
    }
  }
}

TEST(Cyclo12, TextRoundTrip) {
  EXPECT_EQ(Cyclo12(0).to_string(), "0");
  EXPECT_EQ(Cyclo12(0, 2, 0, -1).to_string(), "2*z - z^3");
  EXPECT_EQ(Cyclo12(Rational(-1, 2), 1, Rational(3, 4), 0).to_string(), "-1/2 + z + 3/4*z^2");
  std::mt19937_64 rng(5);
  for (int k = 0; k < 50; ++k) {
    Cyclo12 a = random_cyclo(rng);
    EXPECT_EQ(Cyclo12::parse(a.to_string()), a) << a.to_string();
  }
  EXPECT_EQ(Cyclo12::parse("z^4"), Cyclo12(-1, 0, 1, 0));
}

TEST(Sigma, Examples) {
  EXPECT_EQ(sigma(Rational(1)), Rational(0));
  EXPECT_EQ(sigma(Rational(2)), Rational(3, 2));
  EXPECT_THROW(sigma(Rational(0)), DivisionByZero);
  Cyclo12 q = z();
  EXPECT_EQ(sigma(pow(q, 4)), Cyclo12::imaginary_unit() * Cyclo12::sqrt3());
}

TEST(SigmaHat, Examples) {
  Cyclo12 q = z();
  EXPECT_EQ(sigma_hat(pow(q, 4), q), Cyclo12(1));
  EXPECT_EQ(sigma_hat(Cyclo12(1), q), Cyclo12(0));
  EXPECT_EQ(sigma_hat(q * q, q), Cyclo12(1));
  // q^8 = 1 makes sigma(q^4) vanish.
  EXPECT_THROW(sigma_hat(Rational(2), Rational(1)), DivisionByZero);
  EXPECT_THROW(sigma_hat(Cyclo12(2), Cyclo12::zeta_power(3)), DivisionByZero);
  Rational qr(3);
  EXPECT_EQ(sigma_hat(pow(qr, 4), qr), Rational(1));
}

TEST(Pow, NegativeAndZeroExponents) {
  EXPECT_EQ(pow(Rational(2, 3), -2), Rational(9, 4));
  EXPECT_EQ(pow(Cyclo12::zeta(), -1), Cyclo12::zeta_power(11));
  EXPECT_EQ(pow(Cyclo12(5), 0), Cyclo12(1));
  EXPECT_THROW(pow(Rational(0), -1), DivisionByZero);
}
