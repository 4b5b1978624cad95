#include "majorana/scalar.h"

#include <gtest/gtest.h>

#include <random>

using majorana::ArithmeticCapacityError;
using majorana::Complex;
using majorana::ExactScalar;
using majorana::Rational;

namespace {

ExactScalar random_exact(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> num(-10, 10);
  std::uniform_int_distribution<int> den(1, 10);
  ExactScalar::Coefficients c;
  for (auto& x : c) x = Rational(num(rng), den(rng));
  return ExactScalar(c);
}

double dist(Complex a, Complex b) { return std::abs(a - b); }

}  // namespace

TEST(Rational, canonical_form) {
  const Rational r(6, -4);
  EXPECT_EQ(r.num(), -3);
  EXPECT_EQ(r.den(), 2);
  EXPECT_EQ(Rational(0, -7).den(), 1);
  EXPECT_EQ(Rational(1, 3) + Rational(1, 6), Rational(1, 2));
  EXPECT_EQ(Rational(2, 3) * Rational(3, 4), Rational(1, 2));
  EXPECT_THROW(Rational(1, 0), std::domain_error);
}

TEST(Rational, overflow_is_reported) {
  const Rational big(std::int64_t{1} << 62);
  EXPECT_THROW(big * big, ArithmeticCapacityError);
  const Rational tiny(1, std::int64_t{1} << 62);
  EXPECT_THROW(tiny * tiny, ArithmeticCapacityError);
}

TEST(ExactScalar, zeta_powers) {
  const ExactScalar z = ExactScalar::zeta();
  EXPECT_EQ(z * ExactScalar::zeta_pow(3), ExactScalar(-1));
  ExactScalar p = 1;
  for (int k = 0; k < 4; ++k) p *= z;
  EXPECT_EQ(p, ExactScalar(-1));
  for (int k = 0; k < 4; ++k) p *= z;
  EXPECT_EQ(p, ExactScalar(1));
  EXPECT_EQ(ExactScalar::zeta_pow(2), ExactScalar::i());
  EXPECT_EQ(ExactScalar::zeta_pow(-1), z.conj());
}

TEST(ExactScalar, inverse_sqrt_two_squares_to_half) {
  // (z - z^3)/2 multiplied out coefficient by coefficient:
  // (z^2 - 2 z^4 + z^6)/4 = (i + 2 - i)/4 = 1/2
  const ExactScalar h({0, Rational(1, 2), 0, Rational(-1, 2)});
  EXPECT_EQ(h, ExactScalar::inv_sqrt2());
  EXPECT_EQ(h * h, ExactScalar(Rational(1, 2)));
  EXPECT_EQ(ExactScalar::sqrt2() * h, ExactScalar(1));
}

TEST(ExactScalar, conjugate_of_zeta_is_inverse) {
  EXPECT_EQ(ExactScalar::zeta().conj() * ExactScalar::zeta(), ExactScalar(1));
  EXPECT_EQ(ExactScalar::i().conj(), -ExactScalar::i());
}

TEST(ExactScalar, to_float_values) {
  const double h = std::sqrt(2.0) / 2;
  EXPECT_LE(dist(ExactScalar(1).to_complex(), {1, 0}), 1e-15);
  EXPECT_LE(dist(ExactScalar::zeta().to_complex(), {h, h}), 1e-15);
  EXPECT_LE(dist(ExactScalar::zeta_pow(2).to_complex(), {0, 1}), 1e-15);
  EXPECT_LE(dist(ExactScalar::zeta_pow(3).to_complex(), {-h, h}), 1e-15);
}

TEST(ExactScalar, inverse) {
  const ExactScalar a({3, Rational(1, 2), -2, 5});
  EXPECT_EQ(a * a.inverse(), ExactScalar(1));
  EXPECT_EQ(ExactScalar::inv_sqrt2().inverse(), ExactScalar::sqrt2());
  EXPECT_THROW(ExactScalar().inverse(), std::domain_error);
}

TEST(ExactScalar, to_string) {
  EXPECT_EQ(ExactScalar().to_string(), "0");
  EXPECT_EQ(ExactScalar::inv_sqrt2().to_string(), "1/2*z - 1/2*z^3");
  EXPECT_EQ(ExactScalar({-1, 0, 1, 0}).to_string(), "-1 + z^2");
}

TEST(ExactScalarProperty, field_axioms) {
  std::mt19937_64 rng(42);
  for (int trial = 0; trial < 500; ++trial) {
    const ExactScalar a = random_exact(rng), b = random_exact(rng), c = random_exact(rng);
    ASSERT_EQ((a * b) * c, a * (b * c));
    ASSERT_EQ((a + b) + c, a + (b + c));
    ASSERT_EQ(a * b, b * a);
    ASSERT_EQ(a + b, b + a);
    ASSERT_EQ(a * (b + c), a * b + a * c);
    ASSERT_EQ(a - a, ExactScalar());
    ASSERT_EQ((a * b).conj(), a.conj() * b.conj());
    if (!a.is_zero()) ASSERT_EQ(a * a.inverse(), ExactScalar(1));
  }
}

TEST(ExactScalarProperty, float_conversion_is_a_homomorphism) {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<int> num(-3, 3);
  for (int trial = 0; trial < 500; ++trial) {
    ExactScalar::Coefficients ca, cb;
    for (auto& x : ca) x = Rational(num(rng), 4);
    for (auto& x : cb) x = Rational(num(rng), 4);
    const ExactScalar a(ca), b(cb);
    ASSERT_LE(dist((a * b).to_complex(), a.to_complex() * b.to_complex()), 1e-14);
    ASSERT_LE(dist(a.conj().to_complex(), std::conj(a.to_complex())), 1e-14);
    ASSERT_LE(std::abs((a * a.conj()).to_complex().imag()), 1e-14);
  }
}
