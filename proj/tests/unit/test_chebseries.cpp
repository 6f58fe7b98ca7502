#include <gtest/gtest.h>

#include "skein/chebseries.hpp"

namespace skein {
namespace {

RationalPoly X(int k = 1) { return RationalPoly::monomial('X', Rational(1), k); }
RationalPoly C(long c) { return RationalPoly('X', Rational(c)); }

TEST(Chebyshev, SmallT) {
  EXPECT_EQ(cheb_T(0), C(2));
  EXPECT_EQ(cheb_T(1), X());
  EXPECT_EQ(cheb_T(2), X(2) - C(2));
  EXPECT_THROW(cheb_T(-1), std::invalid_argument);
}

TEST(Chebyshev, SmallTPlusOne) {
  EXPECT_EQ(t_plus_one(1), X() + C(2));
  EXPECT_EQ(t_plus_one(2), X(2) + X() * Rational(2));
  const RationalPoly w2 = shift_to_w(t_plus_one(2));
  // w^2 - 2w
  EXPECT_EQ(w2.coeff(2), Rational(1));
  EXPECT_EQ(w2.coeff(1), Rational(-2));
  EXPECT_EQ(w2.coeff(0), Rational(0));
}

// Independent check: evaluate at q + q^{-1} through the explicit Laurent polynomial.
TEST(Chebyshev, PowerSumIdentity) {
  const LaurentPoly q = LaurentPoly::A(1);
  const LaurentPoly c = q + LaurentPoly::A(-1);
  for (int n = 0; n <= 12; ++n) {
    EXPECT_EQ(substitute(cheb_T(n), c), LaurentPoly::A(n) + LaurentPoly::A(-n)) << n;
    EXPECT_EQ(substitute(t_plus_one(n), c),
              (q + LaurentPoly(1)).pow(n) + (LaurentPoly::A(-1) + LaurentPoly(1)).pow(n))
        << n;
  }
}

TEST(Chebyshev, ShiftedDivisibility) {
  for (int n = 2; n <= 12; ++n) {
    const RationalPoly w = shift_to_w(t_plus_one(n));
    for (int k = 0; k < n / 2; ++k) EXPECT_EQ(w.coeff(k), Rational(0)) << n << " " << k;
  }
}

TEST(ACoefficients, Leading) {
  const auto a = a_coefficients(6);
  ASSERT_EQ(a.size(), 7u);
  EXPECT_EQ(a[0], Rational(0));
  EXPECT_EQ(a[1], Rational(0));
  EXPECT_EQ(a[2], Rational(1));
  EXPECT_EQ(a[3], Rational(1));
  EXPECT_EQ(a[4], make_rational(11, 12));
  EXPECT_THROW(a_coefficients(1), std::invalid_argument);
}

// (log(1 - y))^2 = (sum y^k / k)^2; compare with a_n (-1)^n read off directly.
TEST(ACoefficients, SquareOfLogSeries) {
  const int N = 10;
  std::vector<Rational> log(N + 1);
  for (int k = 1; k <= N; ++k) log[k] = Rational(1, k);
  const auto a = a_coefficients(N);
  for (int n = 2; n <= N; ++n) {
    Rational sq;
    for (int k = 1; k < n; ++k) sq += log[k] * log[n - k];
    EXPECT_EQ(a[n], sq) << n;
  }
}

TEST(ArccoshSeries, LiteralAndCorrected) {
  const auto lit = arccosh_sq_series(4, ArccoshVariant::kLiteral);
  EXPECT_EQ(lit.coeff(0, 1), Rational(1));
  EXPECT_EQ(lit.coeff(0, 2), make_rational(-1, 6));
  const auto cor = arccosh_sq_series(4, ArccoshVariant::kCorrected);
  EXPECT_EQ(cor.coeff(0, 1), Rational(-1));
}

TEST(ArccoshSeries, RescaledMatchesLogSquare) {
  const auto lhs = log_t_squared(12);
  const auto rhs = arccosh_sq_series(12, ArccoshVariant::kRescaled) * Rational(2);
  EXPECT_EQ(lhs, rhs);
}

TEST(TwistElement, LowOrder) {
  const TwistElement x = xc_truncated(4);
  EXPECT_EQ(x.series.coeff(0, 1), make_rational(-1, 2));
  EXPECT_EQ(x.series.coeff(0, 0), Rational(0));
  for (const auto& [key, c] : x.series.terms()) EXPECT_GE(key.first + key.second, 1);
  EXPECT_THROW(xc_truncated(1), std::invalid_argument);
}

TEST(TwistElement, PrefactorConstantTerm) {
  const auto beta = twist_prefactor(Grading::kTotal, 4);
  EXPECT_EQ(beta.coeff(0, 0), make_rational(1, 4));
  EXPECT_EQ(beta.coeff(1, 0), Rational(0));
  EXPECT_EQ(beta.coeff(2, 0), make_rational(1, 24));
}

}  // namespace
}  // namespace skein
