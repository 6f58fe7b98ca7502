#include "skein/chebseries.hpp"

#include <stdexcept>

namespace skein {

ChebCache& ChebCache::global() {
  static ChebCache cache;
  return cache;
}

void ChebCache::extend_locked(int n) {
  if (t_.empty()) {
    t_.emplace_back('X', Rational(2));
    t_.push_back(RationalPoly::monomial('X', 1, 1));
  }
  const RationalPoly x = RationalPoly::monomial('X', 1, 1);
  while (static_cast<int>(t_.size()) <= n) {
    const std::size_t k = t_.size();
    t_.push_back(x * t_[k - 1] - t_[k - 2]);
  }
  while (static_cast<int>(binom_.size()) <= n) {
    const std::size_t k = binom_.size();
    std::vector<Integer> row(k + 1, Integer(1));
    for (std::size_t i = 1; i < k; ++i) row[i] = binom_[k - 1][i - 1] + binom_[k - 1][i];
    binom_.push_back(std::move(row));
  }
  while (static_cast<int>(tp_.size()) <= n) {
    const std::size_t k = tp_.size();
    RationalPoly sum('X');
    for (std::size_t i = 0; i <= k; ++i) sum += t_[i] * Rational(binom_[k][i]);
    tp_.push_back(std::move(sum));
  }
}

RationalPoly ChebCache::T(int n) {
  if (n < 0) throw std::invalid_argument("Chebyshev index must be >= 0");
  std::lock_guard<std::mutex> lock(mu_);
  extend_locked(n);
  return t_[static_cast<std::size_t>(n)];
}

RationalPoly ChebCache::t_plus_one(int n) {
  if (n < 0) throw std::invalid_argument("Chebyshev index must be >= 0");
  std::lock_guard<std::mutex> lock(mu_);
  extend_locked(n);
  return tp_[static_cast<std::size_t>(n)];
}

RationalPoly cheb_T(int n) { return ChebCache::global().T(n); }

RationalPoly t_plus_one(int n) { return ChebCache::global().t_plus_one(n); }

LaurentPoly substitute(const RationalPoly& p, const LaurentPoly& x) {
  LaurentPoly out;
  if (p.is_zero()) return out;
  if (p.min_exponent() < 0) throw std::invalid_argument("substitute expects a polynomial");
  for (int e = p.max_exponent(); e >= 0; --e) {
    out *= x;
    out += LaurentPoly(p.coeff(e));
  }
  return out;
}

RationalPoly shift_to_w(const RationalPoly& p) {
  RationalPoly out('w');
  if (p.is_zero()) return out;
  if (p.min_exponent() < 0) throw std::invalid_argument("shift_to_w expects a polynomial");
  RationalPoly x = RationalPoly::monomial('w', 1, 1);
  x -= RationalPoly('w', Rational(2));
  for (int e = p.max_exponent(); e >= 0; --e) {
    out = out * x;
    out += RationalPoly('w', p.coeff(e));
  }
  return out;
}

std::vector<Rational> a_coefficients(int N) {
  if (N < 2) throw std::invalid_argument("need N >= 2 for a_n");
  std::vector<Rational> a(static_cast<std::size_t>(N) + 1, Rational(0));
  for (int n = 2; n <= N; ++n) {
    Rational sum = 0;
    for (int k = 1; k < n; ++k) sum += Rational(1, k * (n - k));
    a[static_cast<std::size_t>(n)] = sum;
  }
  return a;
}

TruncBivariate arccosh_sq_series(int N, ArccoshVariant variant) {
  if (N < 1) throw std::invalid_argument("series order must be >= 1");
  const Grading g = Grading::kTotal;
  // 1 - c^2/4 with c = w - 2.
  TruncBivariate base(g, N);
  base.add_term(0, 1, 1);
  base.add_term(0, 2, Rational(-1, 4));
  if (variant == ArccoshVariant::kCorrected) base *= Rational(-1);

  TruncBivariate out(g, N);
  TruncBivariate power = base;
  Integer fact_i = 1;
  Integer fact_2i1 = 1;
  Integer four_i = 1;
  for (int i = 0; i < N; ++i) {
    if (i > 0) {
      fact_i *= i;
      fact_2i1 *= (2 * i) * (2 * i + 1);
      four_i *= 4;
      power = power * base;
    }
    Rational c(fact_i * fact_i, fact_2i1 * (i + 1));
    c.canonicalize();
    if (variant == ArccoshVariant::kRescaled) c *= -Rational(four_i);
    out += power * c;
  }
  return out;
}

RationalPoly log_t_squared_poly(int N) {
  const int top = 2 * N + 1;
  const std::vector<Rational> a = a_coefficients(top);
  RationalPoly sum('X');
  for (int n = 2; n <= top; ++n) sum += t_plus_one(n) * a[static_cast<std::size_t>(n)];
  return sum;
}

TruncBivariate log_t_squared(int N) {
  if (N < 1) throw std::invalid_argument("series order must be >= 1");
  const RationalPoly in_w = shift_to_w(log_t_squared_poly(N));
  TruncBivariate out(Grading::kTotal, N);
  for (int j = 0; !in_w.is_zero() && j <= in_w.max_exponent(); ++j) out.add_term(0, j, in_w.coeff(j));
  return out;
}

TruncBivariate twist_prefactor(Grading grading, int cap) {
  const LaurentPoly num = LaurentPoly::A(-1) - LaurentPoly::A(1);
  const TruncBivariate den = log_minus_a(grading, cap + 1) * Rational(8);
  return series_divide(expand_laurent(num, grading, cap + 1), den);
}

TwistElement xc_truncated(int N) {
  if (N < 2) throw std::invalid_argument("twist element needs order >= 2");
  return TwistElement{N, twist_prefactor(Grading::kTotal, N) * log_t_squared(N)};
}

}  // namespace skein
