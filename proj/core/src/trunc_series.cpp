#include "skein/trunc_series.hpp"

#include <algorithm>
#include <limits>
#include <sstream>
#include <stdexcept>
#include <vector>

namespace skein {

int grade_of(Grading grading, int i, int j) {
  return grading == Grading::kTotal ? i + j : i + j / 2;
}

TruncBivariate::TruncBivariate(Grading grading, int cap) : grading_(grading), cap_(cap) {
  if (cap < 0) throw std::invalid_argument("negative truncation order");
}

TruncBivariate TruncBivariate::constant(Grading grading, int cap, const Rational& c) {
  TruncBivariate out(grading, cap);
  out.add_term(0, 0, c);
  return out;
}

TruncBivariate TruncBivariate::u(Grading grading, int cap) {
  TruncBivariate out(grading, cap);
  out.add_term(1, 0, 1);
  return out;
}

TruncBivariate TruncBivariate::v(Grading grading, int cap) {
  TruncBivariate out(grading, cap);
  out.add_term(0, 1, 1);
  return out;
}

Rational TruncBivariate::coeff(int i, int j) const {
  auto it = terms_.find({i, j});
  return it == terms_.end() ? Rational(0) : it->second;
}

bool TruncBivariate::is_unit() const { return cap_ > 0 && sgn(coeff(0, 0)) != 0; }

void TruncBivariate::add_term(int i, int j, const Rational& c) {
  if (i < 0 || j < 0) throw std::invalid_argument("negative series exponent");
  if (sgn(c) == 0 || grade_of(grading_, i, j) >= cap_) return;
  auto [it, inserted] = terms_.try_emplace({i, j}, c);
  if (!inserted) {
    it->second += c;
    if (sgn(it->second) == 0) terms_.erase(it);
  }
}

int TruncBivariate::valuation() const {
  int best = cap_;
  for (const auto& [key, c] : terms_) best = std::min(best, grade_of(grading_, key.first, key.second));
  return best;
}

TruncBivariate TruncBivariate::with_cap(int cap) const {
  if (cap > cap_) throw std::invalid_argument("cannot raise truncation order");
  TruncBivariate out(grading_, cap);
  for (const auto& [key, c] : terms_) out.add_term(key.first, key.second, c);
  return out;
}

void TruncBivariate::check_compatible(const TruncBivariate& o) const {
  if (grading_ != o.grading_) throw std::invalid_argument("mixing algebra and strand gradings");
}

TruncBivariate& TruncBivariate::operator+=(const TruncBivariate& o) {
  check_compatible(o);
  if (o.cap_ < cap_) *this = with_cap(o.cap_);
  for (const auto& [key, c] : o.terms_) add_term(key.first, key.second, c);
  return *this;
}

TruncBivariate& TruncBivariate::operator-=(const TruncBivariate& o) {
  check_compatible(o);
  if (o.cap_ < cap_) *this = with_cap(o.cap_);
  for (const auto& [key, c] : o.terms_) add_term(key.first, key.second, -c);
  return *this;
}

TruncBivariate& TruncBivariate::operator*=(const Rational& s) {
  if (sgn(s) == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [key, c] : terms_) c *= s;
  return *this;
}

TruncBivariate operator*(const TruncBivariate& a, const TruncBivariate& b) {
  a.check_compatible(b);
  TruncBivariate out(a.grading_, std::min(a.cap_, b.cap_));
  for (const auto& [ka, ca] : a.terms_) {
    for (const auto& [kb, cb] : b.terms_) out.add_term(ka.first + kb.first, ka.second + kb.second, ca * cb);
  }
  return out;
}

bool operator==(const TruncBivariate& a, const TruncBivariate& b) {
  return a.grading_ == b.grading_ && a.cap_ == b.cap_ && a.terms_ == b.terms_;
}

TruncBivariate TruncBivariate::pow(unsigned exponent) const {
  TruncBivariate result = constant(grading_, cap_, 1);
  TruncBivariate base = *this;
  while (exponent > 0) {
    if (exponent & 1U) result = result * base;
    exponent >>= 1U;
    if (exponent > 0) base = base * base;
  }
  return result;
}

TruncBivariate TruncBivariate::inverse() const {
  if (!is_unit()) throw std::domain_error("series is not a unit");
  // x = c (1 + y) with y free of constant term; every monomial of y^k has
  // i + j >= k, so the geometric series terminates under either grading.
  const Rational c = coeff(0, 0);
  TruncBivariate y = *this;
  y.terms_.erase({0, 0});
  y *= Rational(-1 / c);
  TruncBivariate sum = constant(grading_, cap_, 1);
  TruncBivariate term = sum;
  while (true) {
    term = term * y;
    if (term.is_zero()) break;
    sum += term;
  }
  return sum * Rational(1 / c);
}

std::string TruncBivariate::to_string() const {
  std::ostringstream os;
  bool first = true;
  for (const auto& [key, c] : terms_) {
    if (!first) os << " + ";
    first = false;
    os << "(" << c.get_str() << ")";
    if (key.first) os << "*u^" << key.first;
    if (key.second) os << "*" << second_name() << "^" << key.second;
  }
  if (first) os << "0";
  os << " + O(grade " << cap_ << ")";
  return os.str();
}

TruncBivariate series_divide(const TruncBivariate& num, const TruncBivariate& den) {
  if (num.grading() != den.grading()) throw std::invalid_argument("mixing gradings in division");
  if (den.is_zero()) throw std::domain_error("division by zero series");
  const Grading g = num.grading();
  const int cap = std::min(num.cap(), den.cap());
  if (den.is_unit()) return num.with_cap(cap) * den.with_cap(cap).inverse();

  int a = std::numeric_limits<int>::max();
  int b = std::numeric_limits<int>::max();
  for (const auto& [key, c] : den.terms()) {
    a = std::min(a, key.first);
    b = std::min(b, key.second);
  }
  if (sgn(den.coeff(a, b)) == 0) throw std::domain_error("denominator has no cancellable monomial factor");
  const int loss = g == Grading::kTotal ? a + b : a + (b + 1) / 2;
  const int new_cap = cap - loss;
  if (new_cap < 1) throw std::domain_error("truncation order exhausted by division");

  TruncBivariate num_shift(g, new_cap);
  for (const auto& [key, c] : num.terms()) {
    if (key.first < a || key.second < b) throw std::domain_error("numerator not divisible by u^a v^b");
    num_shift.add_term(key.first - a, key.second - b, c);
  }
  TruncBivariate den_shift(g, new_cap);
  for (const auto& [key, c] : den.terms()) den_shift.add_term(key.first - a, key.second - b, c);
  return num_shift * den_shift.inverse();
}

namespace {

// Powers A^e for e in [lo, hi] as series.
class APowers {
 public:
  APowers(Grading g, int cap) : a_(TruncBivariate::u(g, cap) - TruncBivariate::constant(g, cap, 1)),
                                a_inv_(a_.inverse()), one_(TruncBivariate::constant(g, cap, 1)) {}

  const TruncBivariate& get(int e) {
    auto& cache = e >= 0 ? pos_ : neg_;
    const auto& step = e >= 0 ? a_ : a_inv_;
    const std::size_t n = static_cast<std::size_t>(e >= 0 ? e : -e);
    if (cache.empty()) cache.push_back(one_);
    while (cache.size() <= n) cache.push_back(cache.back() * step);
    return cache[n];
  }

 private:
  TruncBivariate a_, a_inv_, one_;
  std::vector<TruncBivariate> pos_, neg_;
};

TruncBivariate expand_with(const LaurentPoly& f, APowers& powers, Grading g, int cap) {
  TruncBivariate out(g, cap);
  for (const auto& [e, c] : f.terms()) out += powers.get(e) * c;
  return out;
}

}  // namespace

TruncBivariate expand_laurent(const LaurentPoly& f, Grading grading, int cap) {
  if (cap < 1) throw std::invalid_argument("truncation order must be >= 1");
  APowers powers(grading, cap);
  return expand_with(f, powers, grading, cap);
}

TruncBivariate expand_strand(const LaurentCoeffPoly& f, int cap) {
  if (cap < 1) throw std::invalid_argument("truncation order must be >= 1");
  const Grading g = Grading::kStrand;
  APowers powers(g, cap);
  const TruncBivariate one = TruncBivariate::constant(g, cap, 1);
  const TruncBivariate s_minus_one = TruncBivariate::v(g, cap) - one;
  const TruncBivariate r = powers.get(-1) * s_minus_one;
  const TruncBivariate r_inv = powers.get(1) * s_minus_one.inverse();
  TruncBivariate out(g, cap);
  if (f.is_zero()) return out;
  TruncBivariate rp = one;
  for (int e = 0; e < f.min_exponent(); ++e) rp = rp * r;
  for (int e = 0; e > f.min_exponent(); --e) rp = rp * r_inv;
  for (int e = f.min_exponent(); e <= f.max_exponent(); ++e) {
    const LaurentPoly c = f.coeff(e);
    if (!c.is_zero()) out += expand_with(c, powers, g, cap) * rp;
    rp = rp * r;
  }
  return out;
}

TruncBivariate expand_algebra(const LaurentCoeffPoly& f, int cap) {
  if (cap < 1) throw std::invalid_argument("truncation order must be >= 1");
  const Grading g = Grading::kTotal;
  if (!f.is_zero() && f.min_exponent() < 0) throw std::invalid_argument("negative power of l");
  APowers powers(g, cap);
  const TruncBivariate l = TruncBivariate::v(g, cap) - TruncBivariate::constant(g, cap, 2);
  TruncBivariate out(g, cap);
  TruncBivariate lp = TruncBivariate::constant(g, cap, 1);
  for (int e = 0; !f.is_zero() && e <= f.max_exponent(); ++e) {
    const LaurentPoly c = f.coeff(e);
    if (!c.is_zero()) out += expand_with(c, powers, g, cap) * lp;
    lp = lp * l;
  }
  return out;
}

TruncBivariate log_minus_a(Grading grading, int cap) {
  TruncBivariate out(grading, cap);
  for (int k = 1; k <= cap; ++k) out.add_term(k, 0, Rational(-1, k));
  return out;
}

}  // namespace skein
