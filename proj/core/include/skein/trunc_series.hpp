#pragma once

#include <map>
#include <string>
#include <utility>

#include "skein/laurent.hpp"
#include "skein/rational.hpp"
#include "skein/uni_poly.hpp"

namespace skein {

/// How a monomial u^i v^j is graded. kTotal: i + j (algebra, v = w = l + 2).
/// kStrand: i + floor(j / 2) (one-strand module, v = s = A r + 1).
enum class Grading { kTotal, kStrand };

int grade_of(Grading grading, int i, int j);

/// Truncated power series in (u, v) with u = A + 1. Coefficients whose grade
/// reaches the cap are never stored; the cap of a result is the minimum of
/// the operand caps.
class TruncBivariate {
 public:
  using Key = std::pair<int, int>;

  TruncBivariate(Grading grading, int cap);

  static TruncBivariate constant(Grading grading, int cap, const Rational& c);
  static TruncBivariate u(Grading grading, int cap);
  /// The second variable (w in algebra mode, s in strand mode).
  static TruncBivariate v(Grading grading, int cap);

  Grading grading() const { return grading_; }
  int cap() const { return cap_; }
  char second_name() const { return grading_ == Grading::kTotal ? 'w' : 's'; }
  const std::map<Key, Rational>& terms() const { return terms_; }
  Rational coeff(int i, int j) const;
  bool is_zero() const { return terms_.empty(); }
  bool is_unit() const;

  void add_term(int i, int j, const Rational& c);

  /// Smallest grade of a nonzero term; cap() when zero.
  int valuation() const;

  TruncBivariate with_cap(int cap) const;
  TruncBivariate inverse() const;
  TruncBivariate pow(unsigned exponent) const;

  TruncBivariate& operator+=(const TruncBivariate& o);
  TruncBivariate& operator-=(const TruncBivariate& o);
  TruncBivariate& operator*=(const Rational& s);
  friend TruncBivariate operator+(TruncBivariate a, const TruncBivariate& b) { return a += b; }
  friend TruncBivariate operator-(TruncBivariate a, const TruncBivariate& b) { return a -= b; }
  friend TruncBivariate operator*(TruncBivariate a, const Rational& s) { return a *= s; }
  friend TruncBivariate operator*(const TruncBivariate& a, const TruncBivariate& b);
  /// Same grading, same cap and same terms.
  friend bool operator==(const TruncBivariate& a, const TruncBivariate& b);

  std::string to_string() const;

 private:
  void check_compatible(const TruncBivariate& o) const;

  Grading grading_;
  int cap_;
  std::map<Key, Rational> terms_;
};

/// q with q * den == num up to the cap. When den is not a unit, the common
/// monomial factor u^a v^b is cancelled first and the cap drops accordingly.
/// Throws std::domain_error when the quotient is not defined.
TruncBivariate series_divide(const TruncBivariate& num, const TruncBivariate& den);

/// Image of a Laurent polynomial under A = -1 + u, in the requested grading.
TruncBivariate expand_laurent(const LaurentPoly& f, Grading grading, int cap);

/// f(A, r) under A = -1 + u, r = A^{-1}(s - 1); strand grading.
/// Throws std::invalid_argument when cap < 1.
TruncBivariate expand_strand(const LaurentCoeffPoly& f, int cap);

/// f(A, l) under A = -1 + u, l = w - 2; total-degree grading.
TruncBivariate expand_algebra(const LaurentCoeffPoly& f, int cap);

/// log(-A) = log(1 - u) = -sum u^k / k.
TruncBivariate log_minus_a(Grading grading, int cap);

}  // namespace skein
