#pragma once

#include <limits>
#include <map>
#include <optional>
#include <string>

#include "skein/rational.hpp"

namespace skein {

/// Returned by divisibility_order when every power divides (f = 0, or g a unit).
inline constexpr int kInfiniteOrder = std::numeric_limits<int>::max();

/// Laurent polynomial in A over Q. Zero coefficients are never stored.
class LaurentPoly {
 public:
  using Terms = std::map<int, Rational>;

  LaurentPoly() = default;
  LaurentPoly(const Rational& constant);  // NOLINT(google-explicit-constructor)
  LaurentPoly(long constant) : LaurentPoly(Rational(constant)) {}  // NOLINT

  static LaurentPoly monomial(const Rational& coeff, int exponent);
  /// A^exponent.
  static LaurentPoly A(int exponent = 1) { return monomial(1, exponent); }

  bool is_zero() const { return terms_.empty(); }
  bool is_monomial() const { return terms_.size() == 1; }
  const Terms& terms() const { return terms_; }
  Rational coeff(int exponent) const;
  /// Lowest / highest exponent; undefined for zero (returns 0).
  int min_degree() const;
  int max_degree() const;

  LaurentPoly& operator+=(const LaurentPoly& other);
  LaurentPoly& operator-=(const LaurentPoly& other);
  LaurentPoly& operator*=(const LaurentPoly& other);
  LaurentPoly& operator*=(const Rational& scalar);
  LaurentPoly operator-() const;

  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
  friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) { return a.terms_ == b.terms_; }

  LaurentPoly pow(unsigned exponent) const;
  /// A -> A^{-1}.
  LaurentPoly bar() const;
  /// Multiplies by A^shift.
  LaurentPoly shifted(int shift) const;
  Rational evaluate(const Rational& a) const;

  /// Exact quotient in Q[A, A^{-1}], or nullopt when divisor does not divide.
  std::optional<LaurentPoly> exact_divide(const LaurentPoly& divisor) const;

  std::string to_string() const;

 private:
  void add_term(int exponent, const Rational& coeff);
  Terms terms_;
};

/// Loop value -A^2 - A^{-2}.
LaurentPoly loop_value();

/// Sum of coeff(k) * (-1)^k.
Rational laurent_eval_at_minus_one(const LaurentPoly& f);

/// Largest k with f in g^k Q[A, A^{-1}]; kInfiniteOrder if f = 0 or g is a unit.
/// Throws std::invalid_argument when g = 0.
int divisibility_order(const LaurentPoly& f, const LaurentPoly& g);

}  // namespace skein
