#pragma once

#include <algorithm>
#include <cassert>
#include <sstream>
#include <string>
#include <vector>

#include "skein/laurent.hpp"
#include "skein/rational.hpp"

namespace skein {

namespace detail {
inline bool coeff_is_zero(const Rational& c) { return sgn(c) == 0; }
inline bool coeff_is_zero(const LaurentPoly& c) { return c.is_zero(); }
inline std::string coeff_to_string(const Rational& c) { return to_string(c); }
inline std::string coeff_to_string(const LaurentPoly& c) { return c.to_string(); }
}  // namespace detail

/// Dense univariate Laurent polynomial over a coefficient ring R.
/// Stores coefficients of var^low .. var^(low + size - 1); both ends trimmed.
template <class R>
class UniPoly {
 public:
  UniPoly() = default;
  explicit UniPoly(char var) : var_(var) {}
  UniPoly(char var, R constant) : var_(var) { set(0, std::move(constant)); }

  static UniPoly monomial(char var, R coeff, int exponent) {
    UniPoly p(var);
    p.set(exponent, std::move(coeff));
    return p;
  }

  char var() const { return var_; }
  bool is_zero() const { return coeffs_.empty(); }
  int min_exponent() const { return low_; }
  int max_exponent() const { return low_ + static_cast<int>(coeffs_.size()) - 1; }

  R coeff(int exponent) const {
    const int idx = exponent - low_;
    if (idx < 0 || idx >= static_cast<int>(coeffs_.size())) return R();
    return coeffs_[static_cast<std::size_t>(idx)];
  }

  void set(int exponent, R value) {
    if (coeffs_.empty()) {
      if (detail::coeff_is_zero(value)) return;
      low_ = exponent;
      coeffs_.push_back(std::move(value));
      return;
    }
    if (exponent < low_) {
      coeffs_.insert(coeffs_.begin(), static_cast<std::size_t>(low_ - exponent), R());
      low_ = exponent;
    } else if (exponent > max_exponent()) {
      coeffs_.resize(static_cast<std::size_t>(exponent - low_ + 1));
    }
    coeffs_[static_cast<std::size_t>(exponent - low_)] = std::move(value);
    trim();
  }

  void add(int exponent, const R& value) {
    if (detail::coeff_is_zero(value)) return;
    R current = coeff(exponent);
    current += value;
    set(exponent, std::move(current));
  }

  UniPoly& operator+=(const UniPoly& o) {
    for (int e = o.min_exponent(); !o.is_zero() && e <= o.max_exponent(); ++e) add(e, o.coeff(e));
    return *this;
  }
  UniPoly& operator-=(const UniPoly& o) {
    for (int e = o.min_exponent(); !o.is_zero() && e <= o.max_exponent(); ++e) {
      R neg = o.coeff(e);
      neg *= Rational(-1);
      add(e, neg);
    }
    return *this;
  }
  UniPoly& operator*=(const R& scalar) {
    if (detail::coeff_is_zero(scalar)) {
      coeffs_.clear();
      low_ = 0;
      return *this;
    }
    for (auto& c : coeffs_) c *= scalar;
    trim();
    return *this;
  }

  friend UniPoly operator+(UniPoly a, const UniPoly& b) { return a += b; }
  friend UniPoly operator-(UniPoly a, const UniPoly& b) { return a -= b; }
  friend UniPoly operator*(UniPoly a, const R& s) { return a *= s; }
  friend UniPoly operator*(const UniPoly& a, const UniPoly& b) {
    UniPoly out(a.var_);
    if (a.is_zero() || b.is_zero()) return out;
    std::vector<R> prod(a.coeffs_.size() + b.coeffs_.size() - 1);
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
      if (detail::coeff_is_zero(a.coeffs_[i])) continue;
      for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
        if (detail::coeff_is_zero(b.coeffs_[j])) continue;
        prod[i + j] += a.coeffs_[i] * b.coeffs_[j];
      }
    }
    out.low_ = a.low_ + b.low_;
    out.coeffs_ = std::move(prod);
    out.trim();
    return out;
  }
  friend bool operator==(const UniPoly& a, const UniPoly& b) {
    return a.low_ == b.low_ && a.coeffs_ == b.coeffs_;
  }

  UniPoly pow(unsigned exponent) const {
    UniPoly result(var_, R(1));
    UniPoly base = *this;
    while (exponent > 0) {
      if (exponent & 1U) result = result * base;
      exponent >>= 1U;
      if (exponent > 0) base = base * base;
    }
    return result;
  }

  std::string to_string() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int e = max_exponent(); e >= low_; --e) {
      const R c = coeff(e);
      if (detail::coeff_is_zero(c)) continue;
      if (!first) os << " + ";
      first = false;
      os << "(" << detail::coeff_to_string(c) << ")";
      if (e != 0) os << "*" << var_ << "^" << e;
    }
    return os.str();
  }

 private:
  void trim() {
    while (!coeffs_.empty() && detail::coeff_is_zero(coeffs_.back())) coeffs_.pop_back();
    std::size_t lead = 0;
    while (lead < coeffs_.size() && detail::coeff_is_zero(coeffs_[lead])) ++lead;
    if (lead > 0) {
      coeffs_.erase(coeffs_.begin(), coeffs_.begin() + static_cast<std::ptrdiff_t>(lead));
      low_ += static_cast<int>(lead);
    }
    if (coeffs_.empty()) low_ = 0;
  }

  char var_ = 'x';
  int low_ = 0;
  std::vector<R> coeffs_;
};

using RationalPoly = UniPoly<Rational>;
/// Laurent polynomial in r (or polynomial in l) with coefficients in Q[A, A^{-1}].
using LaurentCoeffPoly = UniPoly<LaurentPoly>;

}  // namespace skein
