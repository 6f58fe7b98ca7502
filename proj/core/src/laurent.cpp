#include "skein/laurent.hpp"

#include <sstream>
#include <stdexcept>
#include <vector>

namespace skein {

Rational make_rational(long num, long den) {
  if (den == 0) throw std::invalid_argument("zero denominator");
  Rational r(num, den);
  r.canonicalize();
  return r;
}

std::string to_string(const Rational& value) { return value.get_str(); }

Rational parse_rational(std::string_view text) {
  Rational r;
  if (r.set_str(std::string(text), 10) != 0 || r.get_den() == 0) {
    throw std::invalid_argument("malformed rational: " + std::string(text));
  }
  r.canonicalize();
  return r;
}

LaurentPoly::LaurentPoly(const Rational& constant) { add_term(0, constant); }

LaurentPoly LaurentPoly::monomial(const Rational& coeff, int exponent) {
  LaurentPoly p;
  p.add_term(exponent, coeff);
  return p;
}

void LaurentPoly::add_term(int exponent, const Rational& coeff) {
  if (sgn(coeff) == 0) return;
  auto [it, inserted] = terms_.try_emplace(exponent, coeff);
  if (!inserted) {
    it->second += coeff;
    if (sgn(it->second) == 0) terms_.erase(it);
  }
}

Rational LaurentPoly::coeff(int exponent) const {
  auto it = terms_.find(exponent);
  return it == terms_.end() ? Rational(0) : it->second;
}

int LaurentPoly::min_degree() const { return terms_.empty() ? 0 : terms_.begin()->first; }
int LaurentPoly::max_degree() const { return terms_.empty() ? 0 : terms_.rbegin()->first; }

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& other) {
  for (const auto& [e, c] : other.terms_) add_term(e, c);
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& other) {
  for (const auto& [e, c] : other.terms_) add_term(e, -c);
  return *this;
}

LaurentPoly& LaurentPoly::operator*=(const LaurentPoly& other) {
  *this = *this * other;
  return *this;
}

LaurentPoly& LaurentPoly::operator*=(const Rational& scalar) {
  if (sgn(scalar) == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, c] : terms_) c *= scalar;
  return *this;
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly out = *this;
  for (auto& [e, c] : out.terms_) c = -c;
  return out;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
  LaurentPoly out;
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) out.add_term(ea + eb, ca * cb);
  }
  return out;
}

LaurentPoly LaurentPoly::pow(unsigned exponent) const {
  LaurentPoly result(1);
  LaurentPoly base = *this;
  while (exponent > 0) {
    if (exponent & 1U) result *= base;
    exponent >>= 1U;
    if (exponent > 0) base = base * base;
  }
  return result;
}

LaurentPoly LaurentPoly::bar() const {
  LaurentPoly out;
  for (const auto& [e, c] : terms_) out.terms_.emplace(-e, c);
  return out;
}

LaurentPoly LaurentPoly::shifted(int shift) const {
  LaurentPoly out;
  for (const auto& [e, c] : terms_) out.terms_.emplace(e + shift, c);
  return out;
}

Rational LaurentPoly::evaluate(const Rational& a) const {
  if (sgn(a) == 0 && !terms_.empty() && terms_.begin()->first < 0) {
    throw std::domain_error("negative power evaluated at A = 0");
  }
  Rational acc = 0;
  for (const auto& [e, c] : terms_) {
    Rational p = 1;
    const unsigned n = static_cast<unsigned>(e < 0 ? -e : e);
    for (unsigned i = 0; i < n; ++i) p *= a;
    acc += e < 0 ? Rational(c / p) : Rational(c * p);
  }
  return acc;
}

std::optional<LaurentPoly> LaurentPoly::exact_divide(const LaurentPoly& divisor) const {
  if (divisor.is_zero()) throw std::invalid_argument("division by zero Laurent polynomial");
  if (is_zero()) return LaurentPoly();
  // Both sides become ordinary polynomials with nonzero constant term; A is a
  // unit, so divisibility in Q[A, A^{-1}] is divisibility in Q[A].
  const int fmin = min_degree();
  const int dmin = divisor.min_degree();
  std::vector<Rational> rem(static_cast<std::size_t>(max_degree() - fmin + 1));
  for (const auto& [e, c] : terms_) rem[static_cast<std::size_t>(e - fmin)] = c;
  std::vector<Rational> den(static_cast<std::size_t>(divisor.max_degree() - dmin + 1));
  for (const auto& [e, c] : divisor.terms_) den[static_cast<std::size_t>(e - dmin)] = c;
  if (den.size() > rem.size()) return std::nullopt;

  const std::size_t qlen = rem.size() - den.size() + 1;
  std::vector<Rational> quot(qlen);
  const Rational& lead = den.back();
  for (std::size_t k = qlen; k-- > 0;) {
    const Rational q = rem[k + den.size() - 1] / lead;
    quot[k] = q;
    if (sgn(q) == 0) continue;
    for (std::size_t j = 0; j < den.size(); ++j) rem[k + j] -= q * den[j];
  }
  for (const auto& r : rem) {
    if (sgn(r) != 0) return std::nullopt;
  }
  LaurentPoly out;
  for (std::size_t k = 0; k < qlen; ++k) out.add_term(static_cast<int>(k) + fmin - dmin, quot[k]);
  return out;
}

std::string LaurentPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [e, c] = *it;
    const bool negative = sgn(c) < 0;
    const Rational mag = abs(c);
    if (first) {
      if (negative) os << "-";
    } else {
      os << (negative ? " - " : " + ");
    }
    first = false;
    const bool unit = mag == 1;
    if (!unit || e == 0) os << mag.get_str();
    if (e != 0) {
      if (!unit) os << "*";
      os << "A";
      if (e != 1) os << "^" << e;
    }
  }
  return os.str();
}

LaurentPoly loop_value() { return LaurentPoly::monomial(-1, 2) + LaurentPoly::monomial(-1, -2); }

Rational laurent_eval_at_minus_one(const LaurentPoly& f) {
  Rational acc = 0;
  for (const auto& [e, c] : f.terms()) acc += (e % 2 == 0) ? c : Rational(-c);
  return acc;
}

int divisibility_order(const LaurentPoly& f, const LaurentPoly& g) {
  if (g.is_zero()) throw std::invalid_argument("divisibility_order: zero divisor");
  if (f.is_zero() || g.is_monomial()) return kInfiniteOrder;
  int k = 0;
  LaurentPoly current = f;
  while (auto q = current.exact_divide(g)) {
    current = std::move(*q);
    ++k;
  }
  return k;
}

}  // namespace skein
