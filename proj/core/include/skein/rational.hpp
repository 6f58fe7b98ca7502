#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace skein {

using Integer = mpz_class;
using Rational = mpq_class;

/// Builds num/den in lowest terms. Throws std::invalid_argument on den == 0.
Rational make_rational(long num, long den = 1);

/// "p/q" for non-integers, "p" for integers.
std::string to_string(const Rational& value);

/// Accepts "p", "-p" or "p/q".
Rational parse_rational(std::string_view text);

inline bool is_integer(const Rational& value) { return value.get_den() == 1; }

}  // namespace skein
