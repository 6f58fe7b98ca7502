#pragma once

#include <mutex>
#include <vector>

#include "skein/laurent.hpp"
#include "skein/trunc_series.hpp"
#include "skein/uni_poly.hpp"

namespace skein {

/// Memoized T_n and (T+1)_n in X. Thread safe; entries are returned by value.
class ChebCache {
 public:
  static ChebCache& global();

  RationalPoly T(int n);
  RationalPoly t_plus_one(int n);

 private:
  void extend_locked(int n);

  std::mutex mu_;
  std::vector<RationalPoly> t_;
  std::vector<RationalPoly> tp_;
  std::vector<std::vector<Integer>> binom_;
};

/// T_0 = 2, T_1 = X, T_{n+1} = X T_n - T_{n-1}. Throws on n < 0.
RationalPoly cheb_T(int n);

/// (T+1)_n = sum_i binom(n, i) T_i. Throws on n < 0.
RationalPoly t_plus_one(int n);

/// p(x) for a polynomial p and a Laurent polynomial x.
LaurentPoly substitute(const RationalPoly& p, const LaurentPoly& x);

/// The same polynomial in the shifted variable w = X + 2.
RationalPoly shift_to_w(const RationalPoly& p);

/// a_0 .. a_N of (log(-x))^2 = sum a_n (x + 1)^n (a_0 = a_1 = 0). Throws on N < 2.
std::vector<Rational> a_coefficients(int N);

enum class ArccoshVariant {
  kLiteral,    // sum i!^2 / ((i+1)(2i+1)!) (1 - c^2/4)^{i+1}
  kCorrected,  // same with (c^2/4 - 1)^{i+1}
  kRescaled,   // -sum 4^i i!^2 / ((i+1)(2i+1)!) (1 - c^2/4)^{i+1}
};

/// The series above in w = c + 2, truncated below w^N (total grading, no u).
TruncBivariate arccosh_sq_series(int N, ArccoshVariant variant);

/// sum_{n=2}^{2N+1} a_n (T+1)_n as a series in w below w^N.
TruncBivariate log_t_squared(int N);

/// The same sum as an exact polynomial in X.
RationalPoly log_t_squared_poly(int N);

/// (-A + A^{-1}) / (8 log(-A)) in u, truncated below grade cap.
TruncBivariate twist_prefactor(Grading grading, int cap);

struct TwistElement {
  int order;
  TruncBivariate series;  // in (u, w), total grading
};

/// The twist element truncated at order N >= 2.
TwistElement xc_truncated(int N);

}  // namespace skein
