#pragma once

#include <string>
#include <vector>

#include "skein/atlcalc.hpp"
#include "skein/planar.hpp"
#include "skein/trunc_series.hpp"

namespace skein {

struct GateResult {
  std::string name;
  bool passed = false;
  std::string detail;
};

struct ProfileTrial {
  Conventions conventions;
  std::vector<GateResult> gates;
  bool passed() const;
};

struct ConventionProfile {
  Conventions conventions;
  StrandElement wrap_left_r0;   // l r^0
  StrandElement wrap_right_r0;  // r^0 l
  std::vector<ProfileTrial> transcript;
};

/// Runs the three gates on one profile.
ProfileTrial run_gates(const Conventions& conv);

/// Tries all four profiles. Throws std::runtime_error unless exactly one passes.
ConventionProfile calibrate();

std::string describe(const Conventions& conv);

/// t acting on the one-strand module, as a multiplier in r.
StrandElement strand_twist(const Conventions& conv = {});

/// sum_{i=1}^{2N+1} (-1)^{i-1}/i (t - 1)^i v, exact.
StrandElement log_twist_exact(const StrandElement& v, int N, const Conventions& conv = {});
/// The same, expanded in (u, s) below grade N.
TruncBivariate log_twist(const StrandElement& v, int N, const Conventions& conv = {});

/// sigma(sum a_n (T+1)_n(l))(v) with n <= 2N+1, exact.
StrandElement sigma_log_t_squared(const StrandElement& v, int N, const Conventions& conv = {});
/// sigma(x_c)(v) in (u, s) below grade N.
TruncBivariate sigma_xc(const StrandElement& v, int N, const Conventions& conv = {});

/// exp(sigma(x_c)) applied to r^0, below grade N.
TruncBivariate exp_sigma_xc_r0(int N, const Conventions& conv = {});

struct VerificationStep {
  std::string name;
  bool passed = false;
  std::string witness;  // the offending element when a step fails
};

struct VerificationReport {
  std::string lemma;
  int strands = 0;
  int order = 0;
  std::string lhs;
  std::string rhs;
  std::string difference;
  int difference_valuation = 0;
  bool difference_saturated = false;
  std::vector<VerificationStep> steps;
  bool pass = false;
  double runtime_ms = 0;
};

/// The twist formula at m strands mod F^N. m = 1 compares directly; m = 2, 3
/// checks the exact reduction steps to the one-strand case.
VerificationReport verify_main(int strands, int N, const Conventions& conv = {});

/// (t - 1)^{2n+m} applied to the identity lies in F^n. m = 1 by the strand
/// valuation (plus a sharpness witness); m = 2 by an explicit certificate.
VerificationReport verify_lemma421(int strands, int n, const Conventions& conv = {});

}  // namespace skein
