// One PASS/FAIL line per acceptance criterion. Tolerances and time limits are
// pinned below. Exit status: nonzero on any unexpected failure; with --strict,
// nonzero on any failure at all.

#include <chrono>
#include <cstring>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "properties.hpp"
#include "random_words.hpp"
#include "skein/atlcalc.hpp"
#include "skein/chebseries.hpp"
#include "skein/dehnverify.hpp"
#include "skein/filtration.hpp"
#include "skein/tlcalc.hpp"
#include "state_sum.hpp"

namespace {

using namespace skein;
using testing::Rng;

struct Outcome {
  bool pass = true;
  std::string detail;
  void require(bool ok, const std::string& what) {
    if (!ok && pass) detail = what;
    pass = pass && ok;
  }
};

struct Criterion {
  int id;
  const char* name;
  double limit_s;
  bool known_failure;  // documented as unattainable as stated
  std::function<Outcome()> body;
};

// ---- 1
Outcome chebyshev_identities() {
  Outcome o;
  const LaurentPoly q = LaurentPoly::A(1);
  const LaurentPoly qi = LaurentPoly::A(-1);
  const LaurentPoly c = q + qi;
  for (int n = 0; n <= 30; ++n) {
    o.require(substitute(cheb_T(n), c) == LaurentPoly::A(n) + LaurentPoly::A(-n), "T_" + std::to_string(n));
    o.require(substitute(t_plus_one(n), c) == (q + LaurentPoly(1)).pow(n) + (qi + LaurentPoly(1)).pow(n),
              "(T+1)_" + std::to_string(n));
  }
  o.detail = o.pass ? "n <= 30 exact" : o.detail;
  return o;
}

// ---- 2: synthetic division by X + 2, n times, then integrality
bool divisible_by_x_plus_2(RationalPoly p, int n) {
  for (int k = 0; k < n; ++k) {
    if (p.is_zero()) return true;
    const int deg = p.max_exponent();
    // Horner: p = (X + 2) q + r
    Rational acc = 0;
    std::vector<Rational> coeffs(static_cast<std::size_t>(deg + 1));
    for (int e = deg; e >= 0; --e) {
      acc = p.coeff(e) - 2 * acc;
      coeffs[static_cast<std::size_t>(e)] = acc;
    }
    if (coeffs[0] != 0) return false;
    RationalPoly next('X');
    for (int e = 1; e <= deg; ++e) next.set(e - 1, coeffs[static_cast<std::size_t>(e)]);
    p = next;
  }
  for (int e = p.min_exponent(); !p.is_zero() && e <= p.max_exponent(); ++e) {
    if (!is_integer(p.coeff(e))) return false;
  }
  return true;
}

Outcome chebyshev_divisibility() {
  Outcome o;
  for (int n = 1; n <= 15; ++n) {
    o.require(divisible_by_x_plus_2(t_plus_one(2 * n), n), "(T+1)_" + std::to_string(2 * n));
    o.require(divisible_by_x_plus_2(t_plus_one(2 * n + 1), n), "(T+1)_" + std::to_string(2 * n + 1));
  }
  if (o.pass) o.detail = "(X+2)^n | (T+1)_{2n}, (T+1)_{2n+1}, n <= 15, integer quotients";
  return o;
}

// ---- 3
std::string first_mismatch(const TruncBivariate& a, const TruncBivariate& b) {
  for (int j = 0; j < a.cap(); ++j) {
    if (a.coeff(0, j) != b.coeff(0, j)) {
      return "w^" + std::to_string(j) + ": " + to_string(a.coeff(0, j)) + " vs " + to_string(b.coeff(0, j));
    }
  }
  return {};
}

Outcome series_anchor() {
  Outcome o;
  const int order = 12;
  const TruncBivariate lhs = log_t_squared(order);  // sum_{n=2}^{25} a_n (T+1)_n
  const TruncBivariate corrected = arccosh_sq_series(order, ArccoshVariant::kCorrected) * Rational(2);
  const TruncBivariate literal = arccosh_sq_series(order, ArccoshVariant::kLiteral) * Rational(2);
  const TruncBivariate rescaled = arccosh_sq_series(order, ArccoshVariant::kRescaled) * Rational(2);
  o.require(lhs == corrected, "sum != 2*corrected at " + first_mismatch(lhs, corrected));
  o.require(literal * Rational(-1) == corrected, "literal != -corrected at " +
                                                     first_mismatch(literal * Rational(-1), corrected));
  if (!o.pass) {
    o.detail += (lhs == rescaled) ? "; sum == 2*rescaled to order 12" : "; rescaled also differs";
  }
  return o;
}

// ---- 4
Outcome resolver_soundness() {
  Outcome o;
  Rng rng(testing::kDefaultSeed + 100);
  const auto reid = testing::check_reidemeister(rng, 150);
  o.require(reid.ok(), "Reidemeister: " + reid.witness);
  const Element pos = reduce_disk(parse_word("disk 1 1; cup 2; over 1; cap 2"));
  const Element neg = reduce_disk(parse_word("disk 1 1; cup 2; under 1; cap 2"));
  o.require(pos == TLElement::identity(1) * (LaurentPoly(-1) * LaurentPoly::A(3)), "RI positive");
  o.require(neg == TLElement::identity(1) * (LaurentPoly(-1) * LaurentPoly::A(-3)), "RI negative");
  o.require(bracket(parse_word("disk 0 0; cup 1; cap 1")) == LaurentPoly(-1) * LaurentPoly::A(2) - LaurentPoly::A(-2),
            "unknot");
  const auto eps = testing::check_epsilon_bracket(rng, 200, 10);
  o.require(eps.ok(), "epsilon: " + eps.witness);
  int corpus = 0;
  for (const auto& name : testing::corpus_names()) {
    const MorseWord w = testing::load_data(name);
    if (w.bottom != 0 || w.top != 0 || oracle::state_count(w) > (1LL << 12)) continue;
    if (w.ambient == Ambient::kDisk) {
      o.require(bracket(w) == oracle::state_sum_bracket(w), "oracle: " + name);
    } else {
      o.require(closed_to_poly(reduce_annulus(w)) == oracle::state_sum_annulus(w), "oracle: " + name);
    }
    ++corpus;
  }
  std::ostringstream os;
  os << reid.cases << " Reidemeister contexts, " << eps.cases << " random words, " << corpus
     << " corpus words against the state-sum oracle";
  if (o.pass) o.detail = os.str();
  return o;
}

// ---- 5
Outcome crossing_change_and_commutators() {
  Outcome o;
  Rng rng(testing::kDefaultSeed + 200);
  const auto cc = testing::check_crossing_change(rng, 120);
  o.require(cc.ok(), "crossing change: " + cc.witness);
  const auto cm = testing::check_commutator_divisibility(rng, 120);
  o.require(cm.ok(), "commutator: " + cm.witness);
  if (o.pass) o.detail = std::to_string(cc.cases) + " crossing-change contexts, " + std::to_string(cm.cases) + " commutators";
  return o;
}

// ---- 6
Outcome calibration() {
  Outcome o;
  try {
    const ConventionProfile p = calibrate();
    int passing = 0;
    for (const auto& t : p.transcript) passing += t.passed();
    o.require(passing == 1 && p.transcript.size() == 4, "profiles passing: " + std::to_string(passing));
    if (o.pass) o.detail = "unique profile " + describe(p.conventions);
  } catch (const std::exception& e) {
    o.require(false, e.what());
  }
  return o;
}

// ---- 7
Outcome main_theorem_one_strand() {
  Outcome o;
  std::ostringstream os;
  for (int N = 1; N <= 6; ++N) {
    const VerificationReport r = verify_main(1, N);
    o.require(r.pass && r.difference_valuation >= N, "N=" + std::to_string(N) + ": " + r.difference);
    os << "N=" << N << " " << static_cast<long>(r.runtime_ms) << "ms ";
  }
  if (o.pass) o.detail = os.str();
  return o;
}

// ---- 8
Outcome main_theorem_reduction() {
  Outcome o;
  std::ostringstream os;
  for (const auto& [m, N] : {std::pair{2, 3}, std::pair{3, 3}}) {
    const VerificationReport r = verify_main(m, N);
    for (const auto& s : r.steps) o.require(s.passed, "m=" + std::to_string(m) + ": " + s.name);
    o.require(r.pass, "m=" + std::to_string(m) + " composite verdict");
    os << "m=" << m << " N=" << N << " (" << r.steps.size() << " steps) ";
  }
  if (o.pass) o.detail = os.str();
  return o;
}

// ---- 9
Outcome lemma_quadratic_filtration() {
  Outcome o;
  for (int n = 1; n <= 4; ++n) {
    const VerificationReport r = verify_lemma421(1, n);
    o.require(r.pass, "m=1 n=" + std::to_string(n));
  }
  for (int n = 1; n <= 2; ++n) {
    const VerificationReport r = verify_lemma421(2, n);
    o.require(r.pass, "m=2 certificate n=" + std::to_string(n));
  }
  if (o.pass) o.detail = "m=1 n<=4 with sharpness witnesses; m=2 certificates n<=2";
  return o;
}

// ---- 10
Outcome finite_type_suite() {
  Outcome o;
  const LaurentPoly u = LaurentPoly::A(1) + LaurentPoly(1);
  // star product identity
  const std::vector<std::string> knots = {"unknot.skn", "trefoil.skn", "kink_positive.skn", "torus_2_5.skn"};
  const std::vector<std::string> rests = {"unknot.skn", "hopf.skn", "unlink2.skn", "disk_empty"};
  int products = 0;
  for (std::size_t a = 0; a < knots.size(); ++a) {
    for (std::size_t b = 0; b < knots.size(); ++b) {
      for (const auto& rest : rests) {
        const MorseWord k1 = testing::load_data(knots[a]);
        const MorseWord k2 = testing::load_data(knots[b]);
        const MorseWord t = rest == "disk_empty" ? parse_word("disk 0 0") : testing::load_data(rest);
        const MorseWord w = juxtapose(k1, juxtapose(k2, t));
        LaurentPoly sum;
        for (const auto& term : star_element(w, {0, 1})) sum += bracket(term.word) * Rational(term.weight);
        o.require(sum == (bracket(k1) + LaurentPoly(2)) * (bracket(k2) + LaurentPoly(2)) * bracket(t),
                  "star product " + knots[a] + " " + knots[b] + " " + rest);
        ++products;
      }
    }
  }
  // (A+1)^m divisibility of marked brackets, every marking of size <= 3
  const std::vector<std::string> corpus = {"unknot.skn",      "unlink2.skn",     "unlink3.skn",
                                           "unlink4.skn",     "hopf.skn",        "hopf_negative.skn",
                                           "hopf_chain3.skn", "hopf_chain4.skn", "twisted_chain3.skn",
                                           "hopf_split_unknot.skn"};
  int markings = 0;
  for (const auto& name : corpus) {
    const MorseWord w = testing::load_data(name);
    const int c = components(w).count;
    for (unsigned mask = 0; mask < (1U << c); ++mask) {
      std::set<int> marked;
      for (int i = 0; i < c; ++i) {
        if (mask & (1U << i)) marked.insert(i);
      }
      if (marked.size() > 3) continue;
      const int m = static_cast<int>(marked.size());
      o.require(divisibility_order(star_bracket(w, marked), u) >= m, "star bracket " + name);
      ++markings;
    }
  }
  // alternating sublink sums, |L| > n, n <= 5
  const std::vector<std::string> links = {"unlink2.skn", "unlink3.skn", "unlink4.skn", "unlink6.skn",
                                          "hopf_chain3.skn", "hopf_chain4.skn", "hopf_chain6.skn",
                                          "twisted_chain3.skn", "hopf_split_unknot.skn", "mixed_plat.skn"};
  int sums = 0;
  for (const auto& name : links) {
    const MorseWord w = testing::load_data(name);
    const int c = components(w).count;
    for (int n = 0; n < c && n <= 5; ++n) {
      const FiniteTypeResult r = finite_type_sum(w, n);
      o.require(r.divisible, "finite type " + name + " n=" + std::to_string(n));
      ++sums;
    }
  }
  if (o.pass) {
    o.detail = std::to_string(products) + " star products, " + std::to_string(markings) + " markings, " +
               std::to_string(sums) + " alternating sums";
  }
  return o;
}

// ---- 11
Outcome filtration_laws() {
  Outcome o;
  Rng rng(testing::kDefaultSeed + 300);
  const auto sa = testing::check_superadditivity(rng, 120);
  o.require(sa.ok(), "superadditivity: " + sa.witness);
  const auto sb = testing::check_sigma_bound(rng, 120);
  o.require(sb.ok(), "sigma bound: " + sb.witness);
  const auto tw = testing::check_twist_preserves_valuation(rng, 120);
  o.require(tw.ok(), "twist: " + tw.witness);
  if (o.pass) {
    o.detail = std::to_string(sa.cases) + " products, " + std::to_string(sb.cases) + " sigma actions, " +
               std::to_string(tw.cases) + " twists";
  }
  return o;
}

}  // namespace

int main(int argc, char** argv) {
  const bool strict = argc > 1 && std::strcmp(argv[1], "--strict") == 0;
  const std::vector<Criterion> criteria = {
      {1, "chebyshev-identities", 1.0, false, chebyshev_identities},
      {2, "chebyshev-divisibility", 1.0, false, chebyshev_divisibility},
      {3, "arccosh-series-anchor", 1.0, true, series_anchor},
      {4, "resolver-soundness", 60.0, false, resolver_soundness},
      {5, "crossing-change-and-commutators", 60.0, false, crossing_change_and_commutators},
      {6, "convention-calibration", 1.0, false, calibration},
      {7, "twist-formula-one-strand", 300.0, false, main_theorem_one_strand},
      {8, "twist-formula-reduction", 300.0, false, main_theorem_reduction},
      {9, "twist-power-filtration", 300.0, false, lemma_quadratic_filtration},
      {10, "finite-type-suite", 300.0, false, finite_type_suite},
      {11, "filtration-laws", 60.0, false, filtration_laws},
  };
  int failed = 0;
  int unexpected = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.body();
    } catch (const std::exception& e) {
      o.pass = false;
      o.detail = std::string("exception: ") + e.what();
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (secs > c.limit_s) {
      o.pass = false;
      std::ostringstream os;
      os << "time " << secs << "s over limit " << c.limit_s << "s; " << o.detail;
      o.detail = os.str();
    }
    std::cout << (o.pass ? "PASS" : "FAIL") << "  " << c.id << "  " << c.name << "  [" << secs << "s / "
              << c.limit_s << "s]  " << o.detail;
    if (!o.pass && c.known_failure) std::cout << "  (known failure)";
    std::cout << std::endl;
    if (!o.pass) {
      ++failed;
      if (!c.known_failure) ++unexpected;
    }
  }
  std::cout << (criteria.size() - static_cast<std::size_t>(failed)) << "/" << criteria.size() << " criteria pass"
            << std::endl;
  if (strict) return failed == 0 ? 0 : 1;
  return unexpected == 0 ? 0 : 1;
}
