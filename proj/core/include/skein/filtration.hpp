#pragma once

#include <set>
#include <string>
#include <vector>

#include "skein/atlcalc.hpp"
#include "skein/diagram.hpp"
#include "skein/planar.hpp"
#include "skein/trunc_series.hpp"

namespace skein {

struct ValuationReport {
  std::string description;
  int valuation = 0;       // meaningful only when !saturated
  bool saturated = false;  // the element lies in F^cap (as far as the cap can see)
  Grading grading = Grading::kTotal;
  int cap = 0;

  /// valuation, or cap when saturated.
  int lower_bound() const { return saturated ? cap : valuation; }
};

/// A -> -1, l -> -2. Throws std::invalid_argument for open elements.
Rational epsilon(const ATLElement& x);
Rational epsilon(const LaurentCoeffPoly& x);

/// Largest n < cap with x in (A+1, l+2)^n, via u = A + 1, w = l + 2.
ValuationReport valuation_algebra(const LaurentCoeffPoly& x, int cap, std::string description = {});
ValuationReport valuation_algebra(const ATLElement& x, int cap, std::string description = {});

/// One-strand module valuation via u = A + 1, s = A r + 1, grade i + floor(j/2).
ValuationReport valuation_strand(const StrandElement& v, int cap, std::string description = {});

struct WeightedWord {
  MorseWord word;
  Integer weight;
};

/// The 2^m weighted sublink sum for the marked closed components.
std::vector<WeightedWord> star_element(const MorseWord& word, const std::set<int>& marked);

struct FiniteTypeResult {
  LaurentPoly scaled_sum;  // 2^{|L|} sum_{L'} (-1)^{|L'|} (-2)^{-|L'|} K(L')
  int components = 0;
  int order = 0;
  int divisibility = 0;    // exponent of (A+1) in scaled_sum (kInfiniteOrder if zero)
  bool divisible = false;  // divisibility >= order
};

/// Throws std::invalid_argument unless the word is closed with more than n components.
FiniteTypeResult finite_type_sum(const MorseWord& word, int n, const Conventions& conv = {});

}  // namespace skein
