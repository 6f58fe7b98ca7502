#include "skein/filtration.hpp"

#include <stdexcept>

#include "skein/tlcalc.hpp"

namespace skein {

Rational epsilon(const ATLElement& x) {
  if (x.bottom() != 0 || x.top() != 0) throw std::invalid_argument("epsilon: element is not closed");
  Rational sum = 0;
  for (const auto& [d, c] : x.terms()) {
    Rational term = laurent_eval_at_minus_one(c);
    for (int i = 0; i < d.loops; ++i) term *= -2;
    sum += term;
  }
  return sum;
}

Rational epsilon(const LaurentCoeffPoly& x) { return epsilon(closed_from_poly(x)); }

ValuationReport valuation_algebra(const LaurentCoeffPoly& x, int cap, std::string description) {
  const TruncBivariate series = expand_algebra(x, cap);
  ValuationReport r{std::move(description), series.valuation(), series.is_zero(), Grading::kTotal, cap};
  return r;
}

ValuationReport valuation_algebra(const ATLElement& x, int cap, std::string description) {
  return valuation_algebra(closed_to_poly(x), cap, std::move(description));
}

ValuationReport valuation_strand(const StrandElement& v, int cap, std::string description) {
  const TruncBivariate series = expand_strand(v, cap);
  ValuationReport r{std::move(description), series.valuation(), series.is_zero(), Grading::kStrand, cap};
  return r;
}

std::vector<WeightedWord> star_element(const MorseWord& word, const std::set<int>& marked) {
  const std::vector<int> list(marked.begin(), marked.end());
  const auto m = list.size();
  if (m > 20) throw std::invalid_argument("star_element: too many marked components");
  std::vector<WeightedWord> out;
  for (std::size_t mask = 0; mask < (std::size_t{1} << m); ++mask) {
    std::set<int> removed;
    unsigned dropped = 0;
    for (std::size_t i = 0; i < m; ++i) {
      if (!(mask & (std::size_t{1} << i))) {
        removed.insert(list[i]);
        ++dropped;
      }
    }
    out.push_back({delete_components(word, removed), Integer(1) << dropped});
  }
  return out;
}

FiniteTypeResult finite_type_sum(const MorseWord& word, int n, const Conventions& conv) {
  if (word.bottom != 0 || word.top != 0) throw std::invalid_argument("finite_type_sum: word is not closed");
  const ComponentMap map = components(word);
  if (map.count <= n) throw std::invalid_argument("finite_type_sum: need more than n components");
  if (map.count > 20) throw std::invalid_argument("finite_type_sum: too many components");
  const auto count = static_cast<std::size_t>(map.count);

  FiniteTypeResult res;
  res.components = map.count;
  res.order = n;
  const Rational scale(Integer(1) << static_cast<unsigned>(map.count));
  for (std::size_t mask = 0; mask < (std::size_t{1} << count); ++mask) {
    std::set<int> removed;
    int size = 0;
    for (std::size_t i = 0; i < count; ++i) {
      if (mask & (std::size_t{1} << i)) {
        ++size;
      } else {
        removed.insert(static_cast<int>(i));
      }
    }
    // (-1)^k (-2)^{-k} = 2^{-k}
    Rational weight = scale;
    for (int i = 0; i < size; ++i) weight /= -2;
    if (size % 2) weight = -weight;
    res.scaled_sum += bracket(delete_components(word, removed), conv) * weight;
  }
  res.divisibility = divisibility_order(res.scaled_sum, LaurentPoly::A(1) + LaurentPoly(1));
  res.divisible = res.divisibility >= n;
  return res;
}

}  // namespace skein
