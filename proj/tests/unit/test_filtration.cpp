#include <gtest/gtest.h>

#include "random_words.hpp"
#include "skein/filtration.hpp"
#include "skein/tlcalc.hpp"

namespace skein {
namespace {

const LaurentPoly kA = LaurentPoly::A(1);
const LaurentPoly kAinv = LaurentPoly::A(-1);
const LaurentPoly kU = kA + LaurentPoly(1);

LaurentCoeffPoly lp(std::initializer_list<std::pair<LaurentPoly, int>> terms) {
  LaurentCoeffPoly p('l');
  for (const auto& [c, k] : terms) p.add(k, c);
  return p;
}

StrandElement rp(std::initializer_list<std::pair<LaurentPoly, int>> terms) {
  StrandElement p('r');
  for (const auto& [c, k] : terms) p.add(k, c);
  return p;
}

TEST(Epsilon, Examples) {
  EXPECT_EQ(epsilon(lp({{LaurentPoly(1), 1}})), Rational(-2));
  EXPECT_EQ(epsilon(lp({{LaurentPoly(1), 2}})), Rational(4));
  EXPECT_EQ(epsilon(lp({{kA, 1}, {LaurentPoly(1), 0}})), Rational(3));
  EXPECT_EQ(epsilon(closed_from_poly(lp({{LaurentPoly(1), 1}}))), Rational(-2));
}

TEST(ValuationAlgebra, Examples) {
  const LaurentCoeffPoly w = lp({{LaurentPoly(1), 1}, {LaurentPoly(2), 0}});
  EXPECT_EQ(valuation_algebra(w, 6).valuation, 1);
  EXPECT_EQ(valuation_algebra(w * kU, 6).valuation, 2);
  EXPECT_EQ(valuation_algebra(lp({{kA - kAinv, 0}}), 6).valuation, 1);
  const auto zero = valuation_algebra(LaurentCoeffPoly('l'), 5);
  EXPECT_TRUE(zero.saturated);
  EXPECT_EQ(zero.valuation, 5);
  EXPECT_EQ(valuation_algebra(w * w * w, 3).valuation, 3);
  EXPECT_TRUE(valuation_algebra(w * w * w, 3).saturated);
}

TEST(ValuationStrand, Examples) {
  const StrandElement r_minus_1 = rp({{LaurentPoly(1), 1}, {LaurentPoly(-1), 0}});
  EXPECT_EQ(valuation_strand(r_minus_1 * r_minus_1, 5).valuation, 1);
  EXPECT_EQ(valuation_strand(r_minus_1, 5).valuation, 0);
  EXPECT_EQ(valuation_strand(rp({{kU, 5}}), 5).valuation, 1);
  EXPECT_THROW(valuation_strand(r_minus_1, 0), std::invalid_argument);
}

TEST(Valuation, HausdorffDeskAnalogue) {
  // a nonzero element stops below the cap once the cap exceeds its degree
  const LaurentCoeffPoly x = lp({{kU.pow(3), 2}, {kA, 0}}) - lp({{kA, 0}});
  const auto r = valuation_algebra(x, 12);
  EXPECT_FALSE(r.saturated);
  EXPECT_LT(r.valuation, 12);
}

TEST(StarElement, Weights) {
  const MorseWord w = testing::load_data("hopf.skn");
  EXPECT_EQ(star_element(w, {}).size(), 1u);
  const auto one = star_element(w, {0});
  ASSERT_EQ(one.size(), 2u);
  Integer total = 0;
  for (const auto& t : one) total += t.weight;
  EXPECT_EQ(total, 3);
  const auto two = star_element(w, {0, 1});
  ASSERT_EQ(two.size(), 4u);
  std::vector<long> weights;
  for (const auto& t : two) weights.push_back(t.weight.get_si());
  std::sort(weights.begin(), weights.end());
  EXPECT_EQ(weights, (std::vector<long>{1, 2, 2, 4}));
}

TEST(StarElement, ProductIdentity) {
  const MorseWord tref = testing::load_data("trefoil.skn");
  const MorseWord unknot = testing::load_data("unknot.skn");
  const MorseWord hopf = testing::load_data("hopf.skn");
  const MorseWord w = juxtapose(tref, juxtapose(unknot, hopf));
  LaurentPoly sum;
  for (const auto& t : star_element(w, {0, 1})) sum += bracket(t.word) * Rational(t.weight);
  const LaurentPoly want = (bracket(tref) + LaurentPoly(2)) * (bracket(unknot) + LaurentPoly(2)) * bracket(hopf);
  EXPECT_EQ(sum, want);
}

TEST(FiniteType, Examples) {
  const auto unlink3 = finite_type_sum(testing::load_data("unlink3.skn"), 2);
  EXPECT_TRUE(unlink3.divisible);
  EXPECT_GE(unlink3.divisibility, 2);
  EXPECT_TRUE(finite_type_sum(testing::load_data("hopf_split_unknot.skn"), 2).divisible);
  EXPECT_TRUE(finite_type_sum(testing::load_data("trefoil.skn"), 0).divisible);
  EXPECT_THROW(finite_type_sum(testing::load_data("hopf.skn"), 2), std::invalid_argument);
  EXPECT_THROW(finite_type_sum(parse_word("disk 1 1"), 0), std::invalid_argument);
}

}  // namespace
}  // namespace skein
