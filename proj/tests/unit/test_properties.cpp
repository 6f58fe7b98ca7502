#include <gtest/gtest.h>

#include "properties.hpp"

namespace skein::testing {
namespace {

TEST(Properties, Reidemeister) {
  Rng rng(kDefaultSeed + 20);
  const auto r = check_reidemeister(rng, 80);
  EXPECT_TRUE(r.ok()) << r.witness;
}

TEST(Properties, EpsilonOfBracket) {
  Rng rng(kDefaultSeed + 21);
  const auto r = check_epsilon_bracket(rng, 100, 10);
  EXPECT_TRUE(r.ok()) << r.witness;
}

TEST(Properties, CrossingChange) {
  Rng rng(kDefaultSeed + 22);
  const auto r = check_crossing_change(rng, 60);
  EXPECT_TRUE(r.ok()) << r.witness;
}

TEST(Properties, CommutatorDivisibility) {
  Rng rng(kDefaultSeed + 23);
  const auto r = check_commutator_divisibility(rng, 60);
  EXPECT_TRUE(r.ok()) << r.witness;
}

TEST(Properties, Superadditivity) {
  Rng rng(kDefaultSeed + 24);
  const auto r = check_superadditivity(rng, 60);
  EXPECT_TRUE(r.ok()) << r.witness;
}

TEST(Properties, SigmaBound) {
  Rng rng(kDefaultSeed + 25);
  const auto r = check_sigma_bound(rng, 60);
  EXPECT_TRUE(r.ok()) << r.witness;
}

TEST(Properties, TwistPreservesValuation) {
  Rng rng(kDefaultSeed + 26);
  const auto r = check_twist_preserves_valuation(rng, 60);
  EXPECT_TRUE(r.ok()) << r.witness;
}

TEST(Properties, Deterministic) {
  Rng a(kDefaultSeed);
  Rng b(kDefaultSeed);
  for (int i = 0; i < 20; ++i) EXPECT_EQ(random_closed_disk(a, 6), random_closed_disk(b, 6));
}

}  // namespace
}  // namespace skein::testing
