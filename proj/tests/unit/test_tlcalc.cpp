#include <gtest/gtest.h>

#include "random_words.hpp"
#include "skein/tlcalc.hpp"

namespace skein {
namespace {

const LaurentPoly kA = LaurentPoly::A(1);
const LaurentPoly kAinv = LaurentPoly::A(-1);

TEST(Bracket, Basics) {
  EXPECT_EQ(bracket(parse_word("disk 0 0")), LaurentPoly(1));
  EXPECT_EQ(bracket(parse_word("disk 0 0; cup 1; cap 1")), loop_value());
  const LaurentPoly hopf = loop_value() * (LaurentPoly(-1) * LaurentPoly::A(4) - LaurentPoly::A(-4));
  EXPECT_EQ(bracket(testing::load_data("hopf.skn")), hopf);
  EXPECT_EQ(bracket(testing::load_data("hopf_negative.skn")), hopf.bar());
  EXPECT_EQ(bracket(testing::load_data("trefoil_mirror.skn")), bracket(testing::load_data("trefoil.skn")).bar());
  EXPECT_THROW(bracket(parse_word("disk 1 1")), std::invalid_argument);
}

TEST(Bracket, NestedTwistIsFramedUnlink) {
  const LaurentPoly d = loop_value();
  const LaurentPoly b = bracket(testing::load_data("nested_twist.skn"));
  EXPECT_TRUE(b == LaurentPoly::A(6) * d * d || b == LaurentPoly::A(-6) * d * d) << b.to_string();
}

TEST(ReduceDisk, TemperleyLiebRelations) {
  const TLElement e1 = tl_generator(3, 1);
  const TLElement e2 = tl_generator(3, 2);
  EXPECT_EQ(glue(e1, e1), e1 * loop_value());
  EXPECT_EQ(glue(glue(e1, e2), e1), e1);
  EXPECT_EQ(glue(glue(e2, e1), e2), e2);
  EXPECT_THROW(tl_generator(3, 3), std::invalid_argument);
}

TEST(ReduceDisk, ReidemeisterTwoAndThree) {
  EXPECT_EQ(reduce_disk(parse_word("disk 2 2; over 1; under 1")), TLElement::identity(2));
  EXPECT_EQ(reduce_disk(parse_word("disk 2 2; under 1; over 1")), TLElement::identity(2));
  EXPECT_EQ(reduce_disk(parse_word("disk 3 3; over 1; over 2; over 1")),
            reduce_disk(parse_word("disk 3 3; over 2; over 1; over 2")));
  EXPECT_EQ(reduce_disk(parse_word("disk 3 3; under 1; under 2; under 1")),
            reduce_disk(parse_word("disk 3 3; under 2; under 1; under 2")));
  EXPECT_THROW(reduce_disk(parse_word("annulus 1 1; rot +1")), std::invalid_argument);
}

TEST(StarBracket, Examples) {
  const MorseWord unknot = parse_word("disk 0 0; cup 1; cap 1");
  const LaurentPoly d = loop_value();
  EXPECT_EQ(star_bracket(unknot, {0}), LaurentPoly(2) + d);
  const LaurentPoly diff = kA - kAinv;
  EXPECT_EQ(star_bracket(unknot, {0}), LaurentPoly(-1) * diff * diff);
  const MorseWord unlink2 = testing::load_data("unlink2.skn");
  EXPECT_EQ(star_bracket(unlink2, {0}), d * (LaurentPoly(2) + d));
  EXPECT_EQ(star_bracket(unlink2, {}), bracket(unlink2));
}

}  // namespace
}  // namespace skein
