#include <gtest/gtest.h>

#include "random_words.hpp"
#include "skein/diagram.hpp"
#include "skein/tlcalc.hpp"

namespace skein {
namespace {

TEST(Parse, UnknotWord) {
  const MorseWord w = parse_word("disk 0 0; cup 1; cap 1");
  EXPECT_EQ(w.ambient, Ambient::kDisk);
  ASSERT_EQ(w.slices.size(), 2u);
  EXPECT_EQ(w.slices[0], Slice::cup(1));
  EXPECT_EQ(print_word(w), "disk 0 0; cup 1; cap 1");
}

TEST(Parse, RotArc) {
  const MorseWord w = parse_word("annulus 1 1; rot +1");
  EXPECT_EQ(w.ambient, Ambient::kAnnulus);
  EXPECT_EQ(w.slices.at(0), Slice::rot(1));
}

TEST(Parse, CommentsAndWhitespace) {
  const MorseWord w = parse_word("# header\nannulus 0 0;\n  core over; # the core\n core under\n");
  EXPECT_EQ(w.slices.size(), 2u);
}

TEST(Parse, RoundTripCorpus) {
  for (const auto& name : testing::corpus_names()) {
    const MorseWord w = testing::load_data(name);
    EXPECT_EQ(parse_word(print_word(w)), w) << name;
  }
}

struct BadCase {
  const char* text;
  const char* error_class;
  int line;
};

TEST(Parse, ErrorClassesAndPositions) {
  const BadCase cases[] = {
      {"disk 0 0;\n  cup 1;\n  cap 5", "position", 3},
      {"disk 0 0; cup 1; frobnicate 2; cap 1", "syntax", 1},
      {"disk 0 0; cup 1; rot +1; cap 1", "ambient", 1},
      {"disk 0 2; cup 1; cup 1", "strand-count", 1},
      {"disk 1 0", "strand-count", 1},
      {"annulus 0 0; rot +1", "position", 1},
      {"torus 0 0", "syntax", 1},
      {"disk 0 0; cup", "syntax", 1},
      {"annulus 0 0; core sideways", "syntax", 1},
  };
  for (const auto& c : cases) {
    try {
      parse_word(c.text);
      ADD_FAILURE() << "accepted: " << c.text;
    } catch (const DiagramError& e) {
      EXPECT_EQ(e.error_class(), c.error_class) << c.text << ": " << e.what();
      EXPECT_EQ(e.line(), c.line) << c.text;
      EXPECT_GT(e.column(), 0) << c.text;
    }
  }
}

TEST(Components, Counts) {
  EXPECT_EQ(components(parse_word("disk 0 0; cup 1; cap 1")).count, 1);
  const auto hopf = components(testing::load_data("hopf.skn"));
  EXPECT_EQ(hopf.count, 2);
  EXPECT_EQ(hopf.closed_count(), 2);
  // the nested word with a doubled crossing also has two circles
  EXPECT_EQ(components(testing::load_data("nested_twist.skn")).count, 2);
  const auto arc = components(parse_word("annulus 1 1; rot +1"));
  EXPECT_EQ(arc.count, 1);
  EXPECT_FALSE(arc.closed.at(0));
  EXPECT_EQ(components(testing::load_data("hopf_chain6.skn")).count, 6);
}

TEST(DeleteComponents, HopfToUnknot) {
  const MorseWord hopf = testing::load_data("hopf.skn");
  const MorseWord one = delete_components(hopf, {1});
  EXPECT_EQ(crossing_count(one), 0);
  EXPECT_EQ(bracket(one), loop_value());
  EXPECT_EQ(delete_components(hopf, {}), hopf);
  EXPECT_EQ(bracket(delete_components(hopf, {0, 1})), LaurentPoly(1));
}

TEST(DeleteComponents, RejectsOpen) {
  const MorseWord w = parse_word("annulus 1 1; core over");
  EXPECT_THROW(delete_components(w, {0}), std::invalid_argument);
  EXPECT_NO_THROW(delete_components(w, {1}));
}

TEST(LowerCore, RemovesCoreSlices) {
  const MorseWord w = parse_word("annulus 2 2; core over; over 1; core under");
  const MorseWord low = lower_core(w);
  for (const Slice& s : low.slices) {
    EXPECT_NE(s.kind, SliceKind::kCoreOver);
    EXPECT_NE(s.kind, SliceKind::kCoreUnder);
  }
  EXPECT_EQ(crossing_count(low), 5);
}

TEST(Juxtapose, DiskOnly) {
  const MorseWord u = parse_word("disk 0 0; cup 1; cap 1");
  const MorseWord two = juxtapose(u, u);
  EXPECT_EQ(components(two).count, 2);
  EXPECT_THROW(juxtapose(parse_word("annulus 0 0; core over"), u), std::invalid_argument);
}

TEST(Random, WordsValidate) {
  testing::Rng rng(testing::kDefaultSeed);
  for (int i = 0; i < 200; ++i) {
    testing::WordShape shape;
    shape.ambient = i % 2 ? Ambient::kAnnulus : Ambient::kDisk;
    shape.bottom = i % 3;
    shape.top = (i % 3) + 2 * (i % 2);
    const MorseWord w = testing::random_word(rng, shape);
    EXPECT_NO_THROW(validate(w));
    EXPECT_EQ(parse_word(print_word(w)), w);
  }
}

}  // namespace
}  // namespace skein
