#include <gtest/gtest.h>

#include <set>

#include "isonemal/design.hpp"
#include "isonemal/enumeration.hpp"
#include "isonemal/isometry.hpp"

namespace {

using namespace isonemal;

Design plain() { return Design::from_rows({"10", "01"}); }

Design twill_1_2() { return Design::from_rows({"001", "010", "100"}); }

Design lopsided() { return Design::from_rows({"1100", "0101", "0010", "1000"}); }

TEST(Design, RowsAreTopFirst) {
  const Design d = Design::from_rows({"10", "00"});
  EXPECT_TRUE(d.dark(0, 1));
  EXPECT_FALSE(d.dark(0, 0));
  EXPECT_TRUE(d.dark(2, 3));
  EXPECT_TRUE(d.dark(-2, -1));
}

TEST(Design, RejectsBadInput) {
  EXPECT_THROW(Design(0), std::invalid_argument);
  EXPECT_THROW(Design::from_rows({"10", "0"}), std::invalid_argument);
  EXPECT_THROW(Design::from_rows({"12", "00"}), std::invalid_argument);
}

TEST(Serialization, RoundTrip) {
  for (const Design& d : {plain(), twill_1_2(), lopsided(), Design(5)}) {
    EXPECT_EQ(parse(serialize(d)), d);
  }
  EXPECT_EQ(serialize(plain()), "order 2\n10\n01\n");
}

TEST(Serialization, SkipsComments) {
  EXPECT_EQ(parse("# a note\norder 2\n# between\n10\n01\n"), plain());
}

TEST(Serialization, ReportsLine) {
  try {
    parse("order 2\n10\n0x\n");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 3);
  }
  EXPECT_THROW(parse(""), ParseError);
  EXPECT_THROW(parse("size 2\n10\n01\n"), ParseError);
  EXPECT_THROW(parse("order 0\n"), ParseError);
  EXPECT_THROW(parse("order 2\n10\n"), ParseError);
  EXPECT_THROW(parse("order 2\n10\n01\n11\n"), ParseError);
  EXPECT_THROW(parse("order 2\n101\n01\n"), ParseError);
}

TEST(Order, Examples) {
  EXPECT_EQ(order_of(plain()), 2);
  EXPECT_EQ(order_of(twill_1_2()), 3);
  EXPECT_EQ(order_of(tile(plain(), 3)), 2);
  EXPECT_EQ(order_of(Design(4)), 1);
  EXPECT_EQ(order_of(lopsided()), 4);
}

TEST(Genus, TwillIsGenusOne) {
  const GenusReport g = genus_of(twill_1_2());
  EXPECT_EQ(g.genus, Genus::I);
  ASSERT_TRUE(g.offset_i);
  EXPECT_FALSE(g.offset_ii);
}

TEST(Genus, PlainWeaveIsBoth) {
  const GenusReport g = genus_of(plain());
  EXPECT_EQ(g.genus, Genus::both);
  EXPECT_TRUE(g.offset_i);
  EXPECT_TRUE(g.offset_ii);
}

TEST(Transforms, ComplementAndTranslate) {
  EXPECT_EQ(complement(complement(lopsided())), lopsided());
  EXPECT_EQ(translate(translate(lopsided(), 1, 2), -1, -2), lopsided());
  EXPECT_EQ(translate(lopsided(), 4, 0), lopsided());
  EXPECT_EQ(complement(plain()), translate(plain(), 1, 0));
  EXPECT_TRUE(is_trivial(Design(3)));
  EXPECT_TRUE(is_trivial(complement(Design(3))));
  EXPECT_FALSE(is_trivial(plain()));
}

TEST(Views, EightDistinctImages) {
  std::set<std::string> seen;
  for (ViewId v : all_views()) seen.insert(serialize(view(lopsided(), v)));
  EXPECT_EQ(seen.size(), 8U);
}

TEST(Views, SixtyFourCompositions) {
  const Design d = lopsided();
  int checked = 0;
  for (ViewId a : all_views()) {
    for (ViewId b : all_views()) {
      EXPECT_EQ(view(view(d, a), b), view(d, compose(a, b))) << to_string(a) << " then " << to_string(b);
      ++checked;
    }
  }
  EXPECT_EQ(checked, 64);
}

TEST(Views, MatchViewOps) {
  for (const Design& d : {lopsided(), twill_1_2(), tile(lopsided(), 2)}) {
    for (ViewId v : all_views()) {
      EXPECT_EQ(view(d, v), transform(d, view_op(v, d.size()))) << to_string(v);
    }
  }
}

TEST(Views, ReverseIsComplementUpToRotation) {
  const ViewId reverse{Side::reverse, Compass::south};
  EXPECT_EQ(view(lopsided(), reverse), complement(lopsided()));
}

}  // namespace
