#include <gtest/gtest.h>

#include "topocheck/fixtures.hpp"
#include "topocheck/space_doc.hpp"

using namespace topocheck;

namespace {

Errc code_of(std::string_view text) {
  try {
    to_space(parse_space(text));
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no error for: " << text;
  return Errc::kInvalidArgument;
}

TEST(SpaceDocTest, ParsesFixture) {
  const SpaceDoc doc = parse_space("space E\npoints a b c\nopen a b\n");
  EXPECT_EQ(doc.name, "E");
  EXPECT_EQ(to_space(doc), fixtures::three_point());
  EXPECT_EQ(to_space(doc).labels(), fixtures::three_point().labels());
}

TEST(SpaceDocTest, NoOpensIsIndiscrete) {
  EXPECT_EQ(to_space(parse_space("space I2\npoints x y")), FiniteSpace::indiscrete(2));
}

TEST(SpaceDocTest, CommentsAndBlankLines) {
  const SpaceDoc doc = parse_space("# leading\n\nspace S   # trailing\npoints 0 1\n\topen 0\n");
  EXPECT_EQ(to_space(doc), fixtures::sierpinski());
}

TEST(SpaceDocTest, UnknownLabel) {
  try {
    parse_space("space B\npoints a\nopen a b");
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::kUnknownLabel);
    EXPECT_NE(std::string(e.what()).find("line 3, column 8"), std::string::npos) << e.what();
  }
}

TEST(SpaceDocTest, ErrorClasses) {
  EXPECT_EQ(code_of("space D\npoints a a"), Errc::kDuplicateLabel);
  EXPECT_EQ(code_of("space N\npoints a b c\nopen a\nopen b"), Errc::kNotATopology);
  EXPECT_EQ(code_of("points a"), Errc::kParseError);
  EXPECT_EQ(code_of("space X\nspace Y\npoints a"), Errc::kParseError);
  EXPECT_EQ(code_of("space X\nopen a\npoints a"), Errc::kParseError);
  EXPECT_EQ(code_of("space X\npoints"), Errc::kParseError);
  EXPECT_EQ(code_of("space X"), Errc::kParseError);
  EXPECT_EQ(code_of("space X Y\npoints a"), Errc::kParseError);
  EXPECT_EQ(code_of("space X\npoints a\nclosed a"), Errc::kParseError);
  EXPECT_EQ(code_of(std::string(kMaxDocumentBytes + 1, '#')), Errc::kSizeLimitExceeded);
}

TEST(SpaceDocTest, ParseErrorLocation) {
  try {
    parse_space("space X\n  bogus a\n");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 2);
    EXPECT_EQ(e.column(), 3);
  }
}

TEST(SpaceDocTest, RenderIsCanonical) {
  const SpaceDoc doc = parse_space("space T\npoints c b a\nopen a b\nopen b\nopen c b a\nopen\nopen b\n");
  EXPECT_EQ(render_space(doc), "space T\npoints c b a\nopen b\nopen b a\n");
  const SpaceDoc again = parse_space(render_space(doc));
  EXPECT_EQ(again, canonicalize(doc));
  EXPECT_EQ(render_space(again), render_space(doc));
}

TEST(SpaceDocTest, ToDocRoundTrip) {
  const std::array factors{fixtures::three_point(), fixtures::sierpinski()};
  const FiniteSpace p = product(factors).space;
  const SpaceDoc doc = to_doc(p, "P");
  const FiniteSpace back = to_space(parse_space(render_space(doc)));
  EXPECT_EQ(back, p);
  EXPECT_EQ(back.labels(), p.labels());
}

TEST(LabelSetTest, Parsing) {
  const FiniteSpace e = fixtures::three_point();
  EXPECT_EQ(parse_label_set(e, "b,c"), PointSet::of(3, {1, 2}));
  EXPECT_EQ(parse_label_set(e, ""), e.empty_set());
  EXPECT_THROW(parse_label_set(e, "b,d"), Error);

  const std::array factors{e, e};
  const FiniteSpace sq = product(factors).space;
  EXPECT_EQ(parse_label_set(sq, "b,c,c,a"), PointSet::of(9, {5, 6}));
  EXPECT_EQ(parse_label_set(sq, "(b,c),(c,a)"), PointSet::of(9, {5, 6}));
}

}  // namespace
