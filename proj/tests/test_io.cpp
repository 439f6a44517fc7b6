#include <gtest/gtest.h>

#include "lindex/error.hpp"
#include "lindex/io.hpp"
#include "test_util.hpp"

namespace lindex {
namespace {

TEST(Io, PosetRoundTrip) {
  const Poset P = parse_poset("p=4\n# comment\n0<2\n1<2  # trailing\n\n1<3\n");
  EXPECT_EQ(P.size(), 4);
  EXPECT_EQ(P.covers().size(), 3U);
  EXPECT_EQ(parse_poset(format_poset(P)), P);
}

TEST(Io, ParseErrorsCarryLineNumbers) {
  try {
    parse_poset("p=3\n0<1\n1<x\n");
    FAIL() << "expected ParseError";
  } catch (const ParseError& e) {
    EXPECT_NE(std::string(e.what()).find("line 3"), std::string::npos) << e.what();
  }
  EXPECT_THROW(parse_poset("q=3\n"), ParseError);
  EXPECT_THROW(parse_poset("p=2\n0<5\n"), Error);
  EXPECT_THROW(parse_poset("p=3\n0<1\n1<2\n2<0\n"), CycleError);
}

TEST(Io, CycleWitnessIsACycle) {
  try {
    parse_poset("p=4\n0<1\n1<2\n2<3\n3<1\n");
    FAIL() << "expected CycleError";
  } catch (const CycleError& e) {
    ASSERT_EQ(e.witness().size(), 3U);
  }
}

TEST(Io, ExtensionText) {
  const LinearExtension f = parse_extension("2, 0,1");
  EXPECT_EQ(f.vec(), (std::vector<int>{2, 0, 1}));
  EXPECT_EQ(format_extension(f), "2,0,1");
  EXPECT_THROW(parse_extension("1,,2"), ParseError);
  EXPECT_THROW(parse_extension("a"), ParseError);
}

TEST(Io, Sources) {
  const PosetSource s = load_poset_source("shape:3,2");
  EXPECT_TRUE(s.from_shape);
  EXPECT_EQ(s.poset.size(), 5);
  EXPECT_TRUE(load_poset_source("shifted:3,1").shape.shifted);
  EXPECT_THROW(load_poset_source("/nonexistent/file.poset"), ParseError);
  EXPECT_THROW(load_poset_source("shape:2,3"), Error);
}

TEST(Io, CorpusFilesParseAndRoundTrip) {
  const auto all = testing::corpus(64);
  EXPECT_GE(all.size(), 30U);
  for (const auto& src : all) {
    EXPECT_EQ(parse_poset(format_poset(src.poset)), src.poset) << src.name;
  }
}

}  // namespace
}  // namespace lindex
