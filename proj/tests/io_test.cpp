#include <gtest/gtest.h>

#include <random>

#include "rnafold/enumerate.hpp"
#include "rnafold/io.hpp"

using namespace rnafold;

TEST(FoldingFile, RoundTripsEveryWalk) {
  enumerate_foldings(8, [](const Folding& f) { EXPECT_EQ(read_folding(write_folding(f)), f); });
}

TEST(FoldingFile, AcceptsMovesAndComments) {
  EXPECT_EQ(read_folding("# moves\nRRU\n"), folding_from_moves("RRU"));
  EXPECT_EQ(read_folding("0 0\n0 1  # up\n-1 1\n"), folding_from_moves("UL"));
}

TEST(FoldingFile, Errors) {
  EXPECT_THROW(read_folding(""), ParseError);
  EXPECT_THROW(read_folding("0 0\n1 x\n"), ParseError);
  EXPECT_THROW(read_folding("0 0 0\n"), ParseError);
  EXPECT_THROW(read_folding("0 0\n2 0\n"), FoldingError);
}

TEST(Digest, KnownValues) {
  EXPECT_EQ(hex64(fnv1a64("")), "cbf29ce484222325");
  EXPECT_EQ(hex64(fnv1a64("a")), "af63dc4c8601ec8c");
}

TEST(ResultDocument, TextAndJsonRoundTrip) {
  ResultDocument d("solve", "GGGGCCCC");
  d.set("optimal-score", std::size_t{3});
  d.set("unique", true);
  d.set("note", std::string("two\nlines with \\ and: colon"));
  d.set("empty", std::string());
  EXPECT_EQ(ResultDocument::from_text(d.to_text()), d);
  EXPECT_EQ(ResultDocument::from_json(d.to_json()), d);
  EXPECT_EQ(d.fields()[0].first, "command");
  EXPECT_EQ(d.fields()[1].first, "input-digest");
}

TEST(ResultDocument, SetReplacesInPlace) {
  ResultDocument d;
  d.set("a", "1");
  d.set("b", "2");
  d.set("a", "3");
  EXPECT_EQ(d.to_text(), "a: 3\nb: 2\n");
  EXPECT_THROW(d.set("bad:key", "x"), PreconditionError);
}

TEST(ResultDocument, RejectsMalformedInput) {
  EXPECT_THROW(ResultDocument::from_text("no separator\n"), ParseError);
  EXPECT_THROW(ResultDocument::from_json("[1,2]"), ParseError);
  EXPECT_THROW(ResultDocument::from_json("{\"a\": 1}"), ParseError);
  EXPECT_THROW(ResultDocument::from_json("{"), ParseError);
}

TEST(ResultDocument, SolveDocumentIsStable) {
  const Chain c = parse_chain("GGGGCCCC");
  const std::string a = solve_document(c, exact_solve(c)).to_text();
  EXPECT_EQ(a, solve_document(c, exact_solve(c)).to_text());
  EXPECT_NE(a.find("optimal-score: 3\n"), std::string::npos);
  EXPECT_NE(a.find("unique: true\n"), std::string::npos);
}
