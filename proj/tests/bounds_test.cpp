#include <gtest/gtest.h>

#include "oracle.hpp"
#include "rnafold/bounds.hpp"
#include "rnafold/solver.hpp"

using namespace rnafold;

TEST(BboxBound, Values) {
  EXPECT_EQ(bound_bbox(8).value, 3u);
  EXPECT_FALSE(bound_bbox(8).extension);
  EXPECT_EQ(bound_bbox(9).value, 3u);
  EXPECT_TRUE(bound_bbox(9).extension);
  EXPECT_EQ(bound_bbox(1).value, 0u);
  EXPECT_EQ(bound_bbox(2).value, 0u);
}

TEST(BboxBound, OddLengthsHoldExhaustively) {
  for (std::size_t n : {5u, 7u, 9u}) {
    const auto walks = oracle::all_walks(n);
    for (const auto& seq : oracle::all_strings("GC", n)) {
      EXPECT_LE(exact_solve(parse_chain(seq)).optimal_score, bound_bbox(n).value) << seq;
    }
  }
}

TEST(ParityCensus, CountsByIndexParity) {
  const ParityCensus c = parity_census(parse_chain("GGGGCCCCAUX"));
  EXPECT_EQ(c.odd_G, 2u);
  EXPECT_EQ(c.even_G, 2u);
  EXPECT_EQ(c.odd_C, 2u);
  EXPECT_EQ(c.even_C, 2u);
  EXPECT_EQ(c.odd_A, 1u);
  EXPECT_EQ(c.even_U, 1u);
  EXPECT_EQ(c.total(), 10u);
}

TEST(ParityBound, MatchesOracleAndFlagsAU) {
  for (const auto& seq : oracle::all_strings("AUGC", 6)) {
    const ParityBound b = bound_parity(parse_chain(seq));
    EXPECT_EQ(b.value, oracle::parity_bound(seq)) << seq;
    EXPECT_EQ(b.extension, seq.find_first_of("AU") != std::string::npos);
  }
  EXPECT_EQ(bound_parity(parse_chain("GGGGCCCC")).value, 4u);
}

TEST(Families, SnAndFn) {
  EXPECT_EQ(make_Sn(4).str(), "GGGGCCCC");
  EXPECT_THROW(make_Sn(0), PreconditionError);
  EXPECT_THROW(make_Fn(1), PreconditionError);
  EXPECT_FALSE(sn_uniqueness_applies(3));
  EXPECT_TRUE(sn_uniqueness_applies(4));
}

TEST(Families, FnScoresNMinusOne) {
  for (std::size_t n = 2; n <= 30; ++n) {
    EXPECT_EQ(score(make_Sn(n), make_Fn(n)).size, n - 1) << n;
    EXPECT_EQ(bound_bbox(2 * n).value, n - 1);
  }
}

TEST(Families, Mixed) {
  const MixedChain m = make_mixed(4, 2);
  EXPECT_EQ(m.chain.str(), "GGAUCC");
  EXPECT_FALSE(m.uniqueness_applies);
  EXPECT_TRUE(make_mixed(4, 4).uniqueness_applies);
  EXPECT_THROW(make_mixed(3, 2), PreconditionError);
  EXPECT_THROW(make_mixed(0, 0), PreconditionError);
}
