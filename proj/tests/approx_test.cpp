#include <gtest/gtest.h>

#include <random>

#include "oracle.hpp"
#include "rnafold/approx.hpp"
#include "rnafold/solver.hpp"

using namespace rnafold;

TEST(Approx, RejectsNonGC) {
  EXPECT_THROW(approx_fold(parse_chain("GGAUCC")), ScopeError);
}

TEST(Approx, RelabelPicksDominantBranch) {
  const RelabeledChain r = relabel(parse_chain("GCGCGC"));  // odd G, even C
  EXPECT_EQ(r.branch, Branch::OddGEvenC);
  EXPECT_EQ(r.count(Label::Odd1), 3u);
  EXPECT_EQ(r.count(Label::Even1), 3u);
  EXPECT_EQ(relabel(parse_chain("CGCGCG")).branch, Branch::EvenGOddC);
}

TEST(Approx, SnFoldsAtTheMiddle) {
  const ApproxResult r = approx_fold(make_Sn(4));
  EXPECT_EQ(r.plan.fold_index, 4u);
  EXPECT_GE(r.achieved, 2u);
}

TEST(Approx, FallsBackToTheOtherBranch) {
  // Dominant branch pairs are all chain neighbours; the other branch has C1-G6.
  const ApproxResult r = approx_fold(parse_chain("CGGCGG"));
  EXPECT_EQ(r.relabeled.branch, Branch::EvenGOddC);
  EXPECT_EQ(r.achieved, 1u);
  EXPECT_EQ(r.guarantee, 0u);
}

TEST(Approx, DegenerateChainsFoldStraight) {
  for (const char* s : {"G", "GG", "GGGG", "CCCGGG"}) {
    const Chain c = parse_chain(s);
    const ApproxResult r = approx_fold(c);
    if (r.plan.matched_pairs.empty()) {
      EXPECT_EQ(r.folding, straight_folding(c.size())) << s;
    }
  }
}

TEST(Approx, GuaranteeAndValidityOnRandomChains) {
  std::mt19937_64 rng(21);
  for (int trial = 0; trial < 400; ++trial) {
    const std::size_t n = 1 + rng() % 300;
    const Chain c = parse_chain(oracle::random_string(rng, "GC", n));
    const ApproxResult r = approx_fold(c);
    EXPECT_EQ(r.folding.size(), n);
    EXPECT_GE(r.achieved, r.guarantee) << c.str();
    EXPECT_EQ(r.guarantee, relabel(c).available() / 2);
    EXPECT_GE(r.achieved, r.plan.matched_pairs.size());
    EXPECT_EQ(r.operations, n);  // one placement per node
  }
}

TEST(Approx, NeverBeatsTheOptimum) {
  for (const auto& seq : oracle::all_strings("GC", 8)) {
    const Chain c = parse_chain(seq);
    EXPECT_LE(approx_fold(c).achieved, exact_solve(c).optimal_score) << seq;
  }
}

TEST(Approx, PairsStraddleTheFold) {
  const Chain c = parse_chain("GCCGGCGCCGCGGCCG");
  const FoldPlan p = choose_fold_point(relabel(c));
  for (const auto& [a, b] : p.matched_pairs) {
    EXPECT_LE(a, p.fold_index);
    EXPECT_GT(b, p.fold_index);
    EXPECT_EQ((a + b) % 2, 1u);
    EXPECT_GT(b, a + 1);
  }
}
