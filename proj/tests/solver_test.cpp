#include <gtest/gtest.h>

#include <random>

#include "oracle.hpp"
#include "rnafold/bounds.hpp"
#include "rnafold/io.hpp"
#include "rnafold/solver.hpp"
#include "util.hpp"

using namespace rnafold;

TEST(ExactSolve, AgreesWithBruteForceOracle) {
  std::mt19937_64 rng(3);
  for (std::size_t n : {5u, 7u, 8u}) {
    const auto walks = oracle::all_walks(n);
    for (int trial = 0; trial < 25; ++trial) {
      const std::string seq = oracle::random_string(rng, "AUGCX", n);
      const auto best = oracle::brute_force_optimum(seq, walks);
      const SolveReport r = exact_solve(parse_chain(seq), {.representative_cap = 0});
      EXPECT_EQ(r.optimal_score, best) << seq;
      EXPECT_EQ(r.optimal_count, oracle::brute_force_optimal_orbits(seq, walks, best)) << seq;
      EXPECT_EQ(r.representatives.size(), r.optimal_count);
      for (const auto& f : r.representatives) {
        EXPECT_EQ(score(parse_chain(seq), f).size, best);
      }
    }
  }
}

TEST(ExactSolve, LimitGuard) {
  EXPECT_THROW(exact_solve(parse_chain(std::string(21, 'G'))), LimitError);
  SolveOptions o;
  o.max_length = 21;
  EXPECT_NO_THROW(exact_solve(parse_chain(std::string(21, 'X')), o));
}

TEST(ExactSolve, NoBondsPossible) {
  const SolveReport r = exact_solve(parse_chain("GGGG"));
  EXPECT_EQ(r.optimal_score, 0u);
  EXPECT_EQ(r.optimal_count, count_canonical_walks(4));
}

TEST(ExactSolve, SnIsUniquelyFoldable) {
  const SolveReport r = exact_solve(make_Sn(4));
  EXPECT_EQ(r.optimal_score, 3u);
  EXPECT_EQ(r.optimal_count, 1u);
  EXPECT_EQ(canonical_form(r.representatives[0]), canonical_form(make_Fn(4)));
  EXPECT_TRUE(is_unique_optimal(make_Sn(5)));
}

TEST(ExactSolve, SmallSnAreNotUnique) {
  // Below the theorem's range the hairpin ties with another shape.
  const SolveReport r = exact_solve(make_Sn(3));
  EXPECT_EQ(r.optimal_score, 2u);
  EXPECT_EQ(r.optimal_count, 2u);
}

TEST(ExactSolve, RepresentativeCap) {
  SolveOptions o;
  o.representative_cap = 3;
  const SolveReport r = exact_solve(parse_chain("GGGGGG"), o);
  EXPECT_EQ(r.representatives.size(), 3u);
  EXPECT_GT(r.optimal_count, 3u);
}

TEST(ExactSolve, WorkerCountDoesNotChangeReport) {
  const Chain c = parse_chain("GCAUGGCCAUGC");
  SolveOptions one, many;
  many.workers = 4;
  EXPECT_EQ(solve_document(c, exact_solve(c, one)).to_text(),
            solve_document(c, exact_solve(c, many)).to_text());
}

TEST(ExactSolve, PruningKeepsScoresAndCounts) {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 20; ++trial) {
    const Chain c = parse_chain(oracle::random_string(rng, "AUGC", 10));
    SolveOptions off;
    off.prune = false;
    const auto a = exact_solve(c), b = exact_solve(c, off);
    EXPECT_EQ(a.optimal_score, b.optimal_score) << c.str();
    EXPECT_EQ(a.optimal_count, b.optimal_count) << c.str();
    EXPECT_LE(a.nodes_explored, b.nodes_explored);
    EXPECT_EQ(b.pruned, 0u);
  }
}

TEST(ExactSolve, HeuristicSeedIsAchievable) {
  std::mt19937_64 rng(9);
  for (int trial = 0; trial < 30; ++trial) {
    const Chain c = parse_chain(oracle::random_string(rng, "AUGC", 9));
    EXPECT_LE(detail::heuristic_lower_bound(c), exact_solve(c).optimal_score);
  }
}
