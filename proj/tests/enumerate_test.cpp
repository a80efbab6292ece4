#include <gtest/gtest.h>

#include <set>

#include "oracle.hpp"
#include "rnafold/enumerate.hpp"
#include "util.hpp"

using namespace rnafold;

TEST(Enumerate, CountsMatchOrbitOracle) {
  for (std::size_t n = 1; n <= 10; ++n) {
    EXPECT_EQ(count_canonical_walks(n), oracle::distinct_orbits(n)) << n;
  }
}

TEST(Enumerate, OrbitRelationWithAllWalks) {
  // Non-straight orbits have 8 members, the straight one has 4.
  for (std::size_t n = 3; n <= 10; ++n) {
    const std::size_t all = oracle::all_walks(n).size();
    EXPECT_EQ(all, 8 * (count_canonical_walks(n) - 1) + 4) << n;
  }
}

TEST(Enumerate, SmallCounts) {
  // 3 nodes: straight and the L shape.
  EXPECT_EQ(count_canonical_walks(3), 2u);
  EXPECT_EQ(count_canonical_walks(4), 5u);
  EXPECT_EQ(count_canonical_walks(5), 13u);
  EXPECT_EQ(count_canonical_walks(0), 0u);
}

TEST(Enumerate, EveryWalkIsCanonicalAndDistinct) {
  std::set<std::string> seen;
  enumerate_foldings(9, [&](const Folding& f) {
    EXPECT_EQ(canonical_form(f), f);
    EXPECT_TRUE(seen.insert(to_moves(f)).second);
  });
  EXPECT_EQ(seen.size(), count_canonical_walks(9));
}

TEST(Enumerate, SingleNode) {
  const auto all = all_foldings(1);
  ASSERT_EQ(all.size(), 1u);
  EXPECT_EQ(all[0][1], (Point{0, 0}));
}
