#include <gtest/gtest.h>

#include <random>

#include "reachpairs/errors.hpp"
#include "reachpairs/generators.hpp"
#include "reachpairs/oracle.hpp"
#include "reachpairs/structure.hpp"
#include "reachpairs/table_one.hpp"
#include "test_support.hpp"

namespace reachpairs {
namespace {

TEST(Oracle, MatchesExhaustiveDigraphSearch) {
  for (std::uint64_t n = 1; n <= 5; ++n) {
    EXPECT_EQ(oracle_weight_set(n), testing::to_weight_set(testing::weights_of_all_digraphs(n)));
  }
}

TEST(Oracle, MatchesReferenceTable) {
  for (std::uint64_t n = 1; n <= kOracleMaxN; ++n) {
    EXPECT_EQ(oracle_weight_set(n), table_one_weight_set(n)) << n;
  }
  EXPECT_THROW(oracle_weight_set(9), PreconditionError);
  EXPECT_THROW(oracle_weight_set(0), PreconditionError);
}

TEST(Oracle, SearchAgreesWithTableUpTo8) {
  for (std::uint64_t n = 1; n <= kOracleMaxN; ++n) {
    const auto members = table_one_weight_set(n);
    for (Weight k = n; k <= n * n; ++k) {
      const auto poset = find_clique_poset(n, k);
      ASSERT_EQ(poset.has_value(), members.contains(k)) << n << ' ' << k;
    }
  }
}

// Proving a gap empty is exhaustive above 8, so only members are searched.
TEST(Oracle, SearchFindsEveryMemberUpTo11) {
  for (std::uint64_t n = 9; n <= kOracleWitnessMaxN; ++n) {
    const auto members = table_one_weight_set(n);
    for (const auto& iv : members.intervals()) {
      for (Weight k = iv.lo; k <= iv.hi; ++k) {
        const auto poset = find_clique_poset(n, k);
        ASSERT_TRUE(poset.has_value()) << n << ' ' << k;
        ASSERT_TRUE(poset->is_valid());
        ASSERT_EQ(poset->weight(), k);
        ASSERT_EQ(poset->vertex_count(), n);
      }
    }
  }
}

TEST(Oracle, WitnessRejectsWithNeighbours) {
  try {
    oracle_witness(3, 8);
    FAIL();
  } catch (const NotAchievable& e) {
    EXPECT_EQ(e.nearest_below(), 7u);
    EXPECT_EQ(e.nearest_above(), 9u);
  }
  const auto known = table_one_weight_set(10);
  EXPECT_THROW(oracle_witness(10, 99, &known), NotAchievable);
  EXPECT_EQ(weight(oracle_witness(10, 91, &known)), 91u);
}

TEST(Oracle, PosetWeightEqualsClosureWeight) {
  std::mt19937_64 rng(51);
  for (int i = 0; i < 1000; ++i) {
    const auto n = std::uniform_int_distribution<std::size_t>(1, kOracleMaxN)(rng);
    const CliquePoset poset = random_clique_poset(n, rng);
    ASSERT_TRUE(poset.is_valid());
    ASSERT_EQ(poset.vertex_count(), n);
    const Digraph g = poset.expand();
    ASSERT_TRUE(is_transitive(g));
    ASSERT_EQ(poset.weight(), testing::reference_weight(g));
  }
}

TEST(Oracle, InvalidPosets) {
  CliquePoset cyclic{{1, 1}, {{true, true}, {true, true}}};
  EXPECT_FALSE(cyclic.is_valid());
  CliquePoset intransitive{{1, 1, 1},
                           {{true, true, false}, {false, true, true}, {false, false, true}}};
  EXPECT_FALSE(intransitive.is_valid());
  CliquePoset empty_block{{0}, {{true}}};
  EXPECT_FALSE(empty_block.is_valid());
}

}  // namespace
}  // namespace reachpairs
