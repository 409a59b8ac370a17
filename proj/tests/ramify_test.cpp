#include <gmock/gmock.h>
#include <gtest/gtest.h>

#include "lame/ramify/ramify.hpp"
#include "lame/treegrp/enumerate.hpp"

namespace lame {
namespace {

using ::testing::ElementsAre;
using ::testing::UnorderedElementsAre;

// =====================================================================
// Branch point terms
// =====================================================================

TEST(RhTermTest, TameAndWildExamples) {
  EXPECT_EQ(rh_term(RamPoint(2, 0, 0)), Rational(-1, 2));
  EXPECT_EQ(rh_term(RamPoint(3, 0, 0)), Rational(-1, 3));
  EXPECT_EQ(rh_term(RamPoint(1, 1, 5)), Rational(3, 5));
  EXPECT_EQ(rh_term(RamPoint(2, 0, 7)), Rational(-1, 2));
  EXPECT_EQ(rh_term(RamPoint(2, 1, 5)), Rational(3, 10));
  EXPECT_EQ(rh_term(RamPoint(1, 1, 2)), Rational(0));
}

TEST(RhTermTest, PointInvariants) {
  EXPECT_THROW(RamPoint(3, 1, 5), std::invalid_argument);   // 3 does not divide 4
  EXPECT_THROW(RamPoint(2, 0, 2), std::invalid_argument);   // not coprime
  EXPECT_THROW(RamPoint(2, 1, 4), std::invalid_argument);   // 4 is not prime
  EXPECT_THROW(RamPoint(0, 0, 0), std::invalid_argument);
  EXPECT_THROW(RamPoint(2, -1, 5), std::invalid_argument);
  EXPECT_NO_THROW(RamPoint(3, 2, 5));                       // 3 divides 24
}

TEST(RhTermTest, Monotonicity) {
  // fixed tame part, growing wild order
  for (int n : {1, 2, 4}) {
    std::vector<std::pair<long long, Rational>> by_wild_order;
    for (long long p : {5, 13}) {
      for (int t = 1; t <= 3; ++t) {
        long long q = 1;
        for (int i = 0; i < t; ++i) q *= p;
        if ((q - 1) % n != 0) continue;
        by_wild_order.emplace_back(q, rh_term(RamPoint(n, t, p)));
      }
    }
    std::sort(by_wild_order.begin(), by_wild_order.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    for (size_t i = 1; i < by_wild_order.size(); ++i)
      EXPECT_TRUE(by_wild_order[i - 1].second < by_wild_order[i].second);
  }
  // fixed wild order 7, growing tame part over divisors of 6
  Rational prev = rh_term(RamPoint(1, 1, 7));
  for (int n : {2, 3, 6}) {
    Rational cur = rh_term(RamPoint(n, 1, 7));
    EXPECT_TRUE(cur < prev);
    prev = cur;
  }
}

// =====================================================================
// The four-point equation
// =====================================================================

TEST(SolveRhTest, UniqueTameSolutionInGoodCharacteristic) {
  for (long long p : {0LL, 7LL}) {
    auto sols = solve_rh(p);
    ASSERT_EQ(sols.size(), 1u) << "p = " << p;
    EXPECT_TRUE(sols[0].tame());
    EXPECT_THAT(sols[0].tame_indices(), ElementsAre(2, 2, 2, 3));
    EXPECT_EQ(sols[0].p, p);
  }
  auto sols = solve_rh(0);
  EXPECT_EQ(sols[0].str(), "(2,2,2,3) tame, char 0");
  EXPECT_EQ(sols[0].residue_constraint(),
            "tame indices require residue characteristic 0 or outside {2, 3}");
  EXPECT_EQ(solve_rh(7)[0].residue_constraint(), "");
}

TEST(SolveRhTest, SmallCharacteristicsHaveNoSolutions) {
  EXPECT_TRUE(solve_rh(2).empty());
  EXPECT_TRUE(solve_rh(3).empty());
  EXPECT_THROW(solve_rh(6), std::invalid_argument);
}

TEST(SolveRhTest, AllPrimesThroughNinetySeven) {
  std::vector<long long> chars = {0};
  for (long long p = 5; p <= 97; ++p)
    if (detail::is_prime(p)) chars.push_back(p);
  EXPECT_EQ(chars.size(), 1u + 23u);
  for (long long p : chars) {
    auto sols = solve_rh(p);
    ASSERT_EQ(sols.size(), 1u) << "p = " << p;
    EXPECT_TRUE(sols[0].tame());
    EXPECT_THAT(sols[0].tame_indices(), ElementsAre(2, 2, 2, 3));
  }
}

TEST(SolveRhTest, BoundedBruteForceAgreesWithPrunedSolver) {
  for (long long p : {0LL, 2LL, 3LL, 5LL, 7LL, 13LL}) {
    auto brute = solve_rh_bounded(p, 1000, 6);
    auto pruned = solve_rh(p);
    EXPECT_EQ(brute, pruned) << "p = " << p;
  }
}

// =====================================================================
// Orders from tame branching data
// =====================================================================

TEST(TameOrderTest, Examples) {
  EXPECT_EQ(tame_order(5, {2, 2, 2, 3}), Rational(48));
  EXPECT_EQ(tame_order(8, {2, 2, 2, 3}), Rational(84));
  EXPECT_EQ(tame_order(2, {2, 2, 2, 2, 2}), Rational(4));
  EXPECT_EQ(tame_order(3, {2, 3, 7}), Rational(168));
}

TEST(TameOrderTest, TwelveFoldLawAcrossGenera) {
  for (int g = 2; g <= 50; ++g)
    EXPECT_EQ(tame_order(g, {2, 2, 2, 3}), Rational(12 * (g - 1)));
}

TEST(TameOrderTest, RejectsNonHyperbolicTypes) {
  EXPECT_THROW(tame_order(2, {2, 2}), std::invalid_argument);
  EXPECT_THROW(tame_order(3, {2, 3, 6}), std::invalid_argument);  // euclidean
  EXPECT_THROW(tame_order(3, {1, 2, 2, 3}), std::invalid_argument);
}

// =====================================================================
// Three branch points
// =====================================================================

Rational order_of(const std::vector<ThreePointRecord>& recs, int a, int b,
                  int c) {
  for (const auto& r : recs)
    if (r.triple == std::array<int, 3>{a, b, c}) return r.order;
  throw std::runtime_error("triple not found");
}

TEST(ThreePointTest, Examples) {
  auto g3 = three_point_explore(3);
  EXPECT_EQ(order_of(g3, 2, 3, 7), Rational(168));
  auto g2 = three_point_explore(2);
  EXPECT_EQ(order_of(g2, 4, 4, 4), Rational(8));
  auto g5 = three_point_explore(5);
  EXPECT_EQ(order_of(g5, 2, 4, 12), Rational(48));
  // euclidean triples are excluded
  EXPECT_THROW(order_of(g5, 2, 3, 6), std::runtime_error);
  EXPECT_THROW(three_point_explore(1), std::invalid_argument);
}

TEST(ThreePointTest, TriplesAtTwelveFoldOrderExistButAdmitNoTrees) {
  auto recs = three_point_explore(5);
  std::vector<std::array<int, 3>> at_twelve;
  for (const auto& r : recs)
    if (r.order == Rational(48)) at_twelve.push_back(r.triple);
  EXPECT_THAT(at_twelve,
              UnorderedElementsAre(std::array<int, 3>{2, 4, 12},
                                   std::array<int, 3>{2, 6, 6},
                                   std::array<int, 3>{3, 3, 6},
                                   std::array<int, 3>{3, 4, 4}));
  // triples strictly below the 15-fold bound also exist
  EXPECT_TRUE(order_of(recs, 4, 4, 4) < Rational(15 * 4));
  // none of the borderline triples fits any admissible normalizer tree
  for (const auto& tr : at_twelve) {
    auto trees = enumerate_normalizer_trees({tr[0], tr[1], tr[2]});
    EXPECT_TRUE(trees.empty()) << tr[0] << "," << tr[1] << "," << tr[2];
  }
  EXPECT_TRUE(enumerate_normalizer_trees({4, 4, 4}).empty());
}

}  // namespace
}  // namespace lame
