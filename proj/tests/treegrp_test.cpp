#include <gmock/gmock.h>
#include <gtest/gtest.h>

#include "lame/treegrp/amalgam.hpp"
#include "lame/treegrp/enumerate.hpp"
#include "lame/treegrp/tree.hpp"

namespace lame {
namespace {

using ::testing::ElementsAre;

// =====================================================================
// Vertex labels and branching indices
// =====================================================================

TEST(VertexLabelTest, BranchingIndices) {
  EXPECT_THAT(branching_indices(VertexLabel::dihedral(4)), ElementsAre(2, 2, 4));
  EXPECT_THAT(branching_indices(VertexLabel::cyclic(7)), ElementsAre(7, 7));
  EXPECT_THAT(branching_indices(VertexLabel::a4()), ElementsAre(2, 3, 3));
  // the order-24 vertex group branches over (2,3,4): three slot values
  EXPECT_THAT(branching_indices(VertexLabel::s4()), ElementsAre(2, 3, 4));
  EXPECT_THAT(branching_indices(VertexLabel::a5()), ElementsAre(2, 3, 5));
}

TEST(VertexLabelTest, OrdersAndGuards) {
  EXPECT_EQ(VertexLabel::dihedral(5).order(), 10);
  EXPECT_EQ(VertexLabel::s4().order(), 24);
  EXPECT_EQ(VertexLabel::cyclic(9).order(), 9);
  EXPECT_THROW(VertexLabel::dihedral(1), std::invalid_argument);
  EXPECT_THROW(VertexLabel::cyclic(1), std::invalid_argument);
  EXPECT_TRUE(VertexLabel::a5().requires_large_characteristic());
  EXPECT_FALSE(VertexLabel::s4().requires_large_characteristic());
}

TEST(VertexLabelTest, ParseRoundTrip) {
  for (const char* s : {"Z4", "D7", "A4", "S4", "A5"})
    EXPECT_EQ(VertexLabel::parse(s).str(), s);
  EXPECT_THROW(VertexLabel::parse("Q8"), std::invalid_argument);
}

// =====================================================================
// Tree construction and serialization
// =====================================================================

TreeOfGroups d4_s4_tree() {
  return TreeOfGroups({VertexLabel::dihedral(4), VertexLabel::s4()},
                      {{0, 1, 4}}, {{0, 2}, {0, 2}, {1, 2}, {1, 3}});
}

TEST(TreeTest, SerializationMatchesDocumentedGrammar) {
  EXPECT_EQ(d4_s4_tree().str(),
            "tree { v0: D4; v1: S4; e(v0,v1): Z4; "
            "end(v0): 2; end(v0): 2; end(v1): 2; end(v1): 3 }");
}

TEST(TreeTest, ParseRoundTrip) {
  TreeOfGroups t = d4_s4_tree();
  TreeOfGroups back = TreeOfGroups::parse(t.str());
  EXPECT_EQ(back.str(), t.str());
  EXPECT_THAT(back.end_labels(), ElementsAre(2, 2, 2, 3));
  EXPECT_THROW(TreeOfGroups::parse("nope"), std::invalid_argument);
}

TEST(TreeTest, ValidationRejectsBadSlotData) {
  // edge label 5 does not divide |D4| = 8
  EXPECT_THROW(TreeOfGroups({VertexLabel::dihedral(4), VertexLabel::a5()},
                            {{0, 1, 5}}, {{0, 2}, {0, 2}, {1, 2}, {1, 3}}),
               std::invalid_argument);
  // slots not matching the branching multiset
  EXPECT_THROW(TreeOfGroups({VertexLabel::dihedral(4), VertexLabel::s4()},
                            {{0, 1, 4}}, {{0, 2}, {1, 2}, {1, 3}}),
               std::invalid_argument);
  // wrong edge count
  EXPECT_THROW(TreeOfGroups({VertexLabel::s4()}, {{0, 0, 2}}, {}),
               std::invalid_argument);
}

// =====================================================================
// Enumeration
// =====================================================================

TEST(EnumerateTest, LameTypeEndLabelsGiveExactlyFourTrees) {
  auto trees = enumerate_normalizer_trees({2, 2, 2, 3});
  ASSERT_EQ(trees.size(), 4u);
  std::vector<std::string> got;
  for (const auto& t : trees) got.push_back(t.canonical_str());
  std::vector<std::string> expect = {
      TreeOfGroups({VertexLabel::dihedral(2), VertexLabel::dihedral(3)},
                   {{0, 1, 2}}, {{0, 2}, {0, 2}, {1, 2}, {1, 3}})
          .canonical_str(),
      TreeOfGroups({VertexLabel::dihedral(3), VertexLabel::a4()}, {{0, 1, 3}},
                   {{0, 2}, {0, 2}, {1, 2}, {1, 3}})
          .canonical_str(),
      TreeOfGroups({VertexLabel::dihedral(4), VertexLabel::s4()}, {{0, 1, 4}},
                   {{0, 2}, {0, 2}, {1, 2}, {1, 3}})
          .canonical_str(),
      TreeOfGroups({VertexLabel::dihedral(5), VertexLabel::a5()}, {{0, 1, 5}},
                   {{0, 2}, {0, 2}, {1, 2}, {1, 3}})
          .canonical_str()};
  std::sort(expect.begin(), expect.end());
  EXPECT_EQ(got, expect);
}

TEST(EnumerateTest, StableAcrossParameterCaps) {
  auto base = enumerate_normalizer_trees({2, 2, 2, 3}, 2, 6);
  for (int cap : {12, 30}) {
    auto other = enumerate_normalizer_trees({2, 2, 2, 3}, 2, cap);
    ASSERT_EQ(other.size(), base.size());
    for (size_t i = 0; i < base.size(); ++i)
      EXPECT_EQ(other[i].canonical_str(), base[i].canonical_str());
  }
}

TEST(EnumerateTest, ChainsOfLengthThreeContractToTheSameSet) {
  auto two = enumerate_normalizer_trees({2, 2, 2, 3}, 2, 12);
  auto three = enumerate_normalizer_trees({2, 2, 2, 3}, 3, 12);
  ASSERT_EQ(three.size(), two.size());
  for (size_t i = 0; i < two.size(); ++i)
    EXPECT_EQ(three[i].canonical_str(), two[i].canonical_str());
}

TEST(EnumerateTest, SingleCyclicVertexForTwinEnds) {
  auto trees = enumerate_normalizer_trees({7, 7}, 1, 30);
  ASSERT_EQ(trees.size(), 1u);
  EXPECT_EQ(trees[0].vertices().size(), 1u);
  EXPECT_EQ(trees[0].vertices()[0].str(), "Z7");
}

TEST(EnumerateTest, AllEvenEndLabelsRecordedOutput) {
  // {2,2,2,2} admits the dihedral twin towers D_a -[Z_a]- D_a; with
  // n_cap = 6 that is a ∈ {2,...,6}.
  auto trees = enumerate_normalizer_trees({2, 2, 2, 2}, 2, 6);
  EXPECT_EQ(trees.size(), 5u);
  for (const auto& t : trees) {
    ASSERT_EQ(t.vertices().size(), 2u);
    EXPECT_EQ(t.vertices()[0].str(), t.vertices()[1].str());
  }
}

TEST(EnumerateTest, GuardsOnCaps) {
  EXPECT_THROW(enumerate_normalizer_trees({2, 2, 2, 3}, 0, 30),
               std::invalid_argument);
  EXPECT_THROW(enumerate_normalizer_trees({2, 2, 2, 3}, 4, 30),
               std::invalid_argument);
  EXPECT_THROW(enumerate_normalizer_trees({1, 2}, 2, 30),
               std::invalid_argument);
}

// =====================================================================
// Amalgam realization
// =====================================================================

TEST(AmalgamTest, D4S4RealizationPinsTheFourCycle) {
  AmalgamSpec a = realize_amalgam(d4_s4_tree());
  EXPECT_EQ(a.u.order(), 8);
  EXPECT_EQ(a.v.order(), 24);
  EXPECT_EQ(a.z_u.order(), 4);
  EXPECT_EQ(a.z_v, Perm::parse_cycles("(1,2,3,4)", 4));
  EXPECT_EQ(a.edge_order(), 4);
  EXPECT_EQ(a.name, "D4 *_Z4 S4");
}

TEST(AmalgamTest, D2D3RealizationUsesInvolutions) {
  TreeOfGroups t({VertexLabel::dihedral(2), VertexLabel::dihedral(3)},
                 {{0, 1, 2}}, {{0, 2}, {0, 2}, {1, 2}, {1, 3}});
  AmalgamSpec a = realize_amalgam(t);
  EXPECT_EQ(a.z_u, a.u.gens()[0]);
  EXPECT_EQ(a.z_u.order(), 2);
  EXPECT_EQ(a.z_v.order(), 2);
  EXPECT_TRUE(a.v.contains(a.z_v));
}

TEST(AmalgamTest, D5A5RealizationPinsTheFiveCycle) {
  TreeOfGroups t({VertexLabel::dihedral(5), VertexLabel::a5()}, {{0, 1, 5}},
                 {{0, 2}, {0, 2}, {1, 2}, {1, 3}});
  AmalgamSpec a = realize_amalgam(t);
  EXPECT_EQ(a.z_u.order(), 5);
  EXPECT_EQ(a.z_v, Perm::parse_cycles("(1,2,3,4,5)", 5));
}

TEST(AmalgamTest, AmalgamatingSubgroupsAreMaximalCyclic) {
  for (const auto& t : enumerate_normalizer_trees({2, 2, 2, 3})) {
    AmalgamSpec a = realize_amalgam(t);
    EXPECT_TRUE(is_maximal_cyclic(a.u, a.z_u)) << a.name;
    EXPECT_TRUE(is_maximal_cyclic(a.v, a.z_v)) << a.name;
  }
}

TEST(AmalgamTest, MaximalCyclicDetectsProperContainment) {
  PermGroup s4 = PermGroup::symmetric(4);
  // (1,2)(3,4) is the square of (1,3,2,4)
  EXPECT_FALSE(is_maximal_cyclic(s4, Perm::parse_cycles("(1,2)(3,4)", 4)));
  EXPECT_TRUE(is_maximal_cyclic(s4, Perm::parse_cycles("(1,2)", 4)));
  EXPECT_TRUE(is_maximal_cyclic(s4, Perm::parse_cycles("(1,2,3,4)", 4)));
}

TEST(AmalgamTest, RejectsNonEdgeTrees) {
  TreeOfGroups single({VertexLabel::cyclic(5)}, {}, {{0, 5}, {0, 5}});
  EXPECT_THROW(realize_amalgam(single), std::invalid_argument);
}

// =====================================================================
// Euler characteristic and expected genus
// =====================================================================

TEST(EulerTest, AllFourAmalgamsHaveMinusOneTwelfth) {
  for (const auto& t : enumerate_normalizer_trees({2, 2, 2, 3})) {
    EXPECT_EQ(euler_characteristic(t), Rational(-1, 12)) << t.str();
    EXPECT_EQ(euler_characteristic(realize_amalgam(t)), Rational(-1, 12));
  }
}

TEST(EulerTest, DirectFractionArithmetic) {
  // 1/8 + 1/24 - 1/4 = -1/12 and 1/4 + 1/6 - 1/2 = -1/12
  EXPECT_EQ(euler_characteristic(d4_s4_tree()), Rational(-1, 12));
  TreeOfGroups t({VertexLabel::dihedral(2), VertexLabel::dihedral(3)},
                 {{0, 1, 2}}, {{0, 2}, {0, 2}, {1, 2}, {1, 3}});
  EXPECT_EQ(euler_characteristic(t), Rational(-1, 12));
  TreeOfGroups single({VertexLabel::cyclic(5)}, {}, {{0, 5}, {0, 5}});
  EXPECT_EQ(euler_characteristic(single), Rational(1, 5));
}

TEST(GenusTest, OrdersMapToGenera) {
  AmalgamSpec a = realize_amalgam(d4_s4_tree());
  EXPECT_EQ(expected_genus(a, 48), 5);
  EXPECT_EQ(expected_genus(a, 60), 6);
  EXPECT_EQ(expected_genus(a, 72), 7);
  EXPECT_EQ(expected_genus(a, 84), 8);
  for (int g = 2; g <= 50; ++g)
    EXPECT_EQ(expected_genus(a, 12LL * (g - 1)), g);
}

TEST(GenusTest, RejectsIncompatibleOrders) {
  AmalgamSpec a = realize_amalgam(d4_s4_tree());
  EXPECT_THROW(expected_genus(a, 50), std::invalid_argument);
  EXPECT_THROW(expected_genus(a, 0), std::invalid_argument);
}

}  // namespace
}  // namespace lame
