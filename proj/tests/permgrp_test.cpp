#include <gmock/gmock.h>
#include <gtest/gtest.h>

#include "lame/permgrp/group.hpp"
#include "lame/permgrp/hom.hpp"
#include "lame/permgrp/perm.hpp"

namespace lame {
namespace {

using ::testing::UnorderedElementsAre;

// =====================================================================
// Perm
// =====================================================================

TEST(PermTest, CycleParseAndPrintRoundTrip) {
  Perm p = Perm::parse_cycles("(1,2,3)(4,5)", 6);
  EXPECT_EQ(p.apply(0), 1);
  EXPECT_EQ(p.apply(2), 0);
  EXPECT_EQ(p.apply(3), 4);
  EXPECT_EQ(p.apply(5), 5);
  EXPECT_EQ(p.cycles(), "(1,2,3)(4,5)");
  EXPECT_EQ(Perm::parse_cycles(p.cycles(), 6), p);
  EXPECT_EQ(Perm::identity(4).cycles(), "()");
  EXPECT_EQ(Perm::parse_cycles("()", 4), Perm::identity(4));
}

TEST(PermTest, ParseRejectsMalformedInput) {
  EXPECT_THROW(Perm::parse_cycles("(1,2)(2,3)", 4), std::invalid_argument);
  EXPECT_THROW(Perm::parse_cycles("(1,5)", 4), std::invalid_argument);
  EXPECT_THROW(Perm::parse_cycles("(0,1)", 4), std::invalid_argument);
  EXPECT_THROW(Perm::parse_cycles("1,2", 4), std::invalid_argument);
  EXPECT_THROW(Perm::parse_cycles("(1,1)", 4), std::invalid_argument);
  EXPECT_THROW(Perm::parse_cycles("", 4), std::invalid_argument);
}

TEST(PermTest, CompositionAppliesRightFactorFirst) {
  Perm a = Perm::parse_cycles("(1,2)", 3);
  Perm b = Perm::parse_cycles("(2,3)", 3);
  // (a*b)(2) = a(b(2)) = a(3) = 3 in 1-based terms
  EXPECT_EQ((a * b).cycles(), "(1,2,3)");
  EXPECT_EQ((b * a).cycles(), "(1,3,2)");
  EXPECT_EQ(a * a.inverse(), Perm::identity(3));
  EXPECT_EQ(Perm::parse_cycles("(1,2,3)", 3).order(), 3);
  EXPECT_EQ(Perm::parse_cycles("(1,2)(3,4,5)", 5).order(), 6);
}

// =====================================================================
// make_group
// =====================================================================

TEST(MakeGroupTest, StandardFamilies) {
  EXPECT_EQ(PermGroup::dihedral(3).order(), 6);
  EXPECT_EQ(PermGroup::dihedral(2).order(), 4);
  EXPECT_EQ(PermGroup::dihedral(2).degree(), 4);
  EXPECT_EQ(PermGroup::alternating(5).order(), 60);
  EXPECT_EQ(PermGroup::symmetric(4).order(), 24);
  EXPECT_EQ(PermGroup::cyclic(7).order(), 7);
  PermGroup s4xz2 =
      PermGroup::direct_product(PermGroup::symmetric(4), PermGroup::cyclic(2));
  EXPECT_EQ(s4xz2.order(), 48);
}

TEST(MakeGroupTest, RangeErrors) {
  EXPECT_THROW(PermGroup::cyclic(65), std::invalid_argument);
  EXPECT_THROW(PermGroup::dihedral(1), std::invalid_argument);
  EXPECT_THROW(PermGroup::symmetric(0), std::invalid_argument);
}

TEST(MakeGroupTest, OrderCapEnforced) {
  EXPECT_THROW(PermGroup::symmetric(10).order(), std::runtime_error);
}

// =====================================================================
// order_and_elements / closure
// =====================================================================

TEST(ClosureTest, SymmetricFourHas24Elements) {
  PermGroup s4 = PermGroup::symmetric(4);
  EXPECT_EQ(s4.elements().size(), 24u);
  EXPECT_TRUE(s4.elements()[0].is_identity());
}

TEST(ClosureTest, DihedralImageInsideS4xZ2) {
  // <(12)(34)g, (1234)> with g the central involution has order 8 and
  // is dihedral.
  PermGroup s4xz2 =
      PermGroup::direct_product(PermGroup::symmetric(4), PermGroup::cyclic(2));
  PermGroup h = s4xz2.subgroup({Perm::parse_cycles("(1,2)(3,4)(5,6)", 6),
                                Perm::parse_cycles("(1,2,3,4)", 6)});
  EXPECT_EQ(h.order(), 8);
  EXPECT_TRUE(is_isomorphic(h, PermGroup::dihedral(4)));
}

TEST(ClosureTest, TwoGeneratorsOfS3) {
  PermGroup g = PermGroup(3, {Perm::parse_cycles("(1,2,3)", 3),
                              Perm::parse_cycles("(1,2)", 3)});
  EXPECT_EQ(g.order(), 6);
}

TEST(ClosureTest, ProductAndInverseClosure) {
  for (const PermGroup& g :
       {PermGroup::dihedral(4), PermGroup::alternating(4),
        PermGroup::direct_product(PermGroup::cyclic(3), PermGroup::cyclic(4))}) {
    const auto& els = g.elements();
    for (const Perm& a : els) {
      EXPECT_TRUE(g.contains(a.inverse()));
      for (const Perm& b : els) EXPECT_TRUE(g.contains(a * b));
    }
  }
}

// =====================================================================
// structure queries
// =====================================================================

TEST(StructureTest, CenterOfS4xZ2HasOrderTwo) {
  PermGroup g =
      PermGroup::direct_product(PermGroup::symmetric(4), PermGroup::cyclic(2));
  EXPECT_EQ(g.center().order(), 2);
}

TEST(StructureTest, FiveSylowNormalizerInA5HasOrderTen) {
  PermGroup a5 = PermGroup::alternating(5);
  auto syl = sylow(a5, 5);
  EXPECT_EQ(a5.normalizer(syl.subgroup).order(), 10);
}

TEST(StructureTest, A4IsNormalInS4) {
  PermGroup s4 = PermGroup::symmetric(4);
  EXPECT_TRUE(s4.is_normal(PermGroup::alternating(4)));
  auto p2 = sylow(s4, 2);
  EXPECT_FALSE(s4.is_normal(p2.subgroup));
}

TEST(StructureTest, DerivedSubgroups) {
  EXPECT_EQ(PermGroup::symmetric(4).derived_subgroup().order(), 12);
  EXPECT_EQ(PermGroup::alternating(5).derived_subgroup().order(), 60);
  EXPECT_EQ(PermGroup::cyclic(12).derived_subgroup().order(), 1);
}

TEST(StructureTest, RejectsNonSubgroupQueries) {
  PermGroup d4 = PermGroup::dihedral(4);
  PermGroup not_inside = d4.subgroup({Perm::parse_cycles("(1,2,3)", 4)});
  EXPECT_THROW(d4.normalizer(not_inside), std::invalid_argument);
  PermGroup s4 = PermGroup::symmetric(4);
  PermGroup a5 = PermGroup::alternating(5);
  EXPECT_THROW(s4.is_normal(a5), std::invalid_argument);
}

// =====================================================================
// sylow
// =====================================================================

TEST(SylowTest, CountsFromTheClassification) {
  EXPECT_EQ(sylow(PermGroup::alternating(5), 5).count, 6);
  EXPECT_EQ(sylow(PermGroup::symmetric(4), 3).count, 4);
  EXPECT_EQ(sylow(PermGroup::cyclic(60), 5).count, 1);
}

TEST(SylowTest, SubgroupHasFullPrimePart) {
  auto s = sylow(PermGroup::symmetric(4), 2);
  EXPECT_EQ(s.subgroup.order(), 8);
  EXPECT_EQ(s.count, 3);
  auto t = sylow(PermGroup::alternating(5), 2);
  EXPECT_EQ(t.subgroup.order(), 4);
  EXPECT_EQ(t.count, 5);
}

TEST(SylowTest, PrimeNotDividingOrderGivesTrivial) {
  auto s = sylow(PermGroup::symmetric(4), 5);
  EXPECT_EQ(s.subgroup.order(), 1);
  EXPECT_EQ(s.count, 1);
}

TEST(SylowTest, CongruenceAndDivisibility) {
  for (const PermGroup& g :
       {PermGroup::symmetric(4), PermGroup::alternating(5),
        PermGroup::dihedral(6),
        PermGroup::direct_product(PermGroup::symmetric(4),
                                  PermGroup::cyclic(2))}) {
    for (int p : {2, 3, 5, 7}) {
      if (g.order() % p != 0) continue;
      auto s = sylow(g, p);
      EXPECT_EQ(s.count % p, 1) << g.name() << " p=" << p;
      EXPECT_EQ((g.order() / s.subgroup.order()) % s.count, 0)
          << g.name() << " p=" << p;
    }
  }
}

// =====================================================================
// coset_action
// =====================================================================

TEST(CosetActionTest, A5OnFiveSylowNormalizerCosets) {
  PermGroup a5 = PermGroup::alternating(5);
  PermGroup n = a5.normalizer(sylow(a5, 5).subgroup);
  Hom h = coset_action(a5, n);
  EXPECT_EQ(h.target().degree(), 6);
  EXPECT_TRUE(h.image_is_transitive());
}

TEST(CosetActionTest, S4ActsFaithfullyOnItsThreeSylows) {
  PermGroup s4 = PermGroup::symmetric(4);
  PermGroup n = s4.normalizer(sylow(s4, 3).subgroup);
  EXPECT_EQ(n.order(), 6);
  Hom h = coset_action(s4, n);
  EXPECT_EQ(h.target().degree(), 4);
  EXPECT_EQ(h.kernel().order(), 1);
  EXPECT_TRUE(h.is_injective());
}

TEST(CosetActionTest, WholeGroupGivesOnePointTrivialAction) {
  PermGroup s4 = PermGroup::symmetric(4);
  Hom h = coset_action(s4, s4);
  EXPECT_EQ(h.target().degree(), 1);
  EXPECT_EQ(h.kernel().order(), 24);
}

TEST(CosetActionTest, KernelIsTheCore) {
  // kernel of the coset action = largest normal subgroup inside h
  for (const PermGroup& g : {PermGroup::symmetric(4), PermGroup::dihedral(6)}) {
    PermGroup h = g.normalizer(sylow(g, 3).subgroup);
    Hom act = coset_action(g, h);
    PermGroup ker = act.kernel();
    std::vector<Perm> core;
    for (const Perm& x : h.elements()) {
      bool ok = true;
      for (const Perm& e : g.elements())
        if (!h.contains(e * x * e.inverse())) { ok = false; break; }
      if (ok) core.push_back(x);
    }
    PermGroup core_grp = g.subgroup(core);
    EXPECT_TRUE(ker.same_element_set(core_grp)) << g.name();
  }
}

// =====================================================================
// monomorphisms
// =====================================================================

TEST(MonomorphismTest, Z2IntoS3HasThree) {
  auto homs = monomorphisms(PermGroup::cyclic(2), PermGroup::symmetric(3));
  EXPECT_EQ(homs.size(), 3u);
  for (const Hom& h : homs) EXPECT_TRUE(h.is_injective());
}

TEST(MonomorphismTest, AnchoredD4IntoS4xZ2HitsTheKnownImage) {
  PermGroup d4 = PermGroup::dihedral(4);
  PermGroup g =
      PermGroup::direct_product(PermGroup::symmetric(4), PermGroup::cyclic(2));
  Perm rot = d4.gens()[0];
  Perm target_rot = Perm::parse_cycles("(1,2,3,4)", 6);
  auto homs = monomorphisms(d4, g, std::make_pair(rot, target_rot));
  ASSERT_FALSE(homs.empty());
  PermGroup expected = g.subgroup({Perm::parse_cycles("(1,2)(3,4)(5,6)", 6),
                                   Perm::parse_cycles("(1,2,3,4)", 6)});
  bool found = false;
  for (const Hom& h : homs) {
    EXPECT_EQ(h.image_of(rot), target_rot);
    if (h.image_group().same_element_set(expected)) found = true;
  }
  EXPECT_TRUE(found);
}

TEST(MonomorphismTest, NonabelianIntoAbelianIsEmpty) {
  EXPECT_TRUE(monomorphisms(PermGroup::dihedral(3), PermGroup::cyclic(6)).empty());
}

TEST(MonomorphismTest, AnchorOrderMismatchGivesEmpty) {
  PermGroup d4 = PermGroup::dihedral(4);
  PermGroup s4 = PermGroup::symmetric(4);
  Perm rot = d4.gens()[0];  // order 4
  auto homs = monomorphisms(d4, s4, std::make_pair(rot, Perm::parse_cycles("(1,2,3)", 4)));
  EXPECT_TRUE(homs.empty());
}

TEST(MonomorphismTest, ConjugationPermutesTheResultSet) {
  PermGroup z3 = PermGroup::cyclic(3);
  PermGroup s4 = PermGroup::symmetric(4);
  auto homs = monomorphisms(z3, s4);
  EXPECT_EQ(homs.size(), 8u);  // 8 elements of order 3
  Perm c = Perm::parse_cycles("(1,2)", 4);
  std::set<std::vector<int>> images, conjugated;
  for (const Hom& h : homs) {
    images.insert(h.gen_images()[0].images());
    conjugated.insert((c * h.gen_images()[0] * c.inverse()).images());
  }
  EXPECT_EQ(images, conjugated);
}

// =====================================================================
// is_isomorphic
// =====================================================================

TEST(IsomorphismTest, DihedralThreeIsSymmetricThree) {
  EXPECT_TRUE(is_isomorphic(PermGroup::dihedral(3), PermGroup::symmetric(3)));
}

TEST(IsomorphismTest, OrderTwelveGroupsAreDistinguished) {
  EXPECT_FALSE(is_isomorphic(PermGroup::dihedral(6), PermGroup::alternating(4)));
  EXPECT_FALSE(is_isomorphic(PermGroup::cyclic(12), PermGroup::dihedral(6)));
}

TEST(IsomorphismTest, SameGroupFromDifferentGenerators) {
  PermGroup a =
      PermGroup::direct_product(PermGroup::symmetric(4), PermGroup::cyclic(2));
  PermGroup b = PermGroup(6, {Perm::parse_cycles("(1,2)", 6),
                              Perm::parse_cycles("(1,2,3,4)", 6),
                              Perm::parse_cycles("(5,6)", 6)});
  EXPECT_TRUE(is_isomorphic(a, b));
}

TEST(IsomorphismTest, BehavesLikeAnEquivalence) {
  std::vector<PermGroup> pool = {PermGroup::dihedral(3), PermGroup::symmetric(3),
                                 PermGroup::cyclic(6), PermGroup::alternating(4)};
  for (const PermGroup& g : pool) EXPECT_TRUE(is_isomorphic(g, g));
  for (const PermGroup& g : pool)
    for (const PermGroup& h : pool)
      EXPECT_EQ(is_isomorphic(g, h), is_isomorphic(h, g));
}

// =====================================================================
// Hom invariants
// =====================================================================

TEST(HomTest, RejectsNonHomomorphicImages) {
  PermGroup z4 = PermGroup::cyclic(4);
  PermGroup s4 = PermGroup::symmetric(4);
  EXPECT_THROW(Hom(z4, s4, {Perm::parse_cycles("(1,2,3)", 4)}),
               std::invalid_argument);
}

TEST(HomTest, TableMatchesGeneratorImages) {
  PermGroup z6 = PermGroup::cyclic(6);
  PermGroup s3 = PermGroup::symmetric(3);
  // Z6 -> S3 sending the generator to a 3-cycle (kernel of order 2)
  Hom h(z6, s3, {Perm::parse_cycles("(1,2,3)", 3)});
  EXPECT_EQ(h.kernel().order(), 2);
  EXPECT_EQ(h.image_group().order(), 3);
  EXPECT_FALSE(h.is_injective());
}

}  // namespace
}  // namespace lame
