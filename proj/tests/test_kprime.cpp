#include <gtest/gtest.h>

#include "hornfix/kprime.hpp"
#include "test_util.hpp"

using namespace hornfix;
using hornfix::testing::thrown;

namespace {

Structure base(std::size_t n, std::set<Tuple> r1) {
  Structure a;
  a.size = n;
  a.set_relation("R1", Relation(2, std::move(r1)));
  return a;
}

const ExtensionParams kC1{1};

Structure drop(const Structure& g, const std::set<Element>& gone) {
  std::set<Element> keep;
  for (Element v = 0; v < g.size; ++v)
    if (!gone.count(v)) keep.insert(v);
  return induced_substructure(g, keep);
}

}  // namespace

TEST(TrivialExtension, SizesAndRelations) {
  EXPECT_EQ(trivial_extension(base(1, {}), kC1).size, 2u);
  EXPECT_EQ(trivial_extension(base(2, {}), {2}).size, 6u);
  EXPECT_EQ(trivial_extension(base(3, {}), {2}).size, 12u);
  Rng rng(61);
  for (int i = 0; i < 20; ++i) {
    Structure a = base(rng.between(1, 3), {});
    for_each_tuple(2, a.size, [&](const Tuple& t) {
      if (rng.chance(1, 2)) a.relations.at("R1").insert(t);
    });
    EXPECT_EQ(trivial_extension(a, kC1).relations, a.relations);
  }
  EXPECT_EQ(thrown([] { trivial_extension(base(1, {}), {0}); }), ErrorCode::InvalidArgument);
}

TEST(LargestPerfectSubtree, PerfectTreeIsItself) {
  const Structure g = make_tree(3).structure;
  const PerfectSubtree t = largest_perfect_subtree(g);
  EXPECT_EQ(t.tree.tree.levels, 3u);
  EXPECT_EQ(t.tree.structure.relation("E"), g.relation("E"));
}

TEST(LargestPerfectSubtree, MissingGrandchildLeavesTwoLevels) {
  const Structure g = drop(make_tree(3).structure, {5});
  EXPECT_EQ(largest_perfect_subtree(g).tree.tree.levels, 2u);
}

TEST(LargestPerfectSubtree, UnreachableNodesAreIgnored) {
  Structure g = make_tree(2).structure;
  g.size = 6;
  Relation e = g.relation("E");
  e.insert({3, 4});
  e.insert({4, 5});
  g.set_relation("E", e);
  const PerfectSubtree t = largest_perfect_subtree(g);
  EXPECT_EQ(t.tree.tree.levels, 2u);
  EXPECT_EQ(t.reachable_levels, 2u);
}

TEST(LargestPerfectSubtree, NonTreesAreRejected) {
  Structure g = make_tree(2).structure;
  Relation e = g.relation("E");
  e.insert({1, 2});  // node 2 gets a second parent
  g.set_relation("E", e);
  EXPECT_EQ(thrown([&] { largest_perfect_subtree(g); }), ErrorCode::NotABinaryTree);
}

TEST(Membership, ConditionOneInstance) {
  const Structure g = condition1_instance(base(2, {{0, 1}}), kC1);
  EXPECT_EQ(g.size, 15u);
  const KprimeVerdict v = membership_kprime(g, demo_oracle("even"), kC1);
  EXPECT_TRUE(v.member);
  EXPECT_EQ(v.condition, KCondition::Condition1);
  EXPECT_EQ(v.h, 2u);
  EXPECT_EQ(v.depth, 4u);
  const KprimeVerdict never = membership_kprime(g, demo_oracle("never"), kC1);
  EXPECT_FALSE(never.member);
  EXPECT_EQ(never.condition, KCondition::None);
}

TEST(Membership, OddBaseRejectedByParity) {
  const Structure g = condition1_instance(base(1, {}), kC1);
  EXPECT_FALSE(membership_kprime(g, demo_oracle("even"), kC1).member);
  EXPECT_TRUE(membership_kprime(g, demo_oracle("always"), kC1).member);
}

TEST(Membership, ThreeColorability) {
  // A triangle plus a self loop is not 3-colorable; the triangle alone is.
  const Structure tri = base(3, {{0, 1}, {1, 2}, {2, 0}});
  EXPECT_TRUE(demo_oracle("3col")(tri));
  Structure loop = tri;
  loop.relations.at("R1").insert({1, 1});
  EXPECT_FALSE(demo_oracle("3col")(loop));
}

TEST(Membership, ShallowTreesMeetConditionTwo) {
  Structure g = make_tree(3).structure;
  g.set_relation("P", Relation(1, {{0}, {1}, {2}}));
  const KprimeVerdict v = membership_kprime(g, demo_oracle("never"), kC1);
  EXPECT_TRUE(v.member);
  EXPECT_EQ(v.condition, KCondition::Condition2);
}

TEST(Membership, TooDeepIsRejected) {
  Structure g = make_tree(4).structure;
  g.set_relation("P", Relation(1, {{0}}));
  const KprimeVerdict v = membership_kprime(g, demo_oracle("always"), kC1);
  EXPECT_FALSE(v.member);
  EXPECT_EQ(v.h, 1u);
}

TEST(Membership, RelationReachingTheExtensionFailsConditionOne) {
  Structure g = condition1_instance(base(2, {}), kC1);
  Relation r1 = g.relation("R1");
  for (Node a : level_nodes(3)) r1.insert({0, a});
  g.set_relation("R1", r1);
  const KprimeVerdict v = membership_kprime(g, demo_oracle("always"), kC1);
  EXPECT_FALSE(v.member);
}

TEST(Membership, StructuralViolations) {
  Structure cyclic = make_tree(2).structure;
  Relation e = cyclic.relation("E");
  e.insert({1, 0});
  cyclic.set_relation("E", e);
  EXPECT_EQ(thrown([&] { membership_kprime(cyclic, demo_oracle("always"), kC1); }),
            ErrorCode::StructuralViolation);

  Structure unsaturated = make_tree(2).structure;
  unsaturated.set_relation("P", Relation(1, {{0}, {1}}));
  EXPECT_EQ(thrown([&] { membership_kprime(unsaturated, demo_oracle("always"), kC1); }),
            ErrorCode::StructuralViolation);
}

TEST(Closure, RemovingLeavesFlipsToConditionTwo) {
  const Structure g = condition1_instance(base(2, {{1, 0}}), kC1);
  Rng rng(62);
  for (int i = 0; i < 30; ++i) {
    std::set<Element> gone;
    for (Node leaf : level_nodes(3))
      if (rng.chance(1, 2)) gone.insert(leaf);
    if (gone.empty()) gone.insert(7);
    const KprimeVerdict v = membership_kprime(drop(g, gone), demo_oracle("even"), kC1);
    EXPECT_TRUE(v.member);
    EXPECT_EQ(v.condition, KCondition::Condition2);
  }
}

TEST(Closure, RootAloneIsAMember) {
  const Structure g = condition1_instance(base(2, {}), kC1);
  const Structure root_only = induced_substructure(g, {0});
  EXPECT_TRUE(membership_kprime(root_only, demo_oracle("never"), kC1).member);
}

TEST(Closure, GeneratedMembersStayMembers) {
  Rng rng(63);
  for (const auto& name : demo_oracle_names()) {
    const KOracle k = demo_oracle(name);
    for (int i = 0; i < 5; ++i) {
      const Structure g = generate_member(rng, k, kC1);
      ASSERT_TRUE(membership_kprime(g, k, kC1).member) << name;
      const ClosureReport r = closure_under_substructures_test(g, k, kC1, 20, rng);
      EXPECT_TRUE(r.passed()) << (r.failures.empty() ? "" : r.failures.front());
    }
  }
}

TEST(Coherence, DecodedTreeIsTheTrivialExtensionOfItsPrefix) {
  Rng rng(64);
  for (int i = 0; i < 20; ++i) {
    const Structure g = generate_member(rng, demo_oracle("always"), kC1);
    const KprimeVerdict v = membership_kprime(g, demo_oracle("always"), kC1);
    if (v.condition != KCondition::Condition1) continue;
    const PerfectSubtree t = largest_perfect_subtree(g);
    const Structure whole = decode(t.tree);
    const Structure extended = trivial_extension(prefix_base(t, v.h, true), kC1);
    EXPECT_EQ(whole.size, extended.size);
    EXPECT_EQ(whole.relations, extended.relations);
  }
}
