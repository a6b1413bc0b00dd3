#include <gtest/gtest.h>

#include "hornfix/generators.hpp"
#include "hornfix/oracles.hpp"
#include "hornfix/trees.hpp"
#include "test_util.hpp"

using namespace hornfix;
using hornfix::testing::thrown;

TEST(Nodes, DepthAndLcaMatchPathBits) {
  for (Node a = 0; a < 63; ++a) {
    EXPECT_EQ(node_depth(a), oracle::depth_of(a));
    for (Node b = 0; b < 63; ++b) EXPECT_EQ(node_depth(lca(a, b)), oracle::meet_depth(a, b));
  }
  EXPECT_EQ(parent(left_child(5)), 5u);
  EXPECT_EQ(parent(right_child(5)), 5u);
  EXPECT_EQ(level_nodes(2), (std::vector<Node>{3, 4, 5, 6}));
}

TEST(CharTuples, LayoutAndLengths) {
  for (std::size_t r = 0; r <= 6; ++r) EXPECT_EQ(arity_of_char_length(triangular(r)), r);
  EXPECT_EQ(thrown([] { arity_of_char_length(4); }), ErrorCode::MalformedLength);
  // Row-major: (1,1) (1,2) (1,3) (2,2) (2,3) (3,3).
  EXPECT_EQ(pair_index(3, 0, 0), 0u);
  EXPECT_EQ(pair_index(3, 0, 2), 2u);
  EXPECT_EQ(pair_index(3, 1, 1), 3u);
  EXPECT_EQ(pair_index(3, 2, 2), 5u);
  EXPECT_EQ(char_tuple({0, 1}), (CharTuple{0, 0, 1}));
  EXPECT_EQ(char_tuple({3, 4, 2}), (CharTuple{2, 1, 0, 2, 0, 1}));
  Rng rng(41);
  for (int i = 0; i < 200; ++i) {
    std::vector<Node> t(rng.between(1, 4));
    for (auto& v : t) v = static_cast<Node>(rng.below(31));
    EXPECT_EQ(char_tuple(t), oracle::characteristic(t));
  }
}

TEST(Automorphisms, CountsAndDepthCap) {
  const std::size_t expected[] = {1, 2, 8, 128};
  for (std::size_t levels = 1; levels <= 4; ++levels) {
    auto autos = enumerate_automorphisms(PerfectTree{levels});
    EXPECT_EQ(autos.size(), expected[levels - 1]);
    EXPECT_EQ(oracle::automorphisms(levels).size(), expected[levels - 1]);
  }
  EXPECT_EQ(thrown([] { enumerate_automorphisms(PerfectTree{5}); }), ErrorCode::DepthTooLarge);
  EXPECT_EQ(enumerate_automorphisms(PerfectTree{5}, 4).size(), 32768u);
}

TEST(Invariance, SaturatedImpliesInvariantButNotConversely) {
  const PerfectTree t{3};
  Relation left_only(1, {{1}});
  EXPECT_FALSE(is_invariant(left_only, t));
  EXPECT_FALSE(is_invariant_by_char(left_only, t));
  Relation level1(1, {{1}, {2}});
  EXPECT_TRUE(is_saturated(level1, t));
  EXPECT_TRUE(is_invariant(level1, t));
  // Siblings: invariant, but the depth class (1,1) also holds (1,1).
  Relation siblings(2, {{1, 2}, {2, 1}});
  EXPECT_TRUE(is_invariant(siblings, t));
  EXPECT_FALSE(is_saturated(siblings, t));
}

TEST(Invariance, CharRelationOf) {
  const PerfectTree t{2};
  EXPECT_EQ(char_relation_of(Relation(2, {{0, 1}, {0, 2}}), t), Relation(3, {{0, 0, 1}}));
  EXPECT_EQ(thrown([&] { char_relation_of(Relation(1, {{1}}), t); }), ErrorCode::NotInvariant);
}

TEST(Encoding, EncodeThenDecodeIsIdentity) {
  Rng rng(42);
  for (int i = 0; i < 40; ++i) {
    Vocabulary v;
    v.relations = {{"R1", rng.between(0, 2)}, {"R2", 1}};
    const Structure a = random_structure(rng, v, rng.between(1, 4));
    const TreeStructure t = encode(a);
    EXPECT_EQ(t.tree.levels, a.size);
    EXPECT_EQ(t.structure.size, (std::size_t{1} << a.size) - 1);
    for (const auto& [name, rel] : t.structure.relations)
      if (name != "E") EXPECT_TRUE(is_saturated(rel, t.tree));
    EXPECT_EQ(decode(t).relations, a.relations);
    EXPECT_EQ(decode(as_tree_structure(t.structure)).relations, a.relations);
  }
}

TEST(Encoding, Errors) {
  Structure with_constant;
  with_constant.size = 2;
  with_constant.set_constant("c", 0);
  EXPECT_EQ(thrown([&] { encode(with_constant); }), ErrorCode::InvalidArgument);

  TreeStructure t = make_tree(2);
  t.structure.set_relation("R", Relation(1, {{1}}));
  EXPECT_EQ(thrown([&] { decode(t); }), ErrorCode::NotSaturated);

  Structure not_tree;
  not_tree.size = 4;
  EXPECT_EQ(thrown([&] { as_tree_structure(not_tree); }), ErrorCode::NotABinaryTree);
}

TEST(Check, HandExamples) {
  EXPECT_FALSE(check({1, 2, 1}));  // a meet deeper than its nodes
  EXPECT_TRUE(check({0, 0, 1}));
  EXPECT_TRUE(check({2, 1, 2}));
  EXPECT_TRUE(check({1, 1, 1}));  // the same node twice
  EXPECT_TRUE(check({}));
  EXPECT_EQ(thrown([] { check({1, 2}); }), ErrorCode::MalformedLength);
}

TEST(Check, AcceptsExactlyTheCharacteristicTuplesOfPairs) {
  const auto truth = oracle::characteristic_tuples(4, 2);
  for_each_tuple(3, 4, [&](const Tuple& t) {
    const CharTuple e(t.begin(), t.end());
    EXPECT_EQ(check(e), truth.count(e) != 0);
    if (truth.count(e)) EXPECT_TRUE(pre_check(e));
  });
}

TEST(Deciders, MatchPairScans) {
  for_each_tuple(3, 4, [&](const Tuple& t) {
    EXPECT_EQ(decider_r_neq(t[0], t[1], t[2]), oracle::r_neq(t[0], t[1], t[2]));
    EXPECT_EQ(decider_r_nege(t[0], t[1], t[2]), oracle::r_nege(t[0], t[1], t[2]));
  });
}

TEST(Sigma, EnumerationAndDecisionAgree) {
  Rng rng(43);
  for (int i = 0; i < 30; ++i) {
    Vocabulary v;
    v.relations = {{"R1", rng.between(1, 2)}};
    const Structure a = random_structure(rng, v, rng.between(1, 3));
    const std::size_t m = rng.between(1, 3);
    const Structure enumerated = sigma_structure(encode(a), m);
    EXPECT_EQ(enumerated, sigma_from_base(a, m));
    EXPECT_EQ(enumerated, sigma_structure(encode(a), m, SigmaMethod::Decide));
  }
}

TEST(Sigma, FulIsEveryCharacteristicTuple) {
  const Structure s = sigma_structure(make_tree(3), 2);
  Relation expected(3);
  for (const auto& e : oracle::characteristic_tuples(3, 2)) expected.insert(Tuple(e.begin(), e.end()));
  EXPECT_EQ(s.relation(kFul), expected);
  EXPECT_EQ(s.relation(kSucc), Relation(2, {{0, 1}, {1, 2}}));
  EXPECT_EQ(s.constant(kZero), 0u);
}
