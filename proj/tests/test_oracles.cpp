#include <gtest/gtest.h>

#include "hornfix/oracles.hpp"
#include "hornfix/selftest.hpp"

using namespace hornfix;

// The oracles are ground truth elsewhere, so they get their own hand checks.

TEST(Oracle, AlternatingPathByHand) {
  Structure g;
  g.size = 3;
  g.set_relation("E", Relation(2, {{0, 1}, {0, 2}, {1, 2}}));
  g.set_relation("Puni", Relation(1, {{0}}));
  g.set_constant("s", 0);
  g.set_constant("t", 2);
  EXPECT_TRUE(oracle::alternating_path(g));
  g.set_relation("E", Relation(2, {{0, 1}, {0, 2}}));
  EXPECT_FALSE(oracle::alternating_path(g));
  // A universal node without successors wins vacuously.
  g.set_relation("Puni", Relation(1, {{0}, {1}}));
  EXPECT_TRUE(oracle::alternating_path(g));
}

TEST(Oracle, Reachability) {
  Relation e(2, {{0, 1}, {1, 2}, {3, 0}});
  EXPECT_EQ(oracle::reachable(e, 4, 0), (std::set<Element>{1, 2}));
  EXPECT_EQ(oracle::reachable(e, 4, 2), std::set<Element>{});
}

TEST(Oracle, CharacteristicTuplesOfSmallTrees) {
  EXPECT_EQ(oracle::characteristic_tuples(2, 1), (std::set<CharTuple>{{0}, {1}}));
  // Pairs on three nodes: (r,r) (r,c) (c,r) (c,c) (c,c') up to symmetry.
  EXPECT_EQ(oracle::characteristic_tuples(2, 2),
            (std::set<CharTuple>{{0, 0, 0}, {0, 0, 1}, {1, 0, 0}, {1, 1, 1}, {1, 0, 1}}));
}

TEST(Oracle, AutomorphismsOfThreeLevels) {
  const auto autos = oracle::automorphisms(3);
  EXPECT_EQ(autos.size(), 8u);
  for (const auto& f : autos) EXPECT_EQ(f[0], 0u);
}

TEST(Oracle, DeciderTruths) {
  EXPECT_TRUE(oracle::r_neq(0, 0, 1));
  EXPECT_FALSE(oracle::r_neq(1, 1, 1));
  EXPECT_TRUE(oracle::r_neq(1, 0, 1));
  EXPECT_FALSE(oracle::r_nege(0, 0, 1));
  EXPECT_TRUE(oracle::r_nege(0, 0, 2));
  EXPECT_TRUE(oracle::r_nege(1, 1, 1));
}

TEST(Selftest, EverySuitePasses) {
  const SelftestOutput out = run_selftest();
  EXPECT_TRUE(out.passed) << out.text;
  EXPECT_EQ(out.text, run_selftest().text);
}
