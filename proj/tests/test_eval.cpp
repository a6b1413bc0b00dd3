#include <gtest/gtest.h>

#include <cstdlib>

#include "hornfix/eval.hpp"
#include "hornfix/generators.hpp"
#include "hornfix/oracles.hpp"
#include "hornfix/translate.hpp"
#include "test_util.hpp"

using namespace hornfix;
using hornfix::testing::thrown;

namespace {

const char* kTc = "T(x,y) :- E(x,y). T(x,y) :- E(x,z), T(z,y).";

Structure graph(std::size_t n, std::set<Tuple> edges) {
  Structure s;
  s.size = n;
  s.set_relation("E", Relation(2, std::move(edges)));
  return s;
}

Structure agap_instance(std::set<Tuple> edges) {
  Structure g = graph(4, std::move(edges));
  g.set_relation("Puni", Relation(1, {{0}}));
  g.set_constant("s", 0);
  g.set_constant("t", 3);
  return g;
}

}  // namespace

TEST(EvalDatalog, FiveNodePathStabilizesWithinSixStages) {
  Structure g = graph(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}});
  FixpointTrace trace;
  EvalResult r = eval_datalog(hornfix::testing::program(kTc), g, &trace);
  // Paths of length k appear at stage k; one more stage confirms the fixpoint.
  EXPECT_EQ(trace.stage_count(), 5u);
  EXPECT_LE(trace.stage_count(), 6u);
  EXPECT_TRUE(trace.stages.front().at("T").empty());
  EXPECT_EQ(trace.stages[trace.stages.size() - 1], trace.stages[trace.stages.size() - 2]);
  EXPECT_EQ(r.relation("T").size(), 10u);
  EXPECT_NE(dump_trace(trace).find("stage 5: T={"), std::string::npos);
}

TEST(EvalDatalog, TransitiveClosureMatchesGraphSearch) {
  Rng rng(21);
  const Program p = hornfix::testing::program(kTc);
  for (int i = 0; i < 60; ++i) {
    Vocabulary v;
    v.relations = {{"E", 2}};
    Structure g = random_structure(rng, v, rng.between(1, 7), 1, 4);
    const Relation t = eval_datalog(p, g).relation("T");
    Relation expected(2);
    for (Element a = 0; a < g.size; ++a)
      for (Element b : oracle::reachable(g.relation("E"), g.size, a)) expected.insert({a, b});
    EXPECT_EQ(t, expected);
  }
}

TEST(EvalDatalog, StagesIncreaseMonotonically) {
  Rng rng(22);
  for (int i = 0; i < 30; ++i) {
    Program p = random_program(rng);
    Vocabulary v;
    v.relations = {{"E", 2}, {"U", 1}};
    v.constants = {"c"};
    FixpointTrace trace;
    eval_datalog(p, random_structure(rng, v, rng.between(1, 3)), &trace);
    for (std::size_t k = 1; k < trace.stages.size(); ++k)
      for (const auto& [name, rel] : trace.stages[k - 1])
        EXPECT_TRUE(rel.subset_of(trace.stages[k].at(name)));
  }
}

TEST(EvalDatalog, AlternatingPathFourNodeInstance) {
  const Program p = agap_program();
  EXPECT_TRUE(eval_datalog(p, agap_instance({{0, 1}, {0, 2}, {1, 3}, {2, 3}})).holds("P"));
  // The universal start node now has a successor that cannot reach t.
  EXPECT_FALSE(eval_datalog(p, agap_instance({{0, 1}, {0, 2}, {1, 3}})).holds("P"));
}

TEST(EvalDatalog, AlternatingPathMatchesAttractor) {
  Rng rng(23);
  const Program p = agap_program();
  for (int i = 0; i < 100; ++i) {
    Structure g = random_alternating_graph(rng, rng.between(1, 6));
    EXPECT_EQ(eval_datalog(p, g).holds("P"), oracle::alternating_path(g)) << print(g);
  }
}

TEST(EvalDatalog, UniversalLiteralRangesOverTheWholeDomain) {
  const Program p = hornfix::testing::program("B(x,y) :- E(x,y). A(x) :- forall y: B(x,y).");
  Structure g = graph(2, {{0, 0}, {0, 1}, {1, 0}});
  EXPECT_EQ(eval_datalog(p, g).relation("A"), Relation(1, {{0}}));
}

TEST(EvalDatalog, ZeroAryGoal) {
  const Program p = hornfix::testing::program("G() :- E(x,x).");
  EXPECT_TRUE(eval_datalog(p, graph(2, {{1, 1}})).holds("G"));
  EXPECT_FALSE(eval_datalog(p, graph(2, {{0, 1}})).holds("G"));
}

TEST(EvalDatalog, MissingInputRelationThrows) {
  Structure s;
  s.size = 2;
  EXPECT_EQ(thrown([&] { eval_datalog(hornfix::testing::program(kTc), s); }),
            ErrorCode::MissingSymbol);
}

TEST(EvalHorn, UnreachabilitySentence) {
  const HornSentence phi = hornfix::testing::horn(
      "exists C/1 forall x y ( -> C(s) ; C(x) & E(x,y) -> C(y) ; C(t) -> false )");
  Structure g = graph(3, {{0, 1}});
  g.set_constant("s", 0);
  g.set_constant("t", 1);
  EXPECT_FALSE(eval_horn_brute_force(phi, g));
  g.set_constant("t", 2);
  EXPECT_TRUE(eval_horn_brute_force(phi, g));
}

TEST(EvalHorn, BudgetIsEnforced) {
  const HornSentence phi = hornfix::testing::horn("exists R/2 forall x y ( R(x,y) -> false )");
  EXPECT_EQ(thrown([&] { eval_horn_brute_force(phi, graph(3, {}), 16); }),
            ErrorCode::BudgetExceeded);
  EXPECT_TRUE(eval_horn_brute_force(phi, graph(3, {}), 1 << 9));
}

TEST(EvalHorn, BudgetFromEnvironment) {
  ::setenv("HORNFIX_BUDGET", "1234", 1);
  EXPECT_EQ(horn_budget_from_env(), 1234u);
  ::setenv("HORNFIX_BUDGET", "junk", 1);
  EXPECT_EQ(horn_budget_from_env(), kDefaultHornBudget);
  ::unsetenv("HORNFIX_BUDGET");
  EXPECT_EQ(horn_budget_from_env(), kDefaultHornBudget);
}

TEST(EvalLfp, CycleDetection) {
  const LfpFormula f = hornfix::testing::lfp(
      "exists u [lfp z1 z2, Z: exists y (E(z1,z2) | E(z1,y) & Z(y,z2))] (u,u)");
  EXPECT_TRUE(eval_lfp(f, graph(3, {{0, 1}, {1, 2}, {2, 0}})));
  Relation fix;
  EXPECT_FALSE(eval_lfp(f, graph(3, {{0, 1}, {1, 2}}), &fix));
  EXPECT_EQ(fix, Relation(2, {{0, 1}, {0, 2}, {1, 2}}));
}

TEST(EvalLfp, UniversalPrefix) {
  // Z(z): every node is an E-successor of z.
  const LfpFormula f = hornfix::testing::lfp("exists u [lfp z, Z: forall y (E(z,y))] (u)");
  EXPECT_TRUE(eval_lfp(f, graph(2, {{1, 0}, {1, 1}})));
  EXPECT_FALSE(eval_lfp(f, graph(2, {{1, 0}, {0, 1}})));
}

TEST(EvalSimLfp, AgreesWithTheProgramOnTransitiveClosure) {
  const Program p = hornfix::testing::program(std::string(kTc) + " G() :- T(x,x).");
  const SimLfpSystem sys = datalog_to_sim_lfp(p, "G");
  Structure cyc = graph(3, {{0, 1}, {1, 0}, {1, 2}});
  const SimLfpResult r = eval_sim_lfp(sys, cyc);
  EXPECT_EQ(r.relations.at("T"), eval_datalog(p, cyc).relation("T"));
  EXPECT_TRUE(r.goal_holds);
  EXPECT_FALSE(eval_sim_lfp(sys, graph(3, {{0, 1}})).goal_holds);
}
