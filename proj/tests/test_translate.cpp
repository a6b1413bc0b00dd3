#include <gtest/gtest.h>

#include "hornfix/eval.hpp"
#include "hornfix/generators.hpp"
#include "hornfix/translate.hpp"
#include "test_util.hpp"

using namespace hornfix;
using hornfix::testing::thrown;

namespace {

Vocabulary graph_vocabulary() {
  Vocabulary v;
  v.relations = {{"E", 2}, {"U", 1}};
  return v;
}

}  // namespace

TEST(HornToDatalog, OneRulePerVariableAndClause) {
  const HornSentence phi = hornfix::testing::horn(
      "exists C/1 forall x y ( -> C(s) ; C(x) & E(x,y) -> C(y) ; C(t) -> false )");
  const DatalogQuery q = horn_to_datalog(phi);
  EXPECT_EQ(q.goal, "$P");
  EXPECT_EQ(q.program.vocabulary.arity("$P"), 0u);
  ASSERT_EQ(q.program.rules.size(), 4u);
  EXPECT_EQ(q.program.rules[0].head, "C");
  EXPECT_EQ(q.program.rules[0].body[0].relation, "C");
  EXPECT_EQ(q.program.rules[3].head, "$P");
  EXPECT_TRUE(validate(q.program).empty());
}

TEST(HornToDatalog, WithoutBottomTheGoalNeverFires) {
  const HornSentence phi = hornfix::testing::horn("exists C/1 forall x ( U(x) -> C(x) )");
  const DatalogQuery q = horn_to_datalog(phi);
  EXPECT_EQ(q.program.rules.size(), 3u);
  Rng rng(31);
  for (int i = 0; i < 10; ++i)
    EXPECT_FALSE(eval_datalog(q.program, random_structure(rng, graph_vocabulary(), 3)).holds(q.goal));
}

TEST(HornToDatalog, NegationOfBruteForceVerdict) {
  Rng rng(32);
  for (int i = 0; i < 80; ++i) {
    const HornSentence phi = random_horn(rng);
    const Structure a = random_structure(rng, graph_vocabulary(), rng.between(1, 3));
    const DatalogQuery q = horn_to_datalog(phi);
    EXPECT_NE(eval_horn_brute_force(phi, a), eval_datalog(q.program, a).holds(q.goal))
        << print(phi) << print(a);
  }
}

TEST(DatalogToHorn, GoalMustBeZeroAry) {
  EXPECT_EQ(thrown([&] { datalog_to_horn(agap_program(), "Palt"); }), ErrorCode::GoalNotZeroAry);
  EXPECT_EQ(thrown([&] { datalog_to_horn(agap_program(), "E"); }), ErrorCode::GoalNotZeroAry);
}

TEST(DatalogToHorn, ZeroAryBodySymbolsGetACompanion) {
  const Program p = hornfix::testing::program("B() :- U(x). G() :- B().");
  const HornSentence phi = datalog_to_horn(p, "G");
  std::set<std::string> names;
  for (const auto& v : phi.so_vars) names.insert(v.name);
  EXPECT_EQ(names, (std::set<std::string>{"B", "B'"}));
  EXPECT_EQ(phi.find_so_var("B'")->arity, 1u);
  EXPECT_TRUE(validate(phi).empty());

  Structure a;
  a.size = 2;
  a.set_relation("U", Relation(1, {{1}}));
  EXPECT_FALSE(eval_horn_brute_force(phi, a));
  a.set_relation("U", Relation(1));
  EXPECT_TRUE(eval_horn_brute_force(phi, a));
}

TEST(DatalogToHorn, AlternatingPathProgram) {
  const HornSentence phi = datalog_to_horn(agap_program(), "P");
  EXPECT_EQ(phi.so_vars.size(), 2u);
  EXPECT_EQ(phi.clauses.size(), 6u);
  EXPECT_FALSE(phi.clauses.back().head.has_value());
}

TEST(LfpToDatalog, TransitiveClosureShape) {
  const LfpFormula f = hornfix::testing::lfp(
      "exists u [lfp z1 z2, Z: exists y (E(z1,z2) | E(z1,y) & Z(y,z2))] (u,u)");
  const DatalogQuery q = lfp_to_datalog(f);
  ASSERT_EQ(q.program.rules.size(), 5u);
  EXPECT_EQ(q.program.vocabulary.arity(q.goal), 0u);
  EXPECT_EQ(q.program.rules[0].head_args.size(), 3u);
  EXPECT_EQ(q.program.rules[3].head, "Z");
  EXPECT_TRUE(validate(q.program).empty());
}

TEST(LfpToDatalog, UniversalPrefixBecomesAUniversalLiteral) {
  const LfpFormula f = hornfix::testing::lfp("exists u [lfp z, Z: forall y (E(z,y))] (u)");
  const DatalogQuery q = lfp_to_datalog(f);
  bool found = false;
  for (const auto& r : q.program.rules)
    for (const auto& l : r.body) found = found || l.kind == LiteralKind::Universal;
  EXPECT_TRUE(found);
}

TEST(LfpToDatalog, AgreesWithDirectEvaluation) {
  Rng rng(33);
  for (int i = 0; i < 40; ++i) {
    const LfpFormula f = random_lfp(rng);
    const DatalogQuery q = lfp_to_datalog(f);
    for (int j = 0; j < 10; ++j) {
      const Structure a = random_structure(rng, graph_vocabulary(), rng.between(1, 4));
      EXPECT_EQ(eval_lfp(f, a), eval_datalog(q.program, a).holds(q.goal)) << print(f);
    }
  }
}

TEST(DatalogToSimLfp, OneDefinitionPerSymbolInOrder) {
  const SimLfpSystem sys = datalog_to_sim_lfp(agap_program(), "P");
  ASSERT_EQ(sys.definitions.size(), 3u);
  EXPECT_EQ(sys.definitions[0].relation, "Palt");
  EXPECT_EQ(sys.definitions[0].args, (std::vector<std::string>{"$x1", "$x2"}));
  EXPECT_EQ(sys.definitions[0].disjuncts.size(), 3u);
  EXPECT_EQ(sys.definitions[0].disjuncts[1].exists_vars.size(), 1u);
  EXPECT_EQ(sys.definitions[2].relation, "P");
}

TEST(DatalogToSimLfp, AgreesWithTheProgram) {
  Rng rng(34);
  Vocabulary v = graph_vocabulary();
  v.constants = {"c"};
  for (int i = 0; i < 60; ++i) {
    const Program p = random_program(rng);
    const Structure a = random_structure(rng, v, rng.between(1, 3));
    const EvalResult r = eval_datalog(p, a);
    const SimLfpResult s = eval_sim_lfp(datalog_to_sim_lfp(p, "Goal"), a);
    for (const auto& x : p.intentional()) EXPECT_EQ(s.relations.at(x), r.relation(x)) << print(p);
    EXPECT_EQ(s.goal_holds, r.holds("Goal"));
  }
}
