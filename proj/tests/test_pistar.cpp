#include <gtest/gtest.h>

#include "hornfix/generators.hpp"
#include "hornfix/pistar.hpp"
#include "hornfix/trees.hpp"
#include "test_util.hpp"

using namespace hornfix;
using hornfix::testing::thrown;

namespace {

Term v(const char* n) { return Term::var(n); }

const char* kTreeTc =
    "const root. rel E/2 R1/1."
    "T(x,y) :- E(x,y). T(x,y) :- E(x,z), T(z,y). Goal() :- T(root,x), R1(x).";

// Alternating reachability on the tree: every path from x reaches R1.
const char* kTreeUniversal =
    "const root. rel E/2 R1/1."
    "W(x) :- R1(x)."
    "W(x) :- E(x,y), forall w: C(x,w)."
    "C(x,w) :- !E(x,w). C(x,w) :- W(w)."
    "Goal() :- W(root).";

Structure base(std::size_t n, std::set<Tuple> r1) {
  Structure a;
  a.size = n;
  a.set_relation("R1", Relation(1, std::move(r1)));
  return a;
}

}  // namespace

TEST(ComputeM, AlternatingPathProgramIsThree) { EXPECT_EQ(compute_m(agap_program()), 3u); }

TEST(ComputeM, PropositionalRuleIsZero) {
  EXPECT_EQ(compute_m(hornfix::testing::program("P() :- .")), 0u);
}

TEST(ComputeM, MonotoneUnderAddingRules) {
  Rng rng(51);
  for (int i = 0; i < 30; ++i) {
    Program p = random_program(rng);
    const std::size_t before = compute_m(p);
    Program q = random_program(rng);
    p.rules.insert(p.rules.end(), q.rules.begin(), q.rules.end());
    for (const auto& [name, a] : q.vocabulary.relations) p.vocabulary.relations.emplace(name, a);
    EXPECT_GE(compute_m(p), before);
  }
}

TEST(StarArgs, LayoutAndRoot) {
  EXPECT_EQ(star_args({v("x"), v("y")}), (std::vector<Term>{v("i@x"), v("i@x@y"), v("i@y")}));
  EXPECT_EQ(star_args({v("x")}), std::vector<Term>{v("i@x")});
  EXPECT_EQ(PairVarTable::pair(v("y"), v("x")), PairVarTable::pair(v("x"), v("y")));
  EXPECT_EQ(PairVarTable::pair(v("x"), v("x")), PairVarTable::single(v("x")));
  const Term root = Term::constant("root");
  EXPECT_EQ(PairVarTable::single(root), Term::constant(kZero));
  EXPECT_EQ(PairVarTable::pair(root, v("x")), Term::constant(kZero));
  EXPECT_EQ(thrown([] { PairVarTable::single(Term::constant("c")); }),
            ErrorCode::UnsupportedLiteral);
  for (std::size_t r = 0; r <= 5; ++r) {
    std::vector<Term> args;
    for (std::size_t i = 0; i < r; ++i) args.push_back(v(("x" + std::to_string(i)).c_str()));
    EXPECT_EQ(star_args(args).size(), triangular(r));
  }
}

TEST(Compile, EdgeRule) {
  const Program p = hornfix::testing::program("rel E/2. T(x,y) :- E(x,y).");
  const Program s = compile(p);
  ASSERT_EQ(s.rules.size(), 1u);
  const Rule& r = s.rules[0];
  EXPECT_EQ(r.head, "T*");
  EXPECT_EQ(r.head_args, (std::vector<Term>{v("i@x"), v("i@x@y"), v("i@y")}));
  ASSERT_EQ(r.body.size(), 3u);
  EXPECT_EQ(r.body[0], Literal::eq(v("i@x"), v("i@x@y")));
  EXPECT_EQ(r.body[1], Literal::atom(kSucc, {v("i@x@y"), v("i@y")}));
  EXPECT_EQ(r.body[2], Literal::atom(kFul, {v("i@x"), v("i@x@y"), v("i@y")}));
}

TEST(Compile, PaddingRepeatsTheLastFreeVariable) {
  const Program p =
      hornfix::testing::program("rel E/2 R1/3. T(x) :- E(x,x). S(x,y,z) :- R1(x,y,z).");
  const Program s = compile(p);
  const Literal& pad = s.rules[0].body.back();
  EXPECT_EQ(pad.relation, kFul);
  EXPECT_EQ(pad.args, star_args({v("x"), v("x"), v("x")}));
}

TEST(Compile, RootBecomesZero) {
  const Program s = compile(hornfix::testing::program(kTreeTc));
  const Rule& goal = s.rules.back();
  EXPECT_EQ(goal.head, "Goal*");
  EXPECT_EQ(goal.body[0].args[0], Term::constant(kZero));
}

TEST(Compile, UniversalLiteralAddsFourRules) {
  const Program p = hornfix::testing::program(kTreeUniversal);
  const Program s = compile(p);
  EXPECT_EQ(s.rules.size(), p.rules.size() + 4);
  std::vector<std::string> heads;
  for (std::size_t i = p.rules.size(); i < s.rules.size(); ++i) heads.push_back(s.rules[i].head);
  EXPECT_EQ(heads, (std::vector<std::string>{"$Q_1", "$Q_1", "$Q1_1", "$Q2_1"}));
  EXPECT_EQ(s.rules[p.rules.size()].body[0].kind, LiteralKind::Negative);
  EXPECT_EQ(s.rules[p.rules.size() + 2].body[0].kind, LiteralKind::Universal);
  EXPECT_EQ(s.rules[p.rules.size() + 3].body[1].relation, kFul);
}

TEST(Compile, OutputValidatesAndIsFullyStarred) {
  Rng rng(52);
  for (int i = 0; i < 50; ++i) {
    const Program p = random_tree_program(rng, rng.between(1, 2));
    const Program s = compile(p);
    EXPECT_TRUE(validate(s).empty()) << format_diagnostic(validate(s).front());
    const auto idb = p.intentional();
    for (const auto& r : s.rules) {
      EXPECT_FALSE(idb.count(r.head));
      for (const auto& l : r.body) EXPECT_FALSE(l.is_atom_kind() && idb.count(l.relation));
    }
  }
}

TEST(Compile, UnsupportedConstant) {
  const Program p = hornfix::testing::program("const c. rel E/2. T(x) :- E(x,c).");
  EXPECT_EQ(thrown([&] { compile(p); }), ErrorCode::UnsupportedLiteral);
}

TEST(VerifyProp6, TransitiveClosureOnTwoLevels) {
  const Prop6Report r = verify_prop6(base(2, {{1}}), hornfix::testing::program(kTreeTc), "Goal");
  EXPECT_TRUE(r.passed()) << format_report(r);
  EXPECT_TRUE(r.goal_checked);
  EXPECT_TRUE(r.goal_tree);
  EXPECT_EQ(r.rows.size(), 2u);
}

TEST(VerifyProp6, UniversalProgram) {
  const Program p = hornfix::testing::program(kTreeUniversal);
  for (const auto& a : {base(2, {{1}}), base(2, {}), base(3, {{2}}), base(3, {{1}})}) {
    const Prop6Report r = verify_prop6(a, p, "Goal");
    EXPECT_TRUE(r.passed()) << format_report(r);
    // The last row covers the helper relation of the single universal literal.
    EXPECT_EQ(r.rows.back().symbol, "$Q2_1");
    EXPECT_TRUE(r.rows.back().pass);
  }
  EXPECT_TRUE(verify_prop6(base(3, {{2}}), p, "Goal").goal_tree);
  EXPECT_FALSE(verify_prop6(base(3, {}), p, "Goal").goal_tree);
}

TEST(VerifyProp6, RandomProgramsAgree) {
  Rng rng(53);
  for (int i = 0; i < 25; ++i) {
    const std::size_t r1 = rng.between(1, 2);
    Vocabulary voc;
    voc.relations = {{"R1", r1}};
    const Structure a = random_structure(rng, voc, rng.between(1, 3));
    const Program p = random_tree_program(rng, r1);
    const Prop6Report r = verify_prop6(a, p, "Goal");
    EXPECT_TRUE(r.passed()) << format_report(r);
  }
}
