#include <gtest/gtest.h>

#include "hornfix/ast.hpp"
#include "test_util.hpp"

using namespace hornfix;
using hornfix::testing::has_code;

namespace {

Term v(const char* n) { return Term::var(n); }
Term k(const char* n) { return Term::constant(n); }

}  // namespace

TEST(Normalize, RepeatedAndConstantHeadArgumentsBecomeEqualities) {
  Rule r{"P", {v("x"), v("x"), k("c")}, {Literal::atom("E", {v("x"), v("y")})}, {}};
  Rule n = normalize(r);
  ASSERT_EQ(n.head_args.size(), 3u);
  EXPECT_EQ(n.head_args[0], v("x"));
  EXPECT_EQ(n.head_args[1], v("$h"));
  EXPECT_EQ(n.head_args[2], v("$h1"));
  ASSERT_EQ(n.body.size(), 3u);
  EXPECT_EQ(n.body[1], Literal::eq(v("$h"), v("x")));
  EXPECT_EQ(n.body[2], Literal::eq(v("$h1"), k("c")));
  EXPECT_TRUE(is_normal(n));
  EXPECT_EQ(normalize(n), n);
}

TEST(Normalize, AlreadyNormalRuleIsUnchanged) {
  Rule r{"T", {v("x"), v("y")}, {Literal::atom("E", {v("x"), v("y")})}, {}};
  EXPECT_TRUE(is_normal(r));
  EXPECT_EQ(normalize(r), r);
}

TEST(FreeVariables, HeadFirstAndUniversalBoundSkipped) {
  Rule r{"A",
         {v("x")},
         {Literal::forall({"y"}, "B", {v("y"), v("x")}), Literal::atom("E", {v("x"), v("z")})},
         {}};
  EXPECT_EQ(free_variables(r), (std::vector<std::string>{"x", "z"}));
  EXPECT_EQ(free_variable_count(r), 2u);
  EXPECT_EQ(free_variables(r.body[0]), std::vector<std::string>{"x"});
}

TEST(FreshName, AppendsTheFirstFreeSuffix) {
  std::set<std::string> taken = {"a", "a1"};
  EXPECT_EQ(fresh_name("b", taken), "b");
  EXPECT_EQ(fresh_name("a", taken), "a2");
  EXPECT_EQ(fresh_name("a", taken), "a3");
  EXPECT_TRUE(taken.count("a3"));
}

TEST(Program, IntentionalAreExactlyTheHeads) {
  Program p = hornfix::testing::program("T(x,y) :- E(x,y). T(x,y) :- E(x,z), T(z,y).");
  EXPECT_EQ(p.intentional(), std::set<std::string>{"T"});
  EXPECT_EQ(p.extensional(), std::set<std::string>{"E"});
}

TEST(Validate, RejectsNegatedIntentional) {
  Program p;
  p.vocabulary.relations = {{"A", 1}, {"U", 1}};
  p.rules = {{"A", {v("x")}, {Literal::atom("U", {v("x")})}, {}},
             {"A", {v("x")}, {Literal::negated("A", {v("x")}), Literal::atom("U", {v("x")})}, {}}};
  EXPECT_TRUE(has_code(validate(p), DiagnosticCode::NegatedIntentional));
}

TEST(Validate, RejectsUniversalOverExtensional) {
  Program p;
  p.vocabulary.relations = {{"A", 1}, {"E", 2}};
  p.rules = {{"A", {v("x")}, {Literal::forall({"y"}, "E", {v("x"), v("y")})}, {}}};
  EXPECT_TRUE(has_code(validate(p), DiagnosticCode::UniversalOverExtensional));
}

TEST(Validate, RejectsArityMismatchAndUnknownSymbols) {
  Program p;
  p.vocabulary.relations = {{"A", 1}, {"E", 2}};
  p.rules = {{"A", {v("x")}, {Literal::atom("E", {v("x")})}, {}},
             {"A", {v("x")}, {Literal::atom("F", {v("x")})}, {}}};
  auto ds = validate(p);
  EXPECT_TRUE(has_code(ds, DiagnosticCode::ArityMismatch));
  EXPECT_TRUE(has_code(ds, DiagnosticCode::UnknownSymbol));
}

TEST(Validate, RejectsBoundVariableUsedElsewhere) {
  Program p;
  p.vocabulary.relations = {{"A", 1}, {"B", 2}, {"U", 1}};
  p.rules = {{"B", {v("x"), v("y")}, {Literal::atom("U", {v("x")})}, {}},
             {"A", {v("x")},
              {Literal::forall({"y"}, "B", {v("x"), v("y")}), Literal::atom("U", {v("y")})},
              {}}};
  EXPECT_TRUE(has_code(validate(p), DiagnosticCode::BadUniversal));
}

TEST(Validate, AcceptsTheAlternatingPathProgram) {
  Program p = hornfix::testing::program(
      "const s t. Palt(x,y) :- x = y. Palt(x,y) :- Puni(x), forall z: Q(x,z,y)."
      "Q(x,z,y) :- !E(x,z), y = y. P() :- Palt(s,t).");
  EXPECT_TRUE(validate(p).empty());
}

TEST(Validate, HornDuplicateSecondOrderVariable) {
  HornSentence s;
  s.so_vars = {{"R", 1}, {"R", 1}};
  EXPECT_TRUE(has_code(validate(s), DiagnosticCode::DuplicateDeclaration));
}

TEST(Validate, LfpFixpointVariableMustBePositive) {
  LfpFormula f;
  f.exist_var = "u";
  f.lfp_vars = {"z"};
  f.lfp_relation = "Z";
  f.clauses = {{Literal::negated("Z", {v("z")})}};
  f.fixpoint_tuple = {v("u")};
  EXPECT_TRUE(has_code(validate(f), DiagnosticCode::NegativeFixpointVariable));
}

TEST(Diagnostics, FormatCarriesPositionAndCode) {
  Diagnostic d{{0, 0, 3, 7}, DiagnosticCode::NotDNF, "nested quantifier"};
  const std::string text = format_diagnostic(d);
  EXPECT_NE(text.find("3:7"), std::string::npos);
  EXPECT_NE(text.find("nested quantifier"), std::string::npos);
}
