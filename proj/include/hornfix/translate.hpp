#pragma once

#include <string>

#include "hornfix/ast.hpp"

namespace hornfix {

// A program together with its designated goal relation.
struct DatalogQuery {
  Program program;
  std::string goal;
};

// A |= sentence iff A does not satisfy (program, goal). Adds a tautological
// rule per second-order variable, one rule per clause, and `goal() :- v != v`
// when no clause has head false.
DatalogQuery horn_to_datalog(const HornSentence& sentence);

// A |= result iff A does not satisfy (program, goal). Zero-ary intentional
// symbols used in bodies are first moved into heads through a fresh unary
// companion Q' and the rule Q() :- Q'(x). Throws GoalNotZeroAry.
HornSentence datalog_to_horn(const Program& program, const std::string& goal);

// A |= formula iff A satisfies (program, goal).
DatalogQuery lfp_to_datalog(const LfpFormula& formula);

// One definition per intentional symbol: the disjunction over its rules of the
// existentially closed bodies.
SimLfpSystem datalog_to_sim_lfp(const Program& program, const std::string& goal);

}  // namespace hornfix
