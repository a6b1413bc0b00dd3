#pragma once

#include <string>
#include <vector>

#include "hornfix/ast.hpp"
#include "hornfix/structure.hpp"

namespace hornfix {

// Max of the rules' free-variable counts and all relation arities.
std::size_t compute_m(const Program& program);

// Canonical depth variables: i_x is `i@x`, i_{x^y} is `i@x@y` with the pair
// sorted, i_{x^x} is i_x. Anything involving the constant `root` is the
// constant `0`.
class PairVarTable {
 public:
  static Term single(const Term& x);
  static Term pair(const Term& x, const Term& y);
};

// The triangular expansion (x1..xr)*. Constants other than root throw
// UnsupportedLiteral.
std::vector<Term> star_args(const std::vector<Term>& args);

// Pi -> Pi* over the characteristic vocabulary. Each universal literal adds
// the four rules $Q_k, $Q_k, $Q1_k, $Q2_k and is replaced by $Q2_k.
Program compile(const Program& program, std::size_t m);
inline Program compile(const Program& program) { return compile(program, compute_m(program)); }

struct Prop6Row {
  std::string symbol;
  std::size_t expected = 0;  // |char image of X on T|
  std::size_t actual = 0;    // |X* on S_T|
  bool pass = false;
};

struct Prop6Report {
  std::size_t m = 0;
  std::vector<Prop6Row> rows;
  bool goal_checked = false;
  bool goal_tree = false;   // T |= (Pi, P)
  bool goal_sigma = false;  // S_T |= (Pi*, P*)

  bool passed() const;
};

// Builds T = C(A), S_T, evaluates Pi on T and Pi* on S_T and compares every
// intentional relation through its characteristic image. Also compares each
// universal literal's $Q2_k with the image of the relation it replaces.
// `goal` may be empty.
Prop6Report verify_prop6(const Structure& a, const Program& program, const std::string& goal);

std::string format_report(const Prop6Report& report);

}  // namespace hornfix
