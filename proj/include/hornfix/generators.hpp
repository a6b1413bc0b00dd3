#pragma once

#include <string>

#include "hornfix/ast.hpp"
#include "hornfix/random.hpp"
#include "hornfix/structure.hpp"
#include "hornfix/trees.hpp"

namespace hornfix {

// Each tuple of each relation is present with probability num/den; constants
// are uniform.
Structure random_structure(Rng& rng, const Vocabulary& vocabulary, std::size_t n,
                           std::uint64_t num = 1, std::uint64_t den = 2);

// The alternating-path program: Palt, Q, goal P over E, Puni, s, t.
const std::string& agap_program_text();
Program agap_program();
// n nodes, random E and Puni, random s and t.
Structure random_alternating_graph(Rng& rng, std::size_t n);

struct ProgramShape {
  std::size_t max_rules = 5;
  std::size_t max_body = 3;
  std::size_t max_intentional = 3;
  std::size_t max_arity = 2;
  bool universal = true;
};

// Over E/2, U/1 and the constant c. Every intentional symbol heads a rule;
// `Goal` is 0-ary.
Program random_program(Rng& rng, const ProgramShape& shape = {});

// n <= 3 friendly: at most two second-order variables of arity <= 2.
HornSentence random_horn(Rng& rng);

// Normal-form formula over E/2 and U/1.
LfpFormula random_lfp(Rng& rng);

// Over E/2, R1/arity, root; at most one universal literal; 0-ary Goal.
Program random_tree_program(Rng& rng, std::size_t r1_arity);

// Union of randomly chosen characteristic classes.
Relation random_invariant_relation(Rng& rng, const PerfectTree& tree, std::size_t arity);

}  // namespace hornfix
