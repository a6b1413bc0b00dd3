#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "hornfix/ast.hpp"
#include "hornfix/structure.hpp"

namespace hornfix {

// Stages P_(0), P_(1), ... of the simultaneous iteration. The last two stages
// are equal.
struct FixpointTrace {
  std::vector<std::map<std::string, Relation>> stages;

  // Number of rounds until stabilization.
  std::size_t stage_count() const { return stages.empty() ? 0 : stages.size() - 1; }
};

// One line per stage: `stage k: P={...} Q={...}`.
std::string dump_trace(const FixpointTrace& trace);

struct EvalResult {
  Structure expanded;  // input plus the intentional relations at the fixed point

  const Relation& relation(const std::string& name) const { return expanded.relation(name); }
  // 0-ary goal: holds iff the relation is {()}. Otherwise: non-empty.
  bool holds(const std::string& goal) const;
};

// Bottom-up naive evaluation of a DATALOG^r program. Throws MissingSymbol when
// the input lacks a relation or constant the rules use.
EvalResult eval_datalog(const Program& program, const Structure& input,
                        FixpointTrace* trace = nullptr);

// Default number of second-order assignments the brute-force checker may try.
inline constexpr std::uint64_t kDefaultHornBudget = std::uint64_t{1} << 24;

// Budget from HORNFIX_BUDGET if set and parseable, else the default.
std::uint64_t horn_budget_from_env();

// Exhaustive existential second-order model checking. Throws BudgetExceeded
// when 2^(sum of n^arity) exceeds the budget.
bool eval_horn_brute_force(const HornSentence& sentence, const Structure& input,
                           std::uint64_t budget = kDefaultHornBudget);

// Iterates the normal-form matrix from the empty relation and tests the
// diagonal tuple (u,..,u) against the fixed point.
bool eval_lfp(const LfpFormula& formula, const Structure& input,
              Relation* fixpoint = nullptr);

struct SimLfpResult {
  std::map<std::string, Relation> relations;
  bool goal_holds = false;
};

SimLfpResult eval_sim_lfp(const SimLfpSystem& system, const Structure& input);

}  // namespace hornfix
