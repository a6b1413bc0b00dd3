#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

namespace hornfix {

// ---------------------------------------------------------------------------
// Diagnostics

struct SourceSpan {
  std::size_t start = 0;
  std::size_t end = 0;
  std::size_t line = 0;
  std::size_t column = 0;
};

enum class DiagnosticCode {
  Syntax,
  NegatedIntentional,
  UniversalOverExtensional,
  ArityMismatch,
  UnknownSymbol,
  NameClash,
  BadUniversal,
  NonExistentialPrefix,
  NegatedSecondOrder,
  HeadNotSecondOrder,
  NegativeFixpointVariable,
  NotDNF,
  TupleArityMismatch,
  EmptyDomain,
  ElementOutOfRange,
  DuplicateDeclaration,
};

const char* to_string(DiagnosticCode code);

struct Diagnostic {
  SourceSpan span;
  DiagnosticCode code;
  std::string message;
};

std::string format_diagnostic(const Diagnostic& d);

// ---------------------------------------------------------------------------
// Vocabularies and terms

struct Vocabulary {
  std::map<std::string, std::size_t> relations;
  std::set<std::string> constants;

  bool has_relation(const std::string& name) const {
    return relations.count(name) != 0;
  }
  std::optional<std::size_t> arity(const std::string& name) const;

  friend bool operator==(const Vocabulary&, const Vocabulary&) = default;
};

struct Term {
  enum class Kind { Variable, Constant };
  Kind kind = Kind::Variable;
  std::string name;

  static Term var(std::string n) { return {Kind::Variable, std::move(n)}; }
  static Term constant(std::string n) { return {Kind::Constant, std::move(n)}; }
  bool is_var() const { return kind == Kind::Variable; }

  friend bool operator==(const Term&, const Term&) = default;
};

enum class LiteralKind { Positive, Negative, Equality, Inequality, Universal };

// A body literal. Equality and Inequality carry exactly two args and no
// relation. Universal is `forall universal_vars: relation(args)`; the bound
// variables must occur among the args.
struct Literal {
  LiteralKind kind = LiteralKind::Positive;
  std::string relation;
  std::vector<Term> args;
  std::vector<std::string> universal_vars;
  SourceSpan span;

  static Literal atom(std::string rel, std::vector<Term> args);
  static Literal negated(std::string rel, std::vector<Term> args);
  static Literal eq(Term a, Term b);
  static Literal neq(Term a, Term b);
  static Literal forall(std::vector<std::string> vars, std::string rel,
                        std::vector<Term> args);

  bool is_atom_kind() const {
    return kind == LiteralKind::Positive || kind == LiteralKind::Negative ||
           kind == LiteralKind::Universal;
  }

  friend bool operator==(const Literal& a, const Literal& b) {
    return a.kind == b.kind && a.relation == b.relation && a.args == b.args &&
           a.universal_vars == b.universal_vars;
  }
};

struct Rule {
  std::string head;
  std::vector<Term> head_args;
  std::vector<Literal> body;
  SourceSpan span;

  friend bool operator==(const Rule& a, const Rule& b) {
    return a.head == b.head && a.head_args == b.head_args && a.body == b.body;
  }
};

struct Program {
  Vocabulary vocabulary;
  std::vector<Rule> rules;

  std::set<std::string> intentional() const;
  std::set<std::string> extensional() const;

  friend bool operator==(const Program&, const Program&) = default;
};

// ---------------------------------------------------------------------------
// Existential second-order Horn sentences

struct SoVariable {
  std::string name;
  std::size_t arity = 0;
  friend bool operator==(const SoVariable&, const SoVariable&) = default;
};

struct HornClause {
  std::vector<Literal> alphas;  // Positive or Universal atoms over SO variables
  std::vector<Literal> betas;   // extensional (negated) atoms and (in)equalities
  std::optional<Literal> head;  // nullopt is bottom
  SourceSpan span;

  friend bool operator==(const HornClause& a, const HornClause& b) {
    return a.alphas == b.alphas && a.betas == b.betas && a.head == b.head;
  }
};

struct HornSentence {
  std::vector<SoVariable> so_vars;
  std::vector<std::string> fo_vars;
  std::vector<HornClause> clauses;

  const SoVariable* find_so_var(const std::string& name) const;
  // Extensional symbols and constants mentioned by the betas.
  Vocabulary extensional_vocabulary() const;

  friend bool operator==(const HornSentence&, const HornSentence&) = default;
};

// ---------------------------------------------------------------------------
// Normal-form least fixed-point sentences:
//   exists u [lfp z1..zk, Z: Q1 y1 .. Qm ym (C1 | .. | Cn)] (u,..,u)

enum class Quantifier { Exists, Forall };

struct QuantifiedVar {
  Quantifier quantifier = Quantifier::Exists;
  std::string var;
  friend bool operator==(const QuantifiedVar&, const QuantifiedVar&) = default;
};

struct LfpFormula {
  std::string exist_var;
  std::vector<std::string> lfp_vars;
  std::string lfp_relation;
  std::vector<QuantifiedVar> prefix;
  std::vector<std::vector<Literal>> clauses;  // DNF; each clause a conjunction
  std::vector<Term> fixpoint_tuple;           // u repeated to the arity of Z

  Vocabulary extensional_vocabulary() const;

  friend bool operator==(const LfpFormula&, const LfpFormula&) = default;
};

// ---------------------------------------------------------------------------
// Simultaneous least fixed-point systems

struct SimDisjunct {
  std::vector<std::string> exists_vars;
  std::vector<Literal> literals;
  friend bool operator==(const SimDisjunct&, const SimDisjunct&) = default;
};

struct SimDefinition {
  std::string relation;
  std::vector<std::string> args;
  std::vector<SimDisjunct> disjuncts;
  friend bool operator==(const SimDefinition&, const SimDefinition&) = default;
};

struct SimLfpSystem {
  Vocabulary vocabulary;  // extensional symbols
  std::vector<SimDefinition> definitions;
  std::string goal_relation;
  std::vector<Term> goal_args;

  const SimDefinition* find(const std::string& relation) const;
};

// ---------------------------------------------------------------------------
// Operations

// Rewrites the head into pairwise-distinct variables, moving constants and
// repeated variables into equality literals. Idempotent.
Rule normalize(const Rule& rule);
bool is_normal(const Rule& rule);

std::vector<Diagnostic> validate(const Program& program);
std::vector<Diagnostic> validate(const HornSentence& sentence);
std::vector<Diagnostic> validate(const LfpFormula& formula);

// Distinct variables with a free occurrence in the rule, in order of first
// occurrence (head first). Variables bound by a universal literal are skipped.
std::vector<std::string> free_variables(const Rule& rule);
std::size_t free_variable_count(const Rule& rule);

std::vector<std::string> free_variables(const Literal& literal);

// Fresh-name helper: returns `base`, or `base` with a numeric suffix, such that
// the result is not contained in `taken`. The result is inserted into `taken`.
std::string fresh_name(const std::string& base, std::set<std::string>& taken);

}  // namespace hornfix
