#include "hornfix/ast.hpp"

#include <algorithm>
#include <sstream>

namespace hornfix {

const char* to_string(DiagnosticCode code) {
  switch (code) {
    case DiagnosticCode::Syntax: return "Syntax";
    case DiagnosticCode::NegatedIntentional: return "NegatedIntentional";
    case DiagnosticCode::UniversalOverExtensional: return "UniversalOverExtensional";
    case DiagnosticCode::ArityMismatch: return "ArityMismatch";
    case DiagnosticCode::UnknownSymbol: return "UnknownSymbol";
    case DiagnosticCode::NameClash: return "NameClash";
    case DiagnosticCode::BadUniversal: return "BadUniversal";
    case DiagnosticCode::NonExistentialPrefix: return "NonExistentialPrefix";
    case DiagnosticCode::NegatedSecondOrder: return "NegatedSecondOrder";
    case DiagnosticCode::HeadNotSecondOrder: return "HeadNotSecondOrder";
    case DiagnosticCode::NegativeFixpointVariable: return "NegativeFixpointVariable";
    case DiagnosticCode::NotDNF: return "NotDNF";
    case DiagnosticCode::TupleArityMismatch: return "TupleArityMismatch";
    case DiagnosticCode::EmptyDomain: return "EmptyDomain";
    case DiagnosticCode::ElementOutOfRange: return "ElementOutOfRange";
    case DiagnosticCode::DuplicateDeclaration: return "DuplicateDeclaration";
  }
  return "?";
}

std::string format_diagnostic(const Diagnostic& d) {
  std::ostringstream os;
  os << d.span.line << ":" << d.span.column << ": " << to_string(d.code) << ": "
     << d.message;
  return os.str();
}

std::optional<std::size_t> Vocabulary::arity(const std::string& name) const {
  auto it = relations.find(name);
  if (it == relations.end()) return std::nullopt;
  return it->second;
}

Literal Literal::atom(std::string rel, std::vector<Term> args) {
  Literal l;
  l.kind = LiteralKind::Positive;
  l.relation = std::move(rel);
  l.args = std::move(args);
  return l;
}

Literal Literal::negated(std::string rel, std::vector<Term> args) {
  Literal l = atom(std::move(rel), std::move(args));
  l.kind = LiteralKind::Negative;
  return l;
}

Literal Literal::eq(Term a, Term b) {
  Literal l;
  l.kind = LiteralKind::Equality;
  l.args = {std::move(a), std::move(b)};
  return l;
}

Literal Literal::neq(Term a, Term b) {
  Literal l = eq(std::move(a), std::move(b));
  l.kind = LiteralKind::Inequality;
  return l;
}

Literal Literal::forall(std::vector<std::string> vars, std::string rel,
                        std::vector<Term> args) {
  Literal l = atom(std::move(rel), std::move(args));
  l.kind = LiteralKind::Universal;
  l.universal_vars = std::move(vars);
  return l;
}

std::set<std::string> Program::intentional() const {
  std::set<std::string> out;
  for (const auto& r : rules) out.insert(r.head);
  return out;
}

std::set<std::string> Program::extensional() const {
  auto idb = intentional();
  std::set<std::string> out;
  for (const auto& [name, arity] : vocabulary.relations)
    if (!idb.count(name)) out.insert(name);
  return out;
}

const SoVariable* HornSentence::find_so_var(const std::string& name) const {
  for (const auto& v : so_vars)
    if (v.name == name) return &v;
  return nullptr;
}

namespace {

void collect_constants(const std::vector<Term>& args, Vocabulary& vocab) {
  for (const auto& t : args)
    if (!t.is_var()) vocab.constants.insert(t.name);
}

void collect_extensional(const Literal& lit, Vocabulary& vocab) {
  collect_constants(lit.args, vocab);
  if (!lit.relation.empty()) vocab.relations.emplace(lit.relation, lit.args.size());
}

}  // namespace

Vocabulary HornSentence::extensional_vocabulary() const {
  Vocabulary vocab;
  for (const auto& c : clauses) {
    for (const auto& b : c.betas) collect_extensional(b, vocab);
    for (const auto& a : c.alphas) collect_constants(a.args, vocab);
    if (c.head) collect_constants(c.head->args, vocab);
  }
  return vocab;
}

Vocabulary LfpFormula::extensional_vocabulary() const {
  Vocabulary vocab;
  for (const auto& clause : clauses)
    for (const auto& lit : clause) {
      if (lit.relation == lfp_relation) {
        collect_constants(lit.args, vocab);
        continue;
      }
      collect_extensional(lit, vocab);
    }
  return vocab;
}

const SimDefinition* SimLfpSystem::find(const std::string& relation) const {
  for (const auto& d : definitions)
    if (d.relation == relation) return &d;
  return nullptr;
}

// ---------------------------------------------------------------------------

std::vector<std::string> free_variables(const Literal& literal) {
  std::vector<std::string> out;
  for (const auto& t : literal.args) {
    if (!t.is_var()) continue;
    if (literal.kind == LiteralKind::Universal &&
        std::find(literal.universal_vars.begin(), literal.universal_vars.end(),
                  t.name) != literal.universal_vars.end())
      continue;
    if (std::find(out.begin(), out.end(), t.name) == out.end()) out.push_back(t.name);
  }
  return out;
}

std::vector<std::string> free_variables(const Rule& rule) {
  std::vector<std::string> out;
  auto add = [&](const std::string& v) {
    if (std::find(out.begin(), out.end(), v) == out.end()) out.push_back(v);
  };
  for (const auto& t : rule.head_args)
    if (t.is_var()) add(t.name);
  for (const auto& lit : rule.body)
    for (const auto& v : free_variables(lit)) add(v);
  return out;
}

std::size_t free_variable_count(const Rule& rule) {
  return free_variables(rule).size();
}

std::string fresh_name(const std::string& base, std::set<std::string>& taken) {
  std::string candidate = base;
  for (std::size_t i = 1; taken.count(candidate); ++i)
    candidate = base + std::to_string(i);
  taken.insert(candidate);
  return candidate;
}

namespace {

std::set<std::string> all_names_in(const Rule& rule) {
  std::set<std::string> names;
  for (const auto& t : rule.head_args) names.insert(t.name);
  for (const auto& lit : rule.body) {
    for (const auto& t : lit.args) names.insert(t.name);
    for (const auto& v : lit.universal_vars) names.insert(v);
  }
  return names;
}

}  // namespace

bool is_normal(const Rule& rule) {
  std::set<std::string> seen;
  for (const auto& t : rule.head_args) {
    if (!t.is_var() || !seen.insert(t.name).second) return false;
  }
  return true;
}

Rule normalize(const Rule& rule) {
  if (is_normal(rule)) return rule;
  Rule out = rule;
  out.head_args.clear();
  std::set<std::string> taken = all_names_in(rule);
  std::set<std::string> seen;
  std::vector<Literal> extra;
  for (const auto& t : rule.head_args) {
    if (t.is_var() && seen.insert(t.name).second) {
      out.head_args.push_back(t);
      continue;
    }
    Term fresh = Term::var(fresh_name("$h", taken));
    out.head_args.push_back(fresh);
    extra.push_back(Literal::eq(fresh, t));
  }
  out.body.insert(out.body.end(), extra.begin(), extra.end());
  return out;
}

// ---------------------------------------------------------------------------
// Validation

namespace {

class Diagnostics {
 public:
  void add(DiagnosticCode code, const SourceSpan& span, std::string message) {
    out_.push_back({span, code, std::move(message)});
  }
  std::vector<Diagnostic> take() { return std::move(out_); }

 private:
  std::vector<Diagnostic> out_;
};

std::string rule_label(std::size_t index, const Rule& rule) {
  return "rule " + std::to_string(index + 1) + " (" + rule.head + ")";
}

// Checks shared by every logic for a universal literal: at least one bound
// variable, all distinct, all among the args, none occurring free elsewhere.
void check_universal(const Literal& lit, const std::set<std::string>& free_elsewhere,
                     const std::string& where, Diagnostics& diags) {
  if (lit.universal_vars.empty()) {
    diags.add(DiagnosticCode::BadUniversal, lit.span,
              where + ": universal literal binds no variable");
    return;
  }
  std::set<std::string> seen;
  for (const auto& v : lit.universal_vars) {
    if (!seen.insert(v).second)
      diags.add(DiagnosticCode::BadUniversal, lit.span,
                where + ": variable " + v + " bound twice");
    bool occurs = std::any_of(lit.args.begin(), lit.args.end(), [&](const Term& t) {
      return t.is_var() && t.name == v;
    });
    if (!occurs)
      diags.add(DiagnosticCode::BadUniversal, lit.span,
                where + ": bound variable " + v + " does not occur in " + lit.relation);
    if (free_elsewhere.count(v))
      diags.add(DiagnosticCode::BadUniversal, lit.span,
                where + ": bound variable " + v + " also occurs free");
  }
}

void check_constants(const std::vector<Term>& args, const Vocabulary& vocab,
                     const SourceSpan& span, const std::string& where,
                     Diagnostics& diags) {
  for (const auto& t : args) {
    if (t.is_var()) {
      if (vocab.constants.count(t.name))
        diags.add(DiagnosticCode::NameClash, span,
                  where + ": variable " + t.name + " clashes with a constant");
    } else if (!vocab.constants.count(t.name)) {
      diags.add(DiagnosticCode::UnknownSymbol, span,
                where + ": unknown constant " + t.name);
    }
  }
}

}  // namespace

std::vector<Diagnostic> validate(const Program& program) {
  Diagnostics diags;
  const Vocabulary& vocab = program.vocabulary;
  for (const auto& c : vocab.constants)
    if (vocab.has_relation(c))
      diags.add(DiagnosticCode::NameClash, {}, "symbol " + c +
                                                   " is both a relation and a constant");

  const auto idb = program.intentional();
  for (std::size_t i = 0; i < program.rules.size(); ++i) {
    const Rule& rule = program.rules[i];
    const std::string where = rule_label(i, rule);

    auto head_arity = vocab.arity(rule.head);
    if (!head_arity) {
      diags.add(DiagnosticCode::UnknownSymbol, rule.span,
                where + ": unknown relation " + rule.head);
    } else if (*head_arity != rule.head_args.size()) {
      diags.add(DiagnosticCode::ArityMismatch, rule.span,
                where + ": head " + rule.head + " expects " +
                    std::to_string(*head_arity) + " arguments");
    }
    check_constants(rule.head_args, vocab, rule.span, where, diags);

    for (std::size_t j = 0; j < rule.body.size(); ++j) {
      const Literal& lit = rule.body[j];
      check_constants(lit.args, vocab, lit.span, where, diags);
      if (!lit.is_atom_kind()) {
        if (lit.args.size() != 2)
          diags.add(DiagnosticCode::ArityMismatch, lit.span,
                    where + ": (in)equality needs two terms");
        continue;
      }
      auto arity = vocab.arity(lit.relation);
      if (!arity) {
        diags.add(DiagnosticCode::UnknownSymbol, lit.span,
                  where + ": unknown relation " + lit.relation);
        continue;
      }
      if (*arity != lit.args.size())
        diags.add(DiagnosticCode::ArityMismatch, lit.span,
                  where + ": " + lit.relation + " expects " + std::to_string(*arity) +
                      " arguments, got " + std::to_string(lit.args.size()));
      const bool intentional = idb.count(lit.relation) != 0;
      if (lit.kind == LiteralKind::Negative && intentional)
        diags.add(DiagnosticCode::NegatedIntentional, lit.span,
                  where + ": intentional " + lit.relation + " occurs negated");
      if (lit.kind == LiteralKind::Universal) {
        if (!intentional)
          diags.add(DiagnosticCode::UniversalOverExtensional, lit.span,
                    where + ": universal quantifier over extensional " + lit.relation);
        std::set<std::string> free_elsewhere;
        for (const auto& t : rule.head_args)
          if (t.is_var()) free_elsewhere.insert(t.name);
        for (std::size_t k = 0; k < rule.body.size(); ++k) {
          if (k == j) {
            for (const auto& v : free_variables(lit)) free_elsewhere.insert(v);
            continue;
          }
          for (const auto& t : rule.body[k].args)
            if (t.is_var()) free_elsewhere.insert(t.name);
        }
        check_universal(lit, free_elsewhere, where, diags);
      }
    }
  }
  return diags.take();
}

std::vector<Diagnostic> validate(const HornSentence& sentence) {
  Diagnostics diags;
  std::set<std::string> so_names;
  for (const auto& v : sentence.so_vars)
    if (!so_names.insert(v.name).second)
      diags.add(DiagnosticCode::DuplicateDeclaration, {},
                "second-order variable " + v.name + " declared twice");
  std::set<std::string> fo_names;
  for (const auto& v : sentence.fo_vars)
    if (!fo_names.insert(v).second)
      diags.add(DiagnosticCode::DuplicateDeclaration, {},
                "variable " + v + " declared twice");

  std::map<std::string, std::size_t> ext_arity;
  for (std::size_t i = 0; i < sentence.clauses.size(); ++i) {
    const HornClause& clause = sentence.clauses[i];
    const std::string where = "clause " + std::to_string(i + 1);

    std::set<std::string> free_in_clause;
    auto note_free = [&](const Literal& lit) {
      for (const auto& v : free_variables(lit)) free_in_clause.insert(v);
    };
    for (const auto& a : clause.alphas) note_free(a);
    for (const auto& b : clause.betas) note_free(b);
    if (clause.head) note_free(*clause.head);
    for (const auto& v : free_in_clause)
      if (!fo_names.count(v))
        diags.add(DiagnosticCode::UnknownSymbol, clause.span,
                  where + ": variable " + v + " is not universally quantified");

    auto check_so_arity = [&](const Literal& lit) {
      const SoVariable* so = sentence.find_so_var(lit.relation);
      if (so && so->arity != lit.args.size())
        diags.add(DiagnosticCode::ArityMismatch, lit.span,
                  where + ": " + lit.relation + " expects " + std::to_string(so->arity) +
                      " arguments");
      return so;
    };

    for (const auto& a : clause.alphas) {
      if (a.kind != LiteralKind::Positive && a.kind != LiteralKind::Universal) {
        diags.add(DiagnosticCode::NegatedSecondOrder, a.span,
                  where + ": alpha literals must be positive second-order atoms");
        continue;
      }
      if (!check_so_arity(a)) {
        diags.add(a.kind == LiteralKind::Universal
                      ? DiagnosticCode::UniversalOverExtensional
                      : DiagnosticCode::UnknownSymbol,
                  a.span, where + ": " + a.relation + " is not a second-order variable");
        continue;
      }
      if (a.kind == LiteralKind::Universal) {
        std::set<std::string> elsewhere = free_in_clause;
        check_universal(a, elsewhere, where, diags);
      }
    }
    for (const auto& b : clause.betas) {
      if (b.kind == LiteralKind::Universal) {
        diags.add(DiagnosticCode::UniversalOverExtensional, b.span,
                  where + ": universal quantifier over extensional " + b.relation);
        continue;
      }
      if (b.kind == LiteralKind::Equality || b.kind == LiteralKind::Inequality) {
        if (b.args.size() != 2)
          diags.add(DiagnosticCode::ArityMismatch, b.span,
                    where + ": (in)equality needs two terms");
        continue;
      }
      if (sentence.find_so_var(b.relation)) {
        diags.add(DiagnosticCode::NegatedSecondOrder, b.span,
                  where + ": second-order variable " + b.relation +
                      " may only occur positively in a premise");
        continue;
      }
      auto [it, inserted] = ext_arity.emplace(b.relation, b.args.size());
      if (!inserted && it->second != b.args.size())
        diags.add(DiagnosticCode::ArityMismatch, b.span,
                  where + ": " + b.relation + " used with inconsistent arity");
    }
    if (clause.head) {
      if (clause.head->kind != LiteralKind::Positive ||
          !sentence.find_so_var(clause.head->relation)) {
        diags.add(DiagnosticCode::HeadNotSecondOrder, clause.head->span,
                  where + ": head must be a second-order atom or false");
      } else {
        check_so_arity(*clause.head);
      }
    }
  }
  for (const auto& c : sentence.extensional_vocabulary().constants) {
    if (fo_names.count(c) || so_names.count(c))
      diags.add(DiagnosticCode::NameClash, {}, "constant " + c + " clashes with a variable");
  }
  return diags.take();
}

std::vector<Diagnostic> validate(const LfpFormula& formula) {
  Diagnostics diags;
  const std::size_t z_arity = formula.lfp_vars.size();
  std::set<std::string> bound;
  for (const auto& v : formula.lfp_vars)
    if (!bound.insert(v).second)
      diags.add(DiagnosticCode::DuplicateDeclaration, {}, "variable " + v + " bound twice");
  for (const auto& q : formula.prefix)
    if (!bound.insert(q.var).second)
      diags.add(DiagnosticCode::DuplicateDeclaration, {},
                "variable " + q.var + " bound twice");

  if (formula.fixpoint_tuple.size() != z_arity) {
    diags.add(DiagnosticCode::TupleArityMismatch, {},
              "fixpoint tuple has " + std::to_string(formula.fixpoint_tuple.size()) +
                  " terms but " + formula.lfp_relation + " has arity " +
                  std::to_string(z_arity));
  }
  for (const auto& t : formula.fixpoint_tuple)
    if (!t.is_var() || t.name != formula.exist_var)
      diags.add(DiagnosticCode::TupleArityMismatch, {},
                "fixpoint tuple must repeat " + formula.exist_var);

  std::map<std::string, std::size_t> ext_arity;
  for (std::size_t i = 0; i < formula.clauses.size(); ++i) {
    const std::string where = "clause " + std::to_string(i + 1);
    for (const auto& lit : formula.clauses[i]) {
      for (const auto& t : lit.args)
        if (t.is_var() && !bound.count(t.name))
          diags.add(DiagnosticCode::UnknownSymbol, lit.span,
                    where + ": variable " + t.name + " is not bound in the matrix");
      if (lit.kind == LiteralKind::Universal) {
        diags.add(DiagnosticCode::NotDNF, lit.span,
                  where + ": quantifiers must appear in the prefix");
        continue;
      }
      if (!lit.is_atom_kind()) continue;
      if (lit.relation == formula.lfp_relation) {
        if (lit.kind == LiteralKind::Negative)
          diags.add(DiagnosticCode::NegativeFixpointVariable, lit.span,
                    where + ": " + lit.relation + " occurs negatively");
        if (lit.args.size() != z_arity)
          diags.add(DiagnosticCode::ArityMismatch, lit.span,
                    where + ": " + lit.relation + " expects " + std::to_string(z_arity) +
                        " arguments");
        continue;
      }
      auto [it, inserted] = ext_arity.emplace(lit.relation, lit.args.size());
      if (!inserted && it->second != lit.args.size())
        diags.add(DiagnosticCode::ArityMismatch, lit.span,
                  where + ": " + lit.relation + " used with inconsistent arity");
    }
  }
  return diags.take();
}

}  // namespace hornfix
