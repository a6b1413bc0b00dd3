#include "hornfix/translate.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "hornfix/error.hpp"

namespace hornfix {

namespace {

std::set<std::string> symbol_names(const Vocabulary& v) {
  std::set<std::string> names(v.constants.begin(), v.constants.end());
  for (const auto& [name, arity] : v.relations) names.insert(name);
  return names;
}

std::vector<Term> var_terms(const std::vector<std::string>& names) {
  std::vector<Term> out;
  for (const auto& n : names) out.push_back(Term::var(n));
  return out;
}

std::vector<std::string> numbered(const std::string& base, std::size_t count,
                                  std::set<std::string>& taken) {
  std::vector<std::string> out;
  for (std::size_t i = 1; i <= count; ++i)
    out.push_back(fresh_name(base + std::to_string(i), taken));
  return out;
}

// Renames free variable occurrences; universally bound ones stay.
Literal rename(const Literal& lit, const std::map<std::string, std::string>& map) {
  Literal out = lit;
  for (auto& t : out.args) {
    if (!t.is_var()) continue;
    if (std::find(lit.universal_vars.begin(), lit.universal_vars.end(), t.name) !=
        lit.universal_vars.end())
      continue;
    auto it = map.find(t.name);
    if (it != map.end()) t.name = it->second;
  }
  return out;
}

std::set<std::string> variable_names(const Program& program) {
  std::set<std::string> names;
  for (const auto& r : program.rules) {
    for (const auto& t : r.head_args)
      if (t.is_var()) names.insert(t.name);
    for (const auto& l : r.body) {
      for (const auto& t : l.args)
        if (t.is_var()) names.insert(t.name);
      for (const auto& v : l.universal_vars) names.insert(v);
    }
  }
  return names;
}

}  // namespace

// ---------------------------------------------------------------------------

DatalogQuery horn_to_datalog(const HornSentence& sentence) {
  DatalogQuery q;
  Program& p = q.program;
  p.vocabulary = sentence.extensional_vocabulary();
  std::set<std::string> taken = symbol_names(p.vocabulary);
  for (const auto& v : sentence.so_vars) {
    p.vocabulary.relations[v.name] = v.arity;
    taken.insert(v.name);
  }
  for (const auto& v : sentence.fo_vars) taken.insert(v);
  q.goal = fresh_name("$P", taken);
  p.vocabulary.relations[q.goal] = 0;

  // (1) R(u..) <- R(u..) for every second-order variable.
  for (const auto& v : sentence.so_vars) {
    std::set<std::string> local = taken;
    auto args = var_terms(numbered("$u", v.arity, local));
    p.rules.push_back({v.name, args, {Literal::atom(v.name, args)}, {}});
  }
  // (2) one rule per clause; bottom becomes the goal.
  bool has_bottom = false;
  for (const auto& c : sentence.clauses) {
    Rule r;
    r.body = c.alphas;
    r.body.insert(r.body.end(), c.betas.begin(), c.betas.end());
    r.span = c.span;
    if (c.head) {
      r.head = c.head->relation;
      r.head_args = c.head->args;
    } else {
      r.head = q.goal;
      has_bottom = true;
    }
    p.rules.push_back(std::move(r));
  }
  // (3) a goal rule that never fires.
  if (!has_bottom) {
    Term v = Term::var(fresh_name("$v", taken));
    p.rules.push_back({q.goal, {}, {Literal::neq(v, v)}, {}});
  }
  return q;
}

HornSentence datalog_to_horn(const Program& program, const std::string& goal) {
  const std::set<std::string> intentional = program.intentional();
  if (!intentional.count(goal) || program.vocabulary.arity(goal).value_or(1) != 0)
    throw Error(ErrorCode::GoalNotZeroAry, "goal " + goal + " is not a 0-ary intentional symbol");

  std::set<std::string> zero_in_body;
  for (const auto& r : program.rules)
    for (const auto& l : r.body)
      if (l.kind == LiteralKind::Positive && l.args.empty() && intentional.count(l.relation))
        zero_in_body.insert(l.relation);

  std::set<std::string> taken = symbol_names(program.vocabulary);
  std::map<std::string, std::string> companion;
  for (const auto& name : zero_in_body) companion[name] = fresh_name(name + "'", taken);

  std::vector<Rule> rules;
  for (const auto& r : program.rules) {
    Rule out = r;
    std::set<std::string> local = variable_names(program);
    local.insert(program.vocabulary.constants.begin(), program.vocabulary.constants.end());
    if (auto it = companion.find(r.head); it != companion.end()) {
      out.head = it->second;
      out.head_args = {Term::var(fresh_name("$v", local))};
    }
    for (auto& l : out.body)
      if (auto it = companion.find(l.relation);
          it != companion.end() && l.kind == LiteralKind::Positive) {
        l.relation = it->second;
        l.args = {Term::var(fresh_name("$w", local))};
      }
    rules.push_back(std::move(out));
  }
  for (const auto& [name, prime] : companion) {
    std::set<std::string> local = variable_names(program);
    local.insert(program.vocabulary.constants.begin(), program.vocabulary.constants.end());
    rules.push_back({name, {}, {Literal::atom(prime, {Term::var(fresh_name("$x", local))})}, {}});
  }

  std::map<std::string, std::size_t> arity;
  for (const auto& r : rules) arity.emplace(r.head, r.head_args.size());

  HornSentence s;
  for (const auto& [name, a] : arity)
    if (name != goal) s.so_vars.push_back({name, a});
  for (const auto& r : rules)
    for (const auto& v : free_variables(r))
      if (std::find(s.fo_vars.begin(), s.fo_vars.end(), v) == s.fo_vars.end())
        s.fo_vars.push_back(v);
  for (const auto& r : rules) {
    HornClause c;
    c.span = r.span;
    for (const auto& l : r.body) {
      const bool so = arity.count(l.relation) && l.relation != goal && l.is_atom_kind();
      if (so && (l.kind == LiteralKind::Positive || l.kind == LiteralKind::Universal))
        c.alphas.push_back(l);
      else
        c.betas.push_back(l);
    }
    if (r.head != goal) c.head = Literal::atom(r.head, r.head_args);
    s.clauses.push_back(std::move(c));
  }
  return s;
}

DatalogQuery lfp_to_datalog(const LfpFormula& f) {
  DatalogQuery q;
  Program& p = q.program;
  p.vocabulary = f.extensional_vocabulary();
  const std::size_t k = f.lfp_vars.size();
  const std::size_t m = f.prefix.size();
  p.vocabulary.relations[f.lfp_relation] = k;

  std::set<std::string> taken = symbol_names(p.vocabulary);
  taken.insert(f.lfp_vars.begin(), f.lfp_vars.end());
  for (const auto& qv : f.prefix) taken.insert(qv.var);
  taken.insert(f.exist_var);
  const std::string matrix = fresh_name("$P", taken);
  std::vector<std::string> level(m + 2);  // level[i] for 1 <= i <= m
  for (std::size_t i = 1; i <= m; ++i) level[i] = fresh_name("$P" + std::to_string(i), taken);
  level[m + 1] = matrix;
  q.goal = fresh_name("$Q", taken);

  std::vector<std::string> ys;
  for (const auto& qv : f.prefix) ys.push_back(qv.var);
  auto head_args = [&](std::size_t ycount) {
    std::vector<std::string> names = f.lfp_vars;
    names.insert(names.end(), ys.begin(), ys.begin() + static_cast<long>(ycount));
    return var_terms(names);
  };

  // P(z, y) <- C_j
  p.vocabulary.relations[matrix] = k + m;
  for (const auto& clause : f.clauses) p.rules.push_back({matrix, head_args(m), clause, {}});
  if (f.clauses.empty()) {
    // No clause: keep the matrix relation intentional with a rule that never fires.
    Term v = Term::var(fresh_name("$v", taken));
    p.rules.push_back({matrix, head_args(m), {Literal::neq(v, v)}, {}});
  }
  // Peel the prefix from the innermost quantifier outward.
  for (std::size_t i = m; i >= 1; --i) {
    p.vocabulary.relations[level[i]] = k + i - 1;
    Literal body = Literal::atom(level[i + 1], head_args(i));
    if (f.prefix[i - 1].quantifier == Quantifier::Forall)
      body = Literal::forall({ys[i - 1]}, level[i + 1], head_args(i));
    p.rules.push_back({level[i], head_args(i - 1), {body}, {}});
  }
  const std::string outer = m >= 1 ? level[1] : matrix;
  p.rules.push_back({f.lfp_relation, head_args(0), {Literal::atom(outer, head_args(0))}, {}});
  p.vocabulary.relations[q.goal] = 0;
  p.rules.push_back({q.goal, {}, {Literal::atom(f.lfp_relation, f.fixpoint_tuple)}, {}});
  return q;
}

SimLfpSystem datalog_to_sim_lfp(const Program& program, const std::string& goal) {
  SimLfpSystem sys;
  const std::set<std::string> intentional = program.intentional();
  for (const auto& [name, arity] : program.vocabulary.relations)
    if (!intentional.count(name)) sys.vocabulary.relations.emplace(name, arity);
  sys.vocabulary.constants = program.vocabulary.constants;
  sys.goal_relation = goal;

  std::set<std::string> taken = variable_names(program);
  taken.insert(program.vocabulary.constants.begin(), program.vocabulary.constants.end());

  std::vector<std::string> order;
  for (const auto& r : program.rules)
    if (std::find(order.begin(), order.end(), r.head) == order.end()) order.push_back(r.head);

  std::vector<std::string> xs;
  std::size_t disjunct_no = 0;
  for (const auto& head : order) {
    SimDefinition def;
    def.relation = head;
    std::size_t arity = 0;
    for (const auto& r : program.rules)
      if (r.head == head) arity = r.head_args.size();
    while (xs.size() < arity) xs.push_back(fresh_name("$x" + std::to_string(xs.size() + 1), taken));
    def.args.assign(xs.begin(), xs.begin() + static_cast<long>(arity));

    for (const auto& raw : program.rules) {
      if (raw.head != head) continue;
      ++disjunct_no;
      const Rule r = normalize(raw);
      std::map<std::string, std::string> map;
      for (std::size_t i = 0; i < r.head_args.size(); ++i) map[r.head_args[i].name] = def.args[i];
      SimDisjunct dj;
      std::size_t t = 0;
      for (const auto& v : free_variables(r)) {
        if (map.count(v)) continue;
        std::string fresh =
            fresh_name("$d" + std::to_string(disjunct_no) + "_" + std::to_string(++t), taken);
        map[v] = fresh;
        dj.exists_vars.push_back(fresh);
      }
      for (const auto& l : r.body) dj.literals.push_back(rename(l, map));
      def.disjuncts.push_back(std::move(dj));
    }
    sys.definitions.push_back(std::move(def));
  }
  return sys;
}

}  // namespace hornfix
