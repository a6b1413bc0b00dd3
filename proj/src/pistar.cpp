#include "hornfix/pistar.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "hornfix/error.hpp"
#include "hornfix/eval.hpp"
#include "hornfix/trees.hpp"

namespace hornfix {

namespace {

const std::string kRoot = "root";

bool is_root(const Term& t) { return !t.is_var() && t.name == kRoot; }

void require_supported(const Term& t) {
  if (!t.is_var() && t.name != kRoot)
    throw Error(ErrorCode::UnsupportedLiteral,
                "constant " + t.name + " has no characteristic counterpart (only root)");
}

std::vector<Term> padded(std::vector<Term> vars, std::size_t m, const std::string& where) {
  if (vars.size() > m)
    throw Error(ErrorCode::InvalidArgument,
                where + " needs width " + std::to_string(vars.size()) + " but m is " +
                    std::to_string(m));
  if (vars.empty()) return std::vector<Term>(m, Term::constant(kRoot));
  while (vars.size() < m) vars.push_back(vars.back());
  return vars;
}

std::vector<Term> var_terms(const std::vector<std::string>& names) {
  std::vector<Term> out;
  for (const auto& n : names) out.push_back(Term::var(n));
  return out;
}

std::string q_name(const char* base, std::size_t k) {
  return std::string(base) + "_" + std::to_string(k);
}

}  // namespace

std::size_t compute_m(const Program& program) {
  std::size_t m = 0;
  for (const auto& r : program.rules) m = std::max(m, free_variable_count(normalize(r)));
  for (const auto& [name, arity] : program.vocabulary.relations) m = std::max(m, arity);
  return m;
}

Term PairVarTable::single(const Term& x) {
  require_supported(x);
  if (is_root(x)) return Term::constant(kZero);
  return Term::var("i@" + x.name);
}

Term PairVarTable::pair(const Term& x, const Term& y) {
  require_supported(x);
  require_supported(y);
  if (is_root(x) || is_root(y)) return Term::constant(kZero);
  if (x.name == y.name) return single(x);
  const auto& [a, b] = std::minmax(x.name, y.name);
  return Term::var("i@" + a + "@" + b);
}

std::vector<Term> star_args(const std::vector<Term>& args) {
  std::vector<Term> out;
  for (std::size_t i = 0; i < args.size(); ++i)
    for (std::size_t j = i; j < args.size(); ++j)
      out.push_back(i == j ? PairVarTable::single(args[i]) : PairVarTable::pair(args[i], args[j]));
  return out;
}

Program compile(const Program& program, std::size_t m) {
  const std::set<std::string> intentional = program.intentional();
  const std::set<std::string> extensional = program.extensional();
  auto is_edge = [&](const std::string& rel) { return rel == "E" && extensional.count(rel); };

  Program out;
  Vocabulary& voc = out.vocabulary;
  voc.constants.insert(kZero);
  voc.relations[kSucc] = 2;
  voc.relations[kRNeq] = 3;
  voc.relations[kRNegE] = 3;
  voc.relations[kFul] = triangular(m);
  for (const auto& name : extensional) {
    if (is_edge(name)) continue;
    const std::size_t r = *program.vocabulary.arity(name);
    voc.relations[star_name(name)] = triangular(r);
    voc.relations[negated_star_name(name)] = triangular(r);
  }
  for (const auto& name : intentional) {
    std::size_t r = 0;
    if (auto a = program.vocabulary.arity(name)) r = *a;
    voc.relations[star_name(name)] = triangular(r);
  }

  std::size_t occurrence = 0;
  std::vector<Rule> extra;
  for (const auto& raw : program.rules) {
    const Rule rule = normalize(raw);
    for (const auto& v : free_variables(rule))
      if (v.find('@') != std::string::npos)
        throw Error(ErrorCode::UnsupportedLiteral, "variable names may not contain '@': " + v);

    Rule star;
    star.head = star_name(rule.head);
    star.head_args = star_args(rule.head_args);
    star.span = rule.span;
    for (const auto& lit : rule.body) {
      const Term* a = lit.args.size() > 0 ? &lit.args[0] : nullptr;
      const Term* b = lit.args.size() > 1 ? &lit.args[1] : nullptr;
      switch (lit.kind) {
        case LiteralKind::Equality:
          star.body.push_back(Literal::eq(PairVarTable::single(*a), PairVarTable::pair(*a, *b)));
          star.body.push_back(Literal::eq(PairVarTable::pair(*a, *b), PairVarTable::single(*b)));
          break;
        case LiteralKind::Inequality:
          star.body.push_back(Literal::atom(kRNeq, star_args({*a, *b})));
          break;
        case LiteralKind::Positive:
          if (is_edge(lit.relation)) {
            star.body.push_back(Literal::eq(PairVarTable::single(*a), PairVarTable::pair(*a, *b)));
            star.body.push_back(
                Literal::atom(kSucc, {PairVarTable::pair(*a, *b), PairVarTable::single(*b)}));
          } else {
            star.body.push_back(Literal::atom(star_name(lit.relation), star_args(lit.args)));
          }
          break;
        case LiteralKind::Negative:
          if (intentional.count(lit.relation))
            throw Error(ErrorCode::UnsupportedLiteral,
                        "negated intentional symbol " + lit.relation);
          if (is_edge(lit.relation))
            star.body.push_back(Literal::atom(kRNegE, star_args({*a, *b})));
          else
            star.body.push_back(
                Literal::atom(negated_star_name(lit.relation), star_args(lit.args)));
          break;
        case LiteralKind::Universal: {
          if (!intentional.count(lit.relation))
            throw Error(ErrorCode::UnsupportedLiteral,
                        "universal literal over extensional " + lit.relation);
          ++occurrence;
          const std::string q = q_name("$Q", occurrence);
          const std::string q1 = q_name("$Q1", occurrence);
          const std::string q2 = q_name("$Q2", occurrence);
          const std::vector<std::string>& ys = lit.universal_vars;
          const std::vector<std::string> zs = free_variables(lit);
          std::vector<std::string> w = ys;
          w.insert(w.end(), zs.begin(), zs.end());
          const auto w_terms = var_terms(w);
          const auto z_terms = var_terms(zs);
          const auto w_star = star_args(w_terms);
          const auto z_star = star_args(z_terms);
          std::vector<std::string> bound;
          for (std::size_t i = 0; i < w.size(); ++i)
            for (std::size_t j = i; j < w.size(); ++j)
              if (i < ys.size() || j < ys.size())
                bound.push_back(PairVarTable::pair(w_terms[i], w_terms[j]).name);

          voc.relations[q] = w_star.size();
          voc.relations[q1] = z_star.size();
          voc.relations[q2] = z_star.size();
          extra.push_back({q, w_star,
                           {Literal::negated(kFul, star_args(padded(w_terms, m, q)))}, {}});
          extra.push_back(
              {q, w_star, {Literal::atom(star_name(lit.relation), star_args(lit.args))}, {}});
          extra.push_back({q1, z_star, {Literal::forall(bound, q, w_star)}, {}});
          extra.push_back({q2, z_star,
                           {Literal::atom(q1, z_star),
                            Literal::atom(kFul, star_args(padded(z_terms, m, q2)))},
                           {}});
          star.body.push_back(Literal::atom(q2, z_star));
          break;
        }
      }
    }
    const auto free = free_variables(rule);
    if (!free.empty())
      star.body.push_back(
          Literal::atom(kFul, star_args(padded(var_terms(free), m, "rule for " + rule.head))));
    out.rules.push_back(std::move(star));
  }
  out.rules.insert(out.rules.end(), extra.begin(), extra.end());
  return out;
}

// ---------------------------------------------------------------------------

bool Prop6Report::passed() const {
  for (const auto& r : rows)
    if (!r.pass) return false;
  return !goal_checked || goal_tree == goal_sigma;
}

namespace {

Prop6Row compare(const std::string& symbol, const Relation& on_tree, const PerfectTree& tree,
                 const Relation& on_sigma) {
  Prop6Row row;
  row.symbol = symbol;
  row.actual = on_sigma.size();
  try {
    Relation image = char_relation_of(on_tree, tree);
    row.expected = image.size();
    row.pass = image == on_sigma;
  } catch (const Error&) {
    row.pass = false;
  }
  return row;
}

// {a : T |= forall y R(args)[a]} over the free variables of the literal.
Relation universal_extension(const Literal& lit, const Relation& r, std::size_t n) {
  const std::vector<std::string> zs = free_variables(lit);
  Relation out(zs.size());
  Tuple t(lit.args.size());
  for_each_tuple(zs.size(), n, [&](const Tuple& a) {
    bool all = true;
    for_each_tuple(lit.universal_vars.size(), n, [&](const Tuple& b) {
      if (!all) return;
      for (std::size_t i = 0; i < lit.args.size(); ++i) {
        const Term& term = lit.args[i];
        if (!term.is_var()) {
          t[i] = 0;  // root
          continue;
        }
        auto uy = std::find(lit.universal_vars.begin(), lit.universal_vars.end(), term.name);
        if (uy != lit.universal_vars.end()) {
          t[i] = b[static_cast<std::size_t>(uy - lit.universal_vars.begin())];
        } else {
          auto z = std::find(zs.begin(), zs.end(), term.name);
          t[i] = a[static_cast<std::size_t>(z - zs.begin())];
        }
      }
      if (!r.contains(t)) all = false;
    });
    if (all) out.insert(a);
  });
  return out;
}

}  // namespace

Prop6Report verify_prop6(const Structure& a, const Program& program, const std::string& goal) {
  Prop6Report report;
  report.m = compute_m(program);
  const TreeStructure t = encode(a);
  const Structure s = sigma_structure(t, report.m);
  const Program star = compile(program, report.m);
  const EvalResult on_tree = eval_datalog(program, t.structure);
  const EvalResult on_sigma = eval_datalog(star, s);

  for (const auto& x : program.intentional())
    report.rows.push_back(
        compare(x, on_tree.relation(x), t.tree, on_sigma.relation(star_name(x))));

  std::size_t occurrence = 0;
  for (const auto& raw : program.rules)
    for (const auto& lit : normalize(raw).body) {
      if (lit.kind != LiteralKind::Universal) continue;
      ++occurrence;
      const std::string q2 = q_name("$Q2", occurrence);
      Relation q1 = universal_extension(lit, on_tree.relation(lit.relation), t.structure.size);
      report.rows.push_back(compare(q2, q1, t.tree, on_sigma.relation(q2)));
    }

  if (!goal.empty()) {
    report.goal_checked = true;
    report.goal_tree = on_tree.holds(goal);
    report.goal_sigma = on_sigma.holds(star_name(goal));
  }
  return report;
}

std::string format_report(const Prop6Report& report) {
  std::ostringstream os;
  os << "m = " << report.m << "\n";
  for (const auto& r : report.rows)
    os << (r.pass ? "pass" : "FAIL") << "  " << r.symbol << "  image=" << r.expected
       << " star=" << r.actual << "\n";
  if (report.goal_checked)
    os << (report.goal_tree == report.goal_sigma ? "pass" : "FAIL") << "  goal  tree="
       << (report.goal_tree ? "true" : "false")
       << " sigma=" << (report.goal_sigma ? "true" : "false") << "\n";
  os << (report.passed() ? "all symbols agree" : "MISMATCH") << "\n";
  return os.str();
}

}  // namespace hornfix
