#include "hornfix/generators.hpp"

#include <algorithm>
#include <map>

#include "hornfix/error.hpp"
#include "hornfix/parser.hpp"

namespace hornfix {

namespace {

const std::vector<std::string> kPool = {"x", "y", "z"};

std::vector<Term> random_args(Rng& rng, std::size_t arity, const std::vector<std::string>& pool,
                              const std::string& constant, std::uint64_t constant_den) {
  std::vector<Term> args;
  for (std::size_t i = 0; i < arity; ++i) {
    if (!constant.empty() && rng.chance(1, constant_den))
      args.push_back(Term::constant(constant));
    else
      args.push_back(Term::var(rng.pick(pool)));
  }
  return args;
}

// forall bound: rel(args) with the bound variable in at least one position.
Literal random_universal(Rng& rng, const std::string& rel, std::size_t arity,
                         const std::string& bound, const std::vector<std::string>& pool,
                         const std::string& constant, std::uint64_t constant_den) {
  std::vector<Term> args = random_args(rng, arity, pool, constant, constant_den);
  for (auto& t : args)
    if (rng.chance(1, 3)) t = Term::var(bound);
  args[rng.below(arity)] = Term::var(bound);
  return Literal::forall({bound}, rel, std::move(args));
}

std::size_t pick_weighted(Rng& rng, const std::vector<std::size_t>& weights) {
  std::size_t total = 0;
  for (auto w : weights) total += w;
  std::size_t r = rng.below(total);
  for (std::size_t i = 0; i < weights.size(); ++i) {
    if (r < weights[i]) return i;
    r -= weights[i];
  }
  return weights.size() - 1;
}

}  // namespace

Structure random_structure(Rng& rng, const Vocabulary& vocabulary, std::size_t n,
                           std::uint64_t num, std::uint64_t den) {
  if (n == 0) throw Error(ErrorCode::InvalidArgument, "domain must be non-empty");
  Structure s;
  s.size = n;
  for (const auto& [name, arity] : vocabulary.relations) {
    Relation r(arity);
    for_each_tuple(arity, n, [&](const Tuple& t) {
      if (rng.chance(num, den)) r.insert(t);
    });
    s.set_relation(name, std::move(r));
  }
  for (const auto& c : vocabulary.constants) s.set_constant(c, static_cast<Element>(rng.below(n)));
  return s;
}

const std::string& agap_program_text() {
  static const std::string text =
      "% alternating paths from s to t\n"
      "const s t.\n"
      "rel E/2 Puni/1.\n"
      "Palt(x,y) :- x = y.\n"
      "Palt(x,y) :- !Puni(x), E(x,z), Palt(z,y).\n"
      "Palt(x,y) :- Puni(x), forall z: Q(x,z,y).\n"
      "Q(x,z,y) :- !E(x,z), y = y.\n"
      "Q(x,z,y) :- Palt(z,y), x = x.\n"
      "P() :- Palt(s,t).\n";
  return text;
}

Program agap_program() {
  auto parsed = parse_program(agap_program_text());
  if (!parsed) throw Error(ErrorCode::InvalidArgument, "built-in program failed to parse");
  return *parsed.value;
}

Structure random_alternating_graph(Rng& rng, std::size_t n) {
  Vocabulary v;
  v.relations = {{"E", 2}, {"Puni", 1}};
  v.constants = {"s", "t"};
  return random_structure(rng, v, n, 1, 3);
}

Program random_program(Rng& rng, const ProgramShape& shape) {
  Program p;
  p.vocabulary.relations = {{"E", 2}, {"U", 1}};
  p.vocabulary.constants = {"c"};
  const std::vector<std::string> names = {"A", "B", "C", "D"};
  const std::size_t k = rng.between(1, std::min<std::size_t>(shape.max_intentional, 4));
  std::vector<std::string> idb;
  for (std::size_t i = 0; i < k; ++i) {
    idb.push_back(names[i]);
    p.vocabulary.relations[names[i]] = rng.between(0, shape.max_arity);
  }
  idb.push_back("Goal");
  p.vocabulary.relations["Goal"] = 0;
  std::vector<std::string> quantifiable;
  for (const auto& s : idb)
    if (p.vocabulary.relations[s] > 0) quantifiable.push_back(s);

  const std::size_t count = rng.between(idb.size(), std::max(idb.size(), shape.max_rules));
  for (std::size_t i = 0; i < count; ++i) {
    Rule r;
    r.head = i < idb.size() ? idb[i] : rng.pick(idb);
    r.head_args = random_args(rng, p.vocabulary.relations[r.head], kPool, "c", 8);
    const std::size_t body = rng.between(0, shape.max_body);
    for (std::size_t j = 0; j < body; ++j) {
      const bool can_forall = shape.universal && !quantifiable.empty();
      switch (pick_weighted(rng, {3, 2, 3, 1, 1, can_forall ? 1u : 0u})) {
        case 0: {
          const std::string rel = rng.chance(1, 2) ? "E" : "U";
          r.body.push_back(
              Literal::atom(rel, random_args(rng, rel == "E" ? 2 : 1, kPool, "c", 8)));
          break;
        }
        case 1: {
          const std::string rel = rng.chance(1, 2) ? "E" : "U";
          r.body.push_back(
              Literal::negated(rel, random_args(rng, rel == "E" ? 2 : 1, kPool, "c", 8)));
          break;
        }
        case 2: {
          const std::string& rel = rng.pick(idb);
          r.body.push_back(
              Literal::atom(rel, random_args(rng, p.vocabulary.relations[rel], kPool, "c", 8)));
          break;
        }
        case 3: {
          auto a = random_args(rng, 2, kPool, "c", 8);
          r.body.push_back(Literal::eq(a[0], a[1]));
          break;
        }
        case 4: {
          auto a = random_args(rng, 2, kPool, "c", 8);
          r.body.push_back(Literal::neq(a[0], a[1]));
          break;
        }
        default: {
          const std::string& rel = rng.pick(quantifiable);
          r.body.push_back(random_universal(rng, rel, p.vocabulary.relations[rel],
                                            "w" + std::to_string(j), kPool, "c", 8));
          break;
        }
      }
    }
    p.rules.push_back(std::move(r));
  }
  return p;
}

HornSentence random_horn(Rng& rng) {
  HornSentence s;
  const std::size_t so = rng.between(1, 2);
  for (std::size_t i = 0; i < so; ++i)
    s.so_vars.push_back({"S" + std::to_string(i + 1), rng.between(0, 2)});
  s.fo_vars = kPool;
  std::vector<std::string> quantifiable;
  for (const auto& v : s.so_vars)
    if (v.arity > 0) quantifiable.push_back(v.name);

  const std::size_t clauses = rng.between(1, 3);
  for (std::size_t c = 0; c < clauses; ++c) {
    HornClause clause;
    const std::size_t alphas = rng.between(0, 2);
    for (std::size_t j = 0; j < alphas; ++j) {
      if (!quantifiable.empty() && rng.chance(1, 4)) {
        const std::string& rel = rng.pick(quantifiable);
        clause.alphas.push_back(random_universal(rng, rel, s.find_so_var(rel)->arity,
                                                 "w" + std::to_string(j), kPool, "", 1));
      } else {
        const SoVariable& v = rng.pick(s.so_vars);
        clause.alphas.push_back(Literal::atom(v.name, random_args(rng, v.arity, kPool, "", 1)));
      }
    }
    const std::size_t betas = rng.between(0, 2);
    for (std::size_t j = 0; j < betas; ++j) {
      switch (rng.below(4)) {
        case 0:
          clause.betas.push_back(Literal::atom(rng.chance(1, 2) ? "E" : "U", {}));
          break;
        case 1:
          clause.betas.push_back(Literal::negated(rng.chance(1, 2) ? "E" : "U", {}));
          break;
        case 2: {
          auto a = random_args(rng, 2, kPool, "", 1);
          clause.betas.push_back(Literal::eq(a[0], a[1]));
          continue;
        }
        default: {
          auto a = random_args(rng, 2, kPool, "", 1);
          clause.betas.push_back(Literal::neq(a[0], a[1]));
          continue;
        }
      }
      Literal& b = clause.betas.back();
      b.args = random_args(rng, b.relation == "E" ? 2 : 1, kPool, "", 1);
    }
    if (!rng.chance(1, 3)) {
      const SoVariable& v = rng.pick(s.so_vars);
      clause.head = Literal::atom(v.name, random_args(rng, v.arity, kPool, "", 1));
    }
    s.clauses.push_back(std::move(clause));
  }
  return s;
}

LfpFormula random_lfp(Rng& rng) {
  LfpFormula f;
  f.exist_var = "u";
  f.lfp_relation = "Z";
  const std::size_t k = rng.between(1, 2);
  for (std::size_t i = 0; i < k; ++i) f.lfp_vars.push_back("z" + std::to_string(i + 1));
  std::vector<std::string> pool = f.lfp_vars;
  const std::size_t m = rng.between(0, 2);
  for (std::size_t i = 0; i < m; ++i) {
    const std::string y = "y" + std::to_string(i + 1);
    f.prefix.push_back({rng.chance(1, 2) ? Quantifier::Exists : Quantifier::Forall, y});
    pool.push_back(y);
  }
  const std::size_t clauses = rng.between(1, 3);
  for (std::size_t c = 0; c < clauses; ++c) {
    std::vector<Literal> conj;
    const std::size_t lits = rng.between(1, 3);
    for (std::size_t j = 0; j < lits; ++j) {
      switch (pick_weighted(rng, {2, 2, 2, 1, 1, 1, 1})) {
        case 0: conj.push_back(Literal::atom("Z", random_args(rng, k, pool, "", 1))); break;
        case 1: conj.push_back(Literal::atom("E", random_args(rng, 2, pool, "", 1))); break;
        case 2: conj.push_back(Literal::negated("E", random_args(rng, 2, pool, "", 1))); break;
        case 3: conj.push_back(Literal::atom("U", random_args(rng, 1, pool, "", 1))); break;
        case 4: conj.push_back(Literal::negated("U", random_args(rng, 1, pool, "", 1))); break;
        case 5: {
          auto a = random_args(rng, 2, pool, "", 1);
          conj.push_back(Literal::eq(a[0], a[1]));
          break;
        }
        default: {
          auto a = random_args(rng, 2, pool, "", 1);
          conj.push_back(Literal::neq(a[0], a[1]));
          break;
        }
      }
    }
    f.clauses.push_back(std::move(conj));
  }
  f.fixpoint_tuple.assign(k, Term::var("u"));
  return f;
}

Program random_tree_program(Rng& rng, std::size_t r1_arity) {
  Program p;
  p.vocabulary.relations = {{"E", 2}, {"R1", r1_arity}};
  p.vocabulary.constants = {"root"};
  std::vector<std::string> idb = {"A"};
  if (rng.chance(1, 2)) idb.push_back("B");
  for (const auto& s : idb) p.vocabulary.relations[s] = rng.between(1, 2);
  idb.push_back("Goal");
  p.vocabulary.relations["Goal"] = 0;
  const std::vector<std::string> quantifiable(idb.begin(), idb.end() - 1);

  bool universal_used = false;
  const std::size_t count = rng.between(idb.size(), idb.size() + 2);
  for (std::size_t i = 0; i < count; ++i) {
    Rule r;
    r.head = i < idb.size() ? idb[i] : rng.pick(quantifiable);
    r.head_args = random_args(rng, p.vocabulary.relations[r.head], kPool, "root", 6);
    const std::size_t body = rng.between(0, 3);
    for (std::size_t j = 0; j < body; ++j) {
      switch (pick_weighted(rng, {3, 1, 2, 1, 3, 1, 1, universal_used ? 0u : 2u})) {
        case 0: r.body.push_back(Literal::atom("E", random_args(rng, 2, kPool, "root", 6))); break;
        case 1:
          r.body.push_back(Literal::negated("E", random_args(rng, 2, kPool, "root", 6)));
          break;
        case 2:
          r.body.push_back(Literal::atom("R1", random_args(rng, r1_arity, kPool, "root", 6)));
          break;
        case 3:
          r.body.push_back(Literal::negated("R1", random_args(rng, r1_arity, kPool, "root", 6)));
          break;
        case 4: {
          const std::string& rel = rng.pick(idb);
          r.body.push_back(Literal::atom(
              rel, random_args(rng, p.vocabulary.relations[rel], kPool, "root", 6)));
          break;
        }
        case 5: {
          auto a = random_args(rng, 2, kPool, "root", 6);
          r.body.push_back(Literal::eq(a[0], a[1]));
          break;
        }
        case 6: {
          auto a = random_args(rng, 2, kPool, "root", 6);
          r.body.push_back(Literal::neq(a[0], a[1]));
          break;
        }
        default: {
          const std::string& rel = rng.pick(quantifiable);
          r.body.push_back(random_universal(rng, rel, p.vocabulary.relations[rel], "w", kPool,
                                            "root", 6));
          universal_used = true;
          break;
        }
      }
    }
    p.rules.push_back(std::move(r));
  }
  return p;
}

Relation random_invariant_relation(Rng& rng, const PerfectTree& tree, std::size_t arity) {
  std::map<CharTuple, std::vector<Tuple>> classes;
  for_each_tuple(arity, tree.node_count(),
                 [&](const Tuple& t) { classes[char_tuple(t)].push_back(t); });
  Relation r(arity);
  for (const auto& [key, members] : classes)
    if (rng.chance(1, 2))
      for (const auto& t : members) r.insert(t);
  return r;
}

}  // namespace hornfix
