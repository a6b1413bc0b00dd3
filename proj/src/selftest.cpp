#include "hornfix/selftest.hpp"

#include <map>
#include <sstream>

#include "hornfix/error.hpp"
#include "hornfix/eval.hpp"
#include "hornfix/generators.hpp"
#include "hornfix/kprime.hpp"
#include "hornfix/oracles.hpp"
#include "hornfix/pistar.hpp"
#include "hornfix/translate.hpp"
#include "hornfix/trees.hpp"

namespace hornfix {

namespace {

std::string ratio(std::size_t ok, std::size_t total, const std::string& what) {
  return std::to_string(ok) + "/" + std::to_string(total) + " " + what;
}

Vocabulary base_vocabulary(bool with_constant) {
  Vocabulary v;
  v.relations = {{"E", 2}, {"U", 1}};
  if (with_constant) v.constants = {"c"};
  return v;
}

std::size_t so_bits(const HornSentence& s, std::size_t n) {
  std::size_t bits = 0;
  for (const auto& v : s.so_vars) {
    std::size_t cells = 1;
    for (std::size_t i = 0; i < v.arity; ++i) cells *= n;
    bits += cells;
  }
  return bits;
}

CriterionResult agap() {
  Rng rng(101);
  const Program p = agap_program();
  std::size_t ok = 0;
  const std::size_t total = 200;
  for (std::size_t i = 0; i < total; ++i) {
    const Structure g = random_alternating_graph(rng, rng.between(1, 8));
    if (eval_datalog(p, g).holds("P") == oracle::alternating_path(g)) ++ok;
  }
  return {ok == total, ratio(ok, total, "graphs agree with the attractor oracle")};
}

CriterionResult horn_datalog() {
  Rng rng(202);
  std::size_t forward = 0, round_trip = 0, reverse = 0, invalid = 0;
  const std::size_t total = 200;
  for (std::size_t i = 0; i < total; ++i) {
    HornSentence phi = random_horn(rng);
    const Structure a = random_structure(rng, base_vocabulary(false), rng.between(1, 3));
    if (!validate(phi).empty()) {
      ++invalid;
      continue;
    }
    const bool truth = eval_horn_brute_force(phi, a);
    const DatalogQuery q = horn_to_datalog(phi);
    if (truth == !eval_datalog(q.program, a).holds(q.goal)) ++forward;
    const HornSentence back = datalog_to_horn(q.program, q.goal);
    if (eval_horn_brute_force(back, a) == truth) ++round_trip;
  }
  ProgramShape shape;
  shape.max_rules = 4;
  shape.max_intentional = 2;
  for (std::size_t i = 0; i < total; ++i) {
    Program p;
    HornSentence phi;
    std::size_t n = 0;
    do {
      p = random_program(rng, shape);
      n = rng.between(1, 3);
      phi = datalog_to_horn(p, "Goal");
    } while (so_bits(phi, n) > 16);
    const Structure a = random_structure(rng, base_vocabulary(true), n);
    if (!validate(p).empty()) {
      ++invalid;
      continue;
    }
    if (eval_horn_brute_force(phi, a) == !eval_datalog(p, a).holds("Goal")) ++reverse;
  }
  const bool passed = invalid == 0 && forward == total && round_trip == total && reverse == total;
  return {passed, ratio(forward, total, "sentences") + ", " + ratio(round_trip, total, "round trips") +
                      ", " + ratio(reverse, total, "programs") + " agree"};
}

CriterionResult lfp_forward() {
  Rng rng(303);
  const std::size_t formulas = 20, structures = 100;
  std::size_t ok = 0, invalid = 0;
  for (std::size_t i = 0; i < formulas; ++i) {
    const LfpFormula f = random_lfp(rng);
    if (!validate(f).empty()) ++invalid;
    const DatalogQuery q = lfp_to_datalog(f);
    for (std::size_t j = 0; j < structures; ++j) {
      const Structure a = random_structure(rng, base_vocabulary(false), rng.between(1, 5));
      Relation fix;
      const bool direct = eval_lfp(f, a, &fix);
      const EvalResult r = eval_datalog(q.program, a);
      if (direct == r.holds(q.goal) && fix == r.relation(f.lfp_relation)) ++ok;
    }
  }
  const std::size_t total = formulas * structures;
  return {invalid == 0 && ok == total, ratio(ok, total, "formula/structure pairs agree")};
}

CriterionResult sim_lfp_backward() {
  Rng rng(404);
  const std::size_t total = 100;
  std::size_t ok = 0, invalid = 0;
  for (std::size_t i = 0; i < total; ++i) {
    const Program p = random_program(rng);
    const Structure a = random_structure(rng, base_vocabulary(true), rng.between(1, 4));
    if (!validate(p).empty()) {
      ++invalid;
      continue;
    }
    const EvalResult r = eval_datalog(p, a);
    const SimLfpResult s = eval_sim_lfp(datalog_to_sim_lfp(p, "Goal"), a);
    bool same = s.goal_holds == r.holds("Goal");
    for (const auto& x : p.intentional()) {
      auto it = s.relations.find(x);
      same = same && it != s.relations.end() && it->second == r.relation(x);
    }
    if (same) ++ok;
  }
  return {invalid == 0 && ok == total, ratio(ok, total, "programs agree")};
}

CriterionResult check_exhaustive() {
  std::size_t tested = 0, wrong = 0;
  for (std::size_t r = 1; r <= 3; ++r) {
    const std::set<CharTuple> truth = oracle::characteristic_tuples(5, r);
    for_each_tuple(triangular(r), 5, [&](const Tuple& t) {
      const CharTuple e(t.begin(), t.end());
      ++tested;
      if (check(e) != (truth.count(e) != 0)) ++wrong;
    });
  }
  return {wrong == 0, std::to_string(tested) + " candidates, " + std::to_string(wrong) +
                          " disagreements"};
}

CriterionResult deciders() {
  std::size_t wrong = 0, tested = 0;
  for_each_tuple(3, 5, [&](const Tuple& t) {
    ++tested;
    if (decider_r_neq(t[0], t[1], t[2]) != oracle::r_neq(t[0], t[1], t[2])) ++wrong;
    if (decider_r_nege(t[0], t[1], t[2]) != oracle::r_nege(t[0], t[1], t[2])) ++wrong;
  });
  return {wrong == 0, std::to_string(tested) + " triples, " + std::to_string(wrong) +
                          " disagreements"};
}

CriterionResult invariance_closure() {
  Rng rng(707);
  std::map<std::size_t, std::vector<Automorphism>> reference;
  bool counts_agree = true;
  for (std::size_t levels = 1; levels <= 4; ++levels) {
    reference[levels] = oracle::automorphisms(levels);
    const std::size_t expected = std::size_t{1} << ((std::size_t{1} << (levels - 1)) - 1);
    counts_agree = counts_agree &&
                   enumerate_automorphisms(PerfectTree{levels}).size() == reference[levels].size() &&
                   reference[levels].size() == expected;
  }

  std::size_t checks = 0, failures = 0, inconsistent = 0;
  // All three tests must agree; `expected` is what they should say.
  auto probe = [&](const Relation& r, const PerfectTree& tree, bool expected) {
    ++checks;
    const bool by_auto = is_invariant(r, tree);
    const bool by_char = is_invariant_by_char(r, tree);
    const bool by_ref = oracle::invariant(r, reference[tree.levels]);
    if (by_auto != by_char || by_auto != by_ref) ++inconsistent;
    if (by_ref != expected) ++failures;
  };

  const std::size_t total = 100;
  for (std::size_t i = 0; i < total; ++i) {
    const PerfectTree tree{rng.between(1, 4)};
    const std::size_t n = tree.node_count();
    const std::size_t arity = rng.between(1, 2);
    const Relation r = random_invariant_relation(rng, tree, arity);
    const Relation s = random_invariant_relation(rng, tree, arity);
    const Relation unary = random_invariant_relation(rng, tree, 1);
    probe(r, tree, true);
    probe(complement(r, n), tree, true);
    probe(intersect(r, s), tree, true);
    probe(unite(r, s), tree, true);
    probe(permute(r, arity == 2 ? std::vector<std::size_t>{1, 0} : std::vector<std::size_t>{0}),
          tree, true);
    probe(product(r, unary), tree, true);
    probe(project_exists(r, 1, n), tree, true);
    probe(project_forall(r, 1, n), tree, true);

    // An arbitrary relation: the three tests must still agree.
    Relation noise(arity);
    for_each_tuple(arity, n, [&](const Tuple& t) {
      if (rng.chance(1, 3)) noise.insert(t);
    });
    ++checks;
    const bool a = is_invariant(noise, tree);
    if (a != is_invariant_by_char(noise, tree) || a != oracle::invariant(noise, reference[tree.levels]))
      ++inconsistent;
  }
  return {counts_agree && failures == 0 && inconsistent == 0,
          std::to_string(checks) + " checks, " + std::to_string(failures) + " not invariant, " +
              std::to_string(inconsistent) + " inconsistent"};
}

CriterionResult prop6() {
  Rng rng(808);
  const std::size_t total = 50;
  std::size_t ok = 0, with_universal = 0, invalid = 0;
  for (std::size_t i = 0; i < total; ++i) {
    const std::size_t r1 = rng.between(1, 2);
    Vocabulary v;
    v.relations = {{"R1", r1}};
    const Structure a = random_structure(rng, v, rng.between(1, 3));
    const Program p = random_tree_program(rng, r1);
    if (!validate(p).empty()) {
      ++invalid;
      continue;
    }
    bool universal = false;
    for (const auto& rule : p.rules)
      for (const auto& lit : rule.body) universal = universal || lit.kind == LiteralKind::Universal;
    if (universal) ++with_universal;
    if (verify_prop6(a, p, "Goal").passed()) ++ok;
  }
  return {invalid == 0 && ok == total && with_universal > 0,
          ratio(ok, total, "pairs agree") + " (" + std::to_string(with_universal) +
              " with a universal literal)"};
}

CriterionResult kprime_closure() {
  Rng rng(909);
  const ExtensionParams params{1};
  std::size_t members = 0, condition1 = 0, samples = 0, kept = 0;
  for (std::size_t i = 0; i < 10; ++i) {
    const KOracle k = demo_oracle(demo_oracle_names()[i % demo_oracle_names().size()]);
    const Structure g = generate_member(rng, k, params);
    const KprimeVerdict v = membership_kprime(g, k, params);
    if (v.member) ++members;
    if (v.condition == KCondition::Condition1) ++condition1;
    const ClosureReport report = closure_under_substructures_test(g, k, params, 10, rng);
    samples += report.samples;
    kept += report.members;
  }
  return {members == 10 && kept == samples && condition1 > 0,
          ratio(members, 10, "generated members") + " (" + std::to_string(condition1) +
              " by condition 1), " + ratio(kept, samples, "substructures remain members")};
}

}  // namespace

const std::vector<Criterion>& selftest_criteria() {
  static const std::vector<Criterion> all = {
      {1, "alternating reachability program", agap},
      {2, "Horn sentences and negated programs", horn_datalog},
      {3, "normal-form lfp to program", lfp_forward},
      {4, "program to simultaneous lfp", sim_lfp_backward},
      {5, "CHECK against enumerated characteristic tuples", check_exhaustive},
      {6, "R_neq and R_nege deciders", deciders},
      {7, "invariance under closure operations", invariance_closure},
      {8, "compiled program on the characteristic structure", prop6},
      {9, "K' closed under substructures", kprime_closure},
  };
  return all;
}

std::string format_criterion(const Criterion& c, const CriterionResult& r) {
  std::ostringstream os;
  os << (r.passed ? "PASS" : "FAIL") << " [" << c.id << "] " << c.title << ": " << r.detail;
  return os.str();
}

SelftestOutput run_selftest() {
  SelftestOutput out;
  out.passed = true;
  std::ostringstream os;
  for (const auto& c : selftest_criteria()) {
    CriterionResult r;
    try {
      r = c.run();
    } catch (const Error& e) {
      r = {false, std::string("error: ") + e.what()};
    }
    out.passed = out.passed && r.passed;
    os << format_criterion(c, r) << "\n";
  }
  os << (out.passed ? "selftest passed" : "selftest FAILED") << "\n";
  out.text = os.str();
  return out;
}

}  // namespace hornfix
