#include "hornfix/eval.hpp"

#include <algorithm>
#include <cstdlib>
#include <functional>
#include <set>
#include <sstream>

#include "hornfix/error.hpp"
#include "hornfix/parser.hpp"

namespace hornfix {

namespace {

// ---------------------------------------------------------------------------
// Dense relations: a membership bitmap over {0..n-1}^arity (lexicographic rank)
// plus the tuple list for scans.

constexpr std::uint64_t kMaxDenseCells = std::uint64_t{1} << 28;

std::uint64_t cube(std::size_t n, std::size_t arity) {
  std::uint64_t cells = 1;
  for (std::size_t i = 0; i < arity; ++i) {
    cells *= n;
    if (cells > kMaxDenseCells)
      throw Error(ErrorCode::InvalidArgument,
                  "relation of arity " + std::to_string(arity) + " too large over domain " +
                      std::to_string(n));
  }
  return cells;
}

struct Dense {
  std::size_t arity = 0;
  std::size_t n = 0;
  std::vector<std::uint8_t> bits;
  std::vector<Tuple> tuples;

  Dense() = default;
  Dense(std::size_t a, std::size_t domain) : arity(a), n(domain), bits(cube(domain, a), 0) {}

  std::uint64_t rank(const Tuple& t) const {
    std::uint64_t r = 0;
    for (Element e : t) r = r * n + e;
    return r;
  }
  bool contains(const Tuple& t) const { return bits[rank(t)] != 0; }
  void insert(const Tuple& t) {
    auto& b = bits[rank(t)];
    if (!b) {
      b = 1;
      tuples.push_back(t);
    }
  }
  static Dense from(const Relation& r, std::size_t n) {
    Dense d(r.arity(), n);
    for (const auto& t : r) d.insert(t);
    return d;
  }
  Relation to_relation() const {
    return Relation(arity, std::set<Tuple>(tuples.begin(), tuples.end()));
  }
  bool same(const Dense& o) const { return bits == o.bits; }
};

// Maps names to relation ids; the evaluators swap the pointed-to data each
// round.
class RelTable {
 public:
  std::size_t id(const std::string& name) {
    auto [it, inserted] = ids_.emplace(name, names_.size());
    if (inserted) {
      names_.push_back(name);
      data_.push_back(nullptr);
    }
    return it->second;
  }
  const std::vector<std::string>& names() const { return names_; }
  void bind(std::size_t id, const Dense* d) { data_[id] = d; }
  const Dense& get(std::size_t id) const { return *data_[id]; }
  bool bound(std::size_t id) const { return data_[id] != nullptr; }

 private:
  std::map<std::string, std::size_t> ids_;
  std::vector<std::string> names_;
  std::vector<const Dense*> data_;
};

// Variable name to slot index.
class Slots {
 public:
  std::size_t get(const std::string& name) {
    auto [it, inserted] = ids_.emplace(name, count_);
    if (inserted) ++count_;
    return it->second;
  }
  std::optional<std::size_t> find(const std::string& name) const {
    auto it = ids_.find(name);
    if (it == ids_.end()) return std::nullopt;
    return it->second;
  }
  std::size_t fresh() { return count_++; }
  std::size_t size() const { return count_; }

 private:
  std::map<std::string, std::size_t> ids_;
  std::size_t count_ = 0;
};

struct Arg {
  bool is_const = false;
  std::size_t value = 0;  // slot index or element
};

struct CLit {
  LiteralKind kind = LiteralKind::Positive;
  std::size_t rel = 0;
  std::vector<Arg> args;
  std::vector<std::size_t> uslots;  // slots of universally bound variables
  mutable Tuple scratch;
};

Element constant_value(const Structure& s, const std::string& name) {
  return s.constant(name);
}

Arg compile_term(const Term& t, Slots& slots, const Structure& s,
                 const std::map<std::string, std::size_t>& local = {}) {
  if (!t.is_var()) return {true, constant_value(s, t.name)};
  auto it = local.find(t.name);
  if (it != local.end()) return {false, it->second};
  return {false, slots.get(t.name)};
}

CLit compile_literal(const Literal& lit, Slots& slots, RelTable& rels, const Structure& s) {
  CLit c;
  c.kind = lit.kind;
  std::map<std::string, std::size_t> local;
  if (lit.kind == LiteralKind::Universal)
    for (const auto& v : lit.universal_vars) {
      std::size_t slot = slots.fresh();
      local.emplace(v, slot);
      c.uslots.push_back(slot);
    }
  if (lit.is_atom_kind()) c.rel = rels.id(lit.relation);
  for (const auto& t : lit.args) c.args.push_back(compile_term(t, slots, s, local));
  c.scratch.resize(c.args.size());
  return c;
}

Element arg_value(const Arg& a, const std::vector<Element>& env) {
  return a.is_const ? static_cast<Element>(a.value) : env[a.value];
}

void fill(const CLit& c, const std::vector<Element>& env) {
  for (std::size_t i = 0; i < c.args.size(); ++i) c.scratch[i] = arg_value(c.args[i], env);
}

// Direct semantics of one literal under a total assignment of its free
// variables. Universal literals enumerate their bound variables in `env`.
bool literal_holds(const CLit& c, std::vector<Element>& env, const RelTable& rels,
                   std::size_t n) {
  switch (c.kind) {
    case LiteralKind::Equality:
      return arg_value(c.args[0], env) == arg_value(c.args[1], env);
    case LiteralKind::Inequality:
      return arg_value(c.args[0], env) != arg_value(c.args[1], env);
    case LiteralKind::Positive:
      fill(c, env);
      return rels.get(c.rel).contains(c.scratch);
    case LiteralKind::Negative:
      fill(c, env);
      return !rels.get(c.rel).contains(c.scratch);
    case LiteralKind::Universal: {
      const Dense& r = rels.get(c.rel);
      bool all = true;
      for_each_tuple(c.uslots.size(), n, [&](const Tuple& b) {
        if (!all) return;
        for (std::size_t i = 0; i < b.size(); ++i) env[c.uslots[i]] = b[i];
        fill(c, env);
        if (!r.contains(c.scratch)) all = false;
      });
      return all;
    }
  }
  return false;
}

std::vector<std::size_t> free_slots(const CLit& c) {
  std::vector<std::size_t> out;
  for (const auto& a : c.args)
    if (!a.is_const &&
        std::find(c.uslots.begin(), c.uslots.end(), a.value) == c.uslots.end())
      out.push_back(a.value);
  return out;
}

// ---------------------------------------------------------------------------
// DATALOG^r rule plans

enum class StepKind { Filter, BindEq, Scan, Enumerate };

struct ScanPos {
  enum Mode { CheckConst, CheckSlot, Bind } mode;
  std::size_t value;
};

struct Step {
  StepKind kind;
  std::size_t lit = 0;          // Filter / Scan / BindEq
  std::size_t target = 0;       // BindEq / Enumerate slot
  Arg source;                   // BindEq
  std::vector<ScanPos> scan;    // Scan
};

struct Plan {
  std::vector<CLit> lits;
  std::vector<Step> steps;
  std::size_t head_rel = 0;
  std::vector<Arg> head;
  std::size_t slot_count = 0;
};

Plan make_plan(const Rule& rule, RelTable& rels, const Structure& s) {
  Plan plan;
  Slots slots;
  for (const auto& t : rule.head_args) plan.head.push_back(compile_term(t, slots, s));
  for (const auto& lit : rule.body) plan.lits.push_back(compile_literal(lit, slots, rels, s));
  plan.head_rel = rels.id(rule.head);
  plan.slot_count = slots.size();

  std::vector<bool> bound(plan.slot_count, false);
  std::vector<bool> done(plan.lits.size(), false);
  auto all_bound = [&](const CLit& c) {
    for (std::size_t v : free_slots(c))
      if (!bound[v]) return false;
    return true;
  };
  std::size_t remaining = plan.lits.size();
  while (remaining > 0) {
    std::optional<Step> chosen;
    for (std::size_t i = 0; i < plan.lits.size() && !chosen; ++i)
      if (!done[i] && all_bound(plan.lits[i])) chosen = Step{StepKind::Filter, i, 0, {}, {}};
    for (std::size_t i = 0; i < plan.lits.size() && !chosen; ++i) {
      const CLit& c = plan.lits[i];
      if (done[i] || c.kind != LiteralKind::Equality) continue;
      for (int side = 0; side < 2 && !chosen; ++side) {
        const Arg& tgt = c.args[side];
        const Arg& src = c.args[1 - side];
        if (!tgt.is_const && !bound[tgt.value] && (src.is_const || bound[src.value]))
          chosen = Step{StepKind::BindEq, i, tgt.value, src, {}};
      }
    }
    if (!chosen) {
      std::optional<std::size_t> best;
      std::size_t best_score = 0;
      for (std::size_t i = 0; i < plan.lits.size(); ++i) {
        const CLit& c = plan.lits[i];
        if (done[i] || c.kind != LiteralKind::Positive) continue;
        std::size_t score = 1;
        for (const auto& a : c.args) score += (a.is_const || bound[a.value]) ? 1 : 0;
        if (!best || score > best_score) {
          best = i;
          best_score = score;
        }
      }
      if (best) {
        Step step{StepKind::Scan, *best, 0, {}, {}};
        std::vector<bool> local = bound;
        for (const auto& a : plan.lits[*best].args) {
          if (a.is_const) {
            step.scan.push_back({ScanPos::CheckConst, a.value});
          } else if (local[a.value]) {
            step.scan.push_back({ScanPos::CheckSlot, a.value});
          } else {
            step.scan.push_back({ScanPos::Bind, a.value});
            local[a.value] = true;
          }
        }
        chosen = std::move(step);
      }
    }
    if (!chosen) {
      // Only filters with unbound variables remain: enumerate one variable.
      for (std::size_t i = 0; i < plan.lits.size() && !chosen; ++i) {
        if (done[i]) continue;
        for (std::size_t v : free_slots(plan.lits[i]))
          if (!bound[v]) {
            chosen = Step{StepKind::Enumerate, 0, v, {}, {}};
            break;
          }
      }
    }
    Step step = std::move(*chosen);
    switch (step.kind) {
      case StepKind::Filter:
        done[step.lit] = true;
        --remaining;
        break;
      case StepKind::BindEq:
        bound[step.target] = true;
        done[step.lit] = true;
        --remaining;
        break;
      case StepKind::Scan:
        for (const auto& p : step.scan)
          if (p.mode == ScanPos::Bind) bound[p.value] = true;
        done[step.lit] = true;
        --remaining;
        break;
      case StepKind::Enumerate:
        bound[step.target] = true;
        break;
    }
    plan.steps.push_back(std::move(step));
  }
  for (const auto& a : plan.head)
    if (!a.is_const && !bound[a.value]) {
      plan.steps.push_back(Step{StepKind::Enumerate, 0, a.value, {}, {}});
      bound[a.value] = true;
    }
  return plan;
}

class PlanRunner {
 public:
  PlanRunner(const Plan& plan, const RelTable& rels, std::size_t n, Dense& out)
      : plan_(plan), rels_(rels), n_(n), out_(out), env_(plan.slot_count, 0),
        head_(plan.head.size()) {}

  void run() { step(0); }

 private:
  void step(std::size_t k) {
    if (k == plan_.steps.size()) {
      for (std::size_t i = 0; i < plan_.head.size(); ++i)
        head_[i] = arg_value(plan_.head[i], env_);
      out_.insert(head_);
      return;
    }
    const Step& s = plan_.steps[k];
    switch (s.kind) {
      case StepKind::Filter:
        if (literal_holds(plan_.lits[s.lit], env_, rels_, n_)) step(k + 1);
        return;
      case StepKind::BindEq:
        env_[s.target] = arg_value(s.source, env_);
        step(k + 1);
        return;
      case StepKind::Enumerate:
        for (Element e = 0; e < n_; ++e) {
          env_[s.target] = e;
          step(k + 1);
        }
        return;
      case StepKind::Scan: {
        const Dense& r = rels_.get(plan_.lits[s.lit].rel);
        // Index-based loop: the relation is never mutated during a round.
        for (std::size_t t = 0; t < r.tuples.size(); ++t) {
          const Tuple& tup = r.tuples[t];
          bool ok = true;
          for (std::size_t i = 0; i < s.scan.size() && ok; ++i) {
            const ScanPos& p = s.scan[i];
            switch (p.mode) {
              case ScanPos::CheckConst: ok = tup[i] == p.value; break;
              case ScanPos::CheckSlot: ok = tup[i] == env_[p.value]; break;
              case ScanPos::Bind: env_[p.value] = tup[i]; break;
            }
          }
          if (ok) step(k + 1);
        }
        return;
      }
    }
  }

  const Plan& plan_;
  const RelTable& rels_;
  std::size_t n_;
  Dense& out_;
  std::vector<Element> env_;
  Tuple head_;
};

}  // namespace

// ---------------------------------------------------------------------------

std::string dump_trace(const FixpointTrace& trace) {
  std::ostringstream os;
  for (std::size_t k = 0; k < trace.stages.size(); ++k) {
    os << "stage " << k << ":";
    for (const auto& [name, rel] : trace.stages[k]) os << " " << name << "=" << print(rel);
    os << "\n";
  }
  return os.str();
}

bool EvalResult::holds(const std::string& goal) const {
  const Relation& r = expanded.relation(goal);
  if (r.arity() == 0) return r.contains({});
  return !r.empty();
}

EvalResult eval_datalog(const Program& program, const Structure& input,
                        FixpointTrace* trace) {
  if (input.size == 0) throw Error(ErrorCode::InvalidArgument, "structure domain is empty");
  const std::size_t n = input.size;
  const std::set<std::string> intentional = program.intentional();

  RelTable rels;
  std::vector<Plan> plans;
  for (const auto& rule : program.rules) plans.push_back(make_plan(rule, rels, input));

  std::map<std::string, std::size_t> arity;
  for (const auto& name : intentional) {
    auto a = program.vocabulary.arity(name);
    if (!a)
      for (const auto& r : program.rules)
        if (r.head == name) a = r.head_args.size();
    arity[name] = *a;
  }

  std::map<std::string, Dense> ext;
  for (const auto& name : rels.names())
    if (!intentional.count(name)) {
      auto it = ext.emplace(name, Dense::from(input.relation(name), n)).first;
      rels.bind(rels.id(name), &it->second);
    }

  std::map<std::string, Dense> current;
  for (const auto& [name, a] : arity) current.emplace(name, Dense(a, n));
  auto snapshot = [&](const std::map<std::string, Dense>& stage) {
    std::map<std::string, Relation> out;
    for (const auto& [name, d] : stage) out.emplace(name, d.to_relation());
    return out;
  };
  if (trace) trace->stages = {snapshot(current)};

  while (true) {
    for (auto& [name, d] : current) rels.bind(rels.id(name), &d);
    std::map<std::string, Dense> next;
    for (const auto& [name, a] : arity) next.emplace(name, Dense(a, n));
    for (std::size_t i = 0; i < plans.size(); ++i) {
      PlanRunner runner(plans[i], rels, n, next.at(program.rules[i].head));
      runner.run();
    }
    bool stable = true;
    for (const auto& [name, d] : next)
      if (!d.same(current.at(name))) stable = false;
    if (trace) trace->stages.push_back(snapshot(next));
    current = std::move(next);
    if (stable) break;
  }

  EvalResult result;
  result.expanded = input;
  for (const auto& [name, d] : current) result.expanded.set_relation(name, d.to_relation());
  return result;
}

// ---------------------------------------------------------------------------
// Existential second-order Horn, by exhaustive enumeration

std::uint64_t horn_budget_from_env() {
  const char* raw = std::getenv("HORNFIX_BUDGET");
  if (!raw || !*raw) return kDefaultHornBudget;
  char* end = nullptr;
  unsigned long long v = std::strtoull(raw, &end, 10);
  if (end == raw || *end != '\0') return kDefaultHornBudget;
  return v;
}

bool eval_horn_brute_force(const HornSentence& sentence, const Structure& input,
                           std::uint64_t budget) {
  const std::size_t n = input.size;
  if (n == 0) throw Error(ErrorCode::InvalidArgument, "structure domain is empty");

  std::map<std::string, std::uint64_t> offset;
  std::uint64_t bits = 0;
  for (const auto& v : sentence.so_vars) {
    offset[v.name] = bits;
    bits += cube(n, v.arity);
    if (bits > 62)
      throw Error(ErrorCode::BudgetExceeded,
                  "second-order search space exceeds 2^62 assignments");
  }
  const std::uint64_t assignments = std::uint64_t{1} << bits;
  if (assignments > budget)
    throw Error(ErrorCode::BudgetExceeded,
                "second-order search needs 2^" + std::to_string(bits) + " = " +
                    std::to_string(assignments) + " assignments, budget is " +
                    std::to_string(budget));

  RelTable rels;
  Slots slots;
  for (const auto& v : sentence.fo_vars) slots.get(v);
  const std::size_t fo = sentence.fo_vars.size();

  struct CClause {
    std::vector<CLit> alphas, betas;
    std::optional<CLit> head;
  };
  std::vector<CClause> compiled;
  for (const auto& clause : sentence.clauses) {
    CClause c;
    for (const auto& a : clause.alphas) c.alphas.push_back(compile_literal(a, slots, rels, input));
    for (const auto& b : clause.betas) c.betas.push_back(compile_literal(b, slots, rels, input));
    if (clause.head) c.head = compile_literal(*clause.head, slots, rels, input);
    compiled.push_back(std::move(c));
  }
  if (slots.size() > fo + 64)
    throw Error(ErrorCode::InvalidArgument, "too many universally bound variables");
  std::map<std::string, Dense> ext;
  for (const auto& name : rels.names())
    if (!sentence.find_so_var(name)) {
      auto it = ext.emplace(name, Dense::from(input.relation(name), n)).first;
      rels.bind(rels.id(name), &it->second);
    }

  auto bit_of = [&](const CLit& c, const std::vector<Element>& env) {
    fill(c, env);
    std::uint64_t r = 0;
    for (Element e : c.scratch) r = r * n + e;
    return offset.at(rels.names()[c.rel]) + r;
  };

  // Ground every clause: (required bits, head bit or none).
  std::set<std::pair<std::uint64_t, std::int64_t>> ground;
  std::vector<Element> env(slots.size(), 0);
  for (const auto& c : compiled) {
    for_each_tuple(fo, n, [&](const Tuple& a) {
      std::copy(a.begin(), a.end(), env.begin());
      for (const auto& b : c.betas)
        if (!literal_holds(b, env, rels, n)) return;
      std::uint64_t req = 0;
      for (const auto& al : c.alphas) {
        if (al.kind == LiteralKind::Universal) {
          for_each_tuple(al.uslots.size(), n, [&](const Tuple& b) {
            for (std::size_t i = 0; i < b.size(); ++i) env[al.uslots[i]] = b[i];
            req |= std::uint64_t{1} << bit_of(al, env);
          });
        } else {
          req |= std::uint64_t{1} << bit_of(al, env);
        }
      }
      std::int64_t head = -1;
      if (c.head) {
        head = static_cast<std::int64_t>(bit_of(*c.head, env));
        if (req & (std::uint64_t{1} << head)) return;  // tautology
      }
      ground.emplace(req, head);
    });
  }
  std::vector<std::pair<std::uint64_t, std::uint64_t>> checks;  // (required, head mask)
  for (const auto& [req, head] : ground) {
    if (req == 0 && head < 0) return false;
    checks.emplace_back(req, head < 0 ? 0 : std::uint64_t{1} << head);
  }
  std::stable_sort(checks.begin(), checks.end(), [](const auto& a, const auto& b) {
    return __builtin_popcountll(a.first) < __builtin_popcountll(b.first);
  });
  for (std::uint64_t mask = 0; mask < assignments; ++mask) {
    bool ok = true;
    for (const auto& [req, head] : checks)
      if ((mask & req) == req && !(mask & head)) {
        ok = false;
        break;
      }
    if (ok) return true;
  }
  return false;
}

// ---------------------------------------------------------------------------
// Normal-form LFP

bool eval_lfp(const LfpFormula& f, const Structure& input, Relation* fixpoint) {
  const std::size_t n = input.size;
  if (n == 0) throw Error(ErrorCode::InvalidArgument, "structure domain is empty");
  RelTable rels;
  Slots slots;
  for (const auto& z : f.lfp_vars) slots.get(z);
  std::vector<std::size_t> prefix_slots;
  for (const auto& q : f.prefix) prefix_slots.push_back(slots.get(q.var));
  std::vector<std::vector<CLit>> clauses;
  for (const auto& clause : f.clauses) {
    std::vector<CLit> c;
    for (const auto& lit : clause) c.push_back(compile_literal(lit, slots, rels, input));
    clauses.push_back(std::move(c));
  }
  const std::size_t zid = rels.id(f.lfp_relation);
  std::map<std::string, Dense> ext;
  for (const auto& name : rels.names())
    if (name != f.lfp_relation) {
      auto it = ext.emplace(name, Dense::from(input.relation(name), n)).first;
      rels.bind(rels.id(name), &it->second);
    }

  const std::size_t k = f.lfp_vars.size();
  std::vector<Element> env(slots.size(), 0);
  std::function<bool(std::size_t)> sat = [&](std::size_t i) -> bool {
    if (i == f.prefix.size()) {
      for (const auto& clause : clauses) {
        bool all = true;
        for (const auto& lit : clause)
          if (!literal_holds(lit, env, rels, n)) {
            all = false;
            break;
          }
        if (all) return true;
      }
      return false;
    }
    const bool exists = f.prefix[i].quantifier == Quantifier::Exists;
    for (Element e = 0; e < n; ++e) {
      env[prefix_slots[i]] = e;
      if (sat(i + 1) == exists) return exists;
    }
    return !exists;
  };

  Dense z(k, n);
  while (true) {
    rels.bind(zid, &z);
    Dense next(k, n);
    for_each_tuple(k, n, [&](const Tuple& c) {
      std::copy(c.begin(), c.end(), env.begin());
      if (sat(0)) next.insert(c);
    });
    const bool stable = next.same(z);
    z = std::move(next);
    if (stable) break;
  }
  if (fixpoint) *fixpoint = z.to_relation();
  for (Element u = 0; u < n; ++u)
    if (z.contains(Tuple(k, u))) return true;
  return false;
}

// ---------------------------------------------------------------------------
// Simultaneous LFP systems

SimLfpResult eval_sim_lfp(const SimLfpSystem& system, const Structure& input) {
  const std::size_t n = input.size;
  if (n == 0) throw Error(ErrorCode::InvalidArgument, "structure domain is empty");
  RelTable rels;
  struct CDisjunct {
    std::size_t slot_count;
    std::vector<std::size_t> exists_slots;
    std::vector<CLit> lits;
  };
  struct CDef {
    std::size_t rel;
    std::size_t arity;
    std::vector<CDisjunct> disjuncts;
  };
  std::vector<CDef> defs;
  for (const auto& d : system.definitions) {
    CDef cd{rels.id(d.relation), d.args.size(), {}};
    for (const auto& dj : d.disjuncts) {
      Slots slots;
      for (const auto& a : d.args) slots.get(a);
      CDisjunct cj;
      for (const auto& v : dj.exists_vars) cj.exists_slots.push_back(slots.get(v));
      for (const auto& lit : dj.literals) cj.lits.push_back(compile_literal(lit, slots, rels, input));
      cj.slot_count = slots.size();
      cd.disjuncts.push_back(std::move(cj));
    }
    defs.push_back(std::move(cd));
  }
  const std::size_t goal_id = rels.id(system.goal_relation);
  std::vector<Element> goal_tuple;
  for (const auto& t : system.goal_args) {
    if (t.is_var())
      throw Error(ErrorCode::InvalidArgument, "goal arguments must be constants");
    goal_tuple.push_back(input.constant(t.name));
  }

  std::map<std::string, Dense> ext;
  for (const auto& name : rels.names())
    if (!system.find(name)) {
      auto it = ext.emplace(name, Dense::from(input.relation(name), n)).first;
      rels.bind(rels.id(name), &it->second);
    }

  std::vector<Dense> current;
  for (const auto& d : defs) current.emplace_back(d.arity, n);
  while (true) {
    for (std::size_t i = 0; i < defs.size(); ++i) rels.bind(defs[i].rel, &current[i]);
    std::vector<Dense> next;
    for (const auto& d : defs) {
      Dense out(d.arity, n);
      for_each_tuple(d.arity, n, [&](const Tuple& a) {
        for (const auto& dj : d.disjuncts) {
          std::vector<Element> env(dj.slot_count, 0);
          std::copy(a.begin(), a.end(), env.begin());
          bool found = false;
          for_each_tuple(dj.exists_slots.size(), n, [&](const Tuple& w) {
            if (found) return;
            for (std::size_t i = 0; i < w.size(); ++i) env[dj.exists_slots[i]] = w[i];
            for (const auto& lit : dj.lits)
              if (!literal_holds(lit, env, rels, n)) return;
            found = true;
          });
          if (found) {
            out.insert(a);
            return;
          }
        }
      });
      next.push_back(std::move(out));
    }
    bool stable = true;
    for (std::size_t i = 0; i < defs.size(); ++i)
      if (!next[i].same(current[i])) stable = false;
    current = std::move(next);
    if (stable) break;
  }
  for (std::size_t i = 0; i < defs.size(); ++i) rels.bind(defs[i].rel, &current[i]);

  SimLfpResult result;
  for (std::size_t i = 0; i < defs.size(); ++i)
    result.relations.emplace(system.definitions[i].relation, current[i].to_relation());
  if (!rels.bound(goal_id))
    throw Error(ErrorCode::MissingSymbol, "no relation " + system.goal_relation);
  const Dense& goal = rels.get(goal_id);
  if (goal_tuple.size() == goal.arity)
    result.goal_holds = goal.contains(goal_tuple);
  else if (goal_tuple.empty())
    result.goal_holds = !goal.tuples.empty();
  else
    throw Error(ErrorCode::ArityMismatch, "goal arguments do not match the goal relation");
  return result;
}

}  // namespace hornfix
