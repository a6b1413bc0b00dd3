#include "hornfix/structure.hpp"

#include <algorithm>

#include "hornfix/error.hpp"

namespace hornfix {

const char* to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::ArityMismatch: return "ArityMismatch";
    case ErrorCode::BadPermutation: return "BadPermutation";
    case ErrorCode::ConstantOutsideSubset: return "ConstantOutsideSubset";
    case ErrorCode::MissingSymbol: return "MissingSymbol";
    case ErrorCode::BudgetExceeded: return "BudgetExceeded";
    case ErrorCode::DepthTooLarge: return "DepthTooLarge";
    case ErrorCode::NotSaturated: return "NotSaturated";
    case ErrorCode::NotInvariant: return "NotInvariant";
    case ErrorCode::MalformedLength: return "MalformedLength";
    case ErrorCode::GoalNotZeroAry: return "GoalNotZeroAry";
    case ErrorCode::UnsupportedLiteral: return "UnsupportedLiteral";
    case ErrorCode::NotABinaryTree: return "NotABinaryTree";
    case ErrorCode::StructuralViolation: return "StructuralViolation";
    case ErrorCode::Io: return "Io";
  }
  return "?";
}

Relation::Relation(std::size_t arity, std::set<Tuple> tuples)
    : arity_(arity), tuples_(std::move(tuples)) {
  for (const auto& t : tuples_)
    if (t.size() != arity_)
      throw Error(ErrorCode::ArityMismatch, "tuple length differs from relation arity");
}

bool Relation::insert(Tuple t) {
  if (t.size() != arity_)
    throw Error(ErrorCode::ArityMismatch, "tuple length differs from relation arity");
  return tuples_.insert(std::move(t)).second;
}

bool Relation::subset_of(const Relation& other) const {
  return arity_ == other.arity_ &&
         std::includes(other.tuples_.begin(), other.tuples_.end(), tuples_.begin(),
                       tuples_.end());
}

Relation Relation::full(std::size_t arity, std::size_t n) {
  Relation r(arity);
  for_each_tuple(arity, n, [&](const Tuple& t) { r.tuples_.insert(t); });
  return r;
}

const Relation& Structure::relation(const std::string& name) const {
  auto it = relations.find(name);
  if (it == relations.end())
    throw Error(ErrorCode::MissingSymbol, "structure has no relation " + name);
  return it->second;
}

Element Structure::constant(const std::string& name) const {
  auto it = constants.find(name);
  if (it == constants.end())
    throw Error(ErrorCode::MissingSymbol, "structure has no constant " + name);
  return it->second;
}

void Structure::set_relation(const std::string& name, Relation r) {
  vocabulary.relations[name] = r.arity();
  relations.insert_or_assign(name, std::move(r));
}

void Structure::set_constant(const std::string& name, Element e) {
  vocabulary.constants.insert(name);
  constants[name] = e;
}

void Structure::check() const {
  if (size == 0) throw Error(ErrorCode::InvalidArgument, "structure domain is empty");
  for (const auto& [name, rel] : relations) {
    auto arity = vocabulary.arity(name);
    if (!arity || *arity != rel.arity())
      throw Error(ErrorCode::ArityMismatch, "relation " + name + " disagrees with vocabulary");
    for (const auto& t : rel)
      for (Element e : t)
        if (e >= size)
          throw Error(ErrorCode::InvalidArgument, "relation " + name + " leaves the domain");
  }
  for (const auto& [name, e] : constants) {
    if (!vocabulary.constants.count(name))
      throw Error(ErrorCode::MissingSymbol, "constant " + name + " not in vocabulary");
    if (e >= size)
      throw Error(ErrorCode::InvalidArgument, "constant " + name + " leaves the domain");
  }
}

Relation complement(const Relation& r, std::size_t n) {
  Relation out(r.arity());
  for_each_tuple(r.arity(), n, [&](const Tuple& t) {
    if (!r.contains(t)) out.insert(t);
  });
  return out;
}

namespace {

void require_same_arity(const Relation& a, const Relation& b) {
  if (a.arity() != b.arity())
    throw Error(ErrorCode::ArityMismatch, "relations have different arities");
}

}  // namespace

Relation intersect(const Relation& a, const Relation& b) {
  require_same_arity(a, b);
  std::set<Tuple> out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(),
                        std::inserter(out, out.end()));
  return Relation(a.arity(), std::move(out));
}

Relation unite(const Relation& a, const Relation& b) {
  require_same_arity(a, b);
  std::set<Tuple> out;
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::inserter(out, out.end()));
  return Relation(a.arity(), std::move(out));
}

Relation permute(const Relation& r, const std::vector<std::size_t>& g) {
  if (g.size() != r.arity())
    throw Error(ErrorCode::BadPermutation, "permutation length differs from arity");
  std::vector<bool> hit(g.size(), false);
  for (std::size_t p : g) {
    if (p >= g.size() || hit[p])
      throw Error(ErrorCode::BadPermutation, "not a permutation of positions");
    hit[p] = true;
  }
  Relation out(r.arity());
  for (const auto& t : r) {
    Tuple u(t.size());
    for (std::size_t i = 0; i < g.size(); ++i) u[i] = t[g[i]];
    out.insert(std::move(u));
  }
  return out;
}

Relation product(const Relation& a, const Relation& b) {
  Relation out(a.arity() + b.arity());
  for (const auto& x : a)
    for (const auto& y : b) {
      Tuple t = x;
      t.insert(t.end(), y.begin(), y.end());
      out.insert(std::move(t));
    }
  return out;
}

Relation project_exists(const Relation& r, std::size_t k, std::size_t n) {
  (void)n;
  if (k > r.arity()) throw Error(ErrorCode::ArityMismatch, "projection wider than relation");
  Relation out(r.arity() - k);
  for (const auto& t : r) out.insert(Tuple(t.begin() + static_cast<long>(k), t.end()));
  return out;
}

Relation project_forall(const Relation& r, std::size_t k, std::size_t n) {
  if (k > r.arity()) throw Error(ErrorCode::ArityMismatch, "projection wider than relation");
  Relation out(r.arity() - k);
  for_each_tuple(r.arity() - k, n, [&](const Tuple& rest) {
    bool all = true;
    for_each_tuple(k, n, [&](const Tuple& prefix) {
      if (!all) return;
      Tuple t = prefix;
      t.insert(t.end(), rest.begin(), rest.end());
      if (!r.contains(t)) all = false;
    });
    if (all) out.insert(rest);
  });
  return out;
}

Structure induced_substructure(const Structure& s, const std::set<Element>& subset) {
  if (subset.empty())
    throw Error(ErrorCode::InvalidArgument, "substructure must be non-empty");
  std::map<Element, Element> index;
  for (Element e : subset) {
    if (e >= s.size) throw Error(ErrorCode::InvalidArgument, "subset leaves the domain");
    index.emplace(e, static_cast<Element>(index.size()));
  }
  Structure out;
  out.vocabulary = s.vocabulary;
  out.size = subset.size();
  for (const auto& [name, e] : s.constants) {
    auto it = index.find(e);
    if (it == index.end())
      throw Error(ErrorCode::ConstantOutsideSubset, "constant " + name + " not retained");
    out.constants[name] = it->second;
  }
  for (const auto& [name, rel] : s.relations) {
    Relation r(rel.arity());
    for (const auto& t : rel) {
      Tuple u;
      u.reserve(t.size());
      for (Element e : t) {
        auto it = index.find(e);
        if (it == index.end()) break;
        u.push_back(it->second);
      }
      if (u.size() == t.size()) r.insert(std::move(u));
    }
    out.relations.emplace(name, std::move(r));
  }
  return out;
}

}  // namespace hornfix
