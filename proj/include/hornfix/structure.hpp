#pragma once

#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "hornfix/ast.hpp"

namespace hornfix {

using Element = std::uint32_t;
using Tuple = std::vector<Element>;

// A finite relation of fixed arity. Tuples are kept sorted so iteration and
// serialization are deterministic.
class Relation {
 public:
  explicit Relation(std::size_t arity = 0) : arity_(arity) {}
  Relation(std::size_t arity, std::set<Tuple> tuples);

  std::size_t arity() const { return arity_; }
  std::size_t size() const { return tuples_.size(); }
  bool empty() const { return tuples_.empty(); }

  bool contains(const Tuple& t) const { return tuples_.count(t) != 0; }
  // Inserts t; returns false if already present. Throws on wrong length.
  bool insert(Tuple t);

  const std::set<Tuple>& tuples() const { return tuples_; }
  auto begin() const { return tuples_.begin(); }
  auto end() const { return tuples_.end(); }

  bool subset_of(const Relation& other) const;

  // The full relation {0..n-1}^arity.
  static Relation full(std::size_t arity, std::size_t n);

  friend bool operator==(const Relation&, const Relation&) = default;

 private:
  std::size_t arity_;
  std::set<Tuple> tuples_;
};

// Calls f(tuple) for every tuple in {0..n-1}^arity in lexicographic order.
template <typename F>
void for_each_tuple(std::size_t arity, std::size_t n, F&& f) {
  Tuple t(arity, 0);
  if (arity > 0 && n == 0) return;
  while (true) {
    f(static_cast<const Tuple&>(t));
    std::size_t i = arity;
    while (i > 0) {
      --i;
      if (++t[i] < n) break;
      t[i] = 0;
      if (i == 0) return;
    }
    if (arity == 0) return;
  }
}

struct Structure {
  Vocabulary vocabulary;
  std::size_t size = 1;
  std::map<std::string, Relation> relations;
  std::map<std::string, Element> constants;

  const Relation& relation(const std::string& name) const;
  Element constant(const std::string& name) const;

  // Adds or replaces a relation and records it in the vocabulary.
  void set_relation(const std::string& name, Relation r);
  void set_constant(const std::string& name, Element e);

  // Throws Error if any invariant is broken.
  void check() const;

  friend bool operator==(const Structure&, const Structure&) = default;
};

// Relational algebra over the domain {0..n-1}.
Relation complement(const Relation& r, std::size_t n);
Relation intersect(const Relation& a, const Relation& b);
Relation unite(const Relation& a, const Relation& b);
// g is a 0-based permutation of positions; output tuple i-th entry is a[g[i]].
Relation permute(const Relation& r, const std::vector<std::size_t>& g);
Relation product(const Relation& a, const Relation& b);
// Quantifies out the k leading positions.
Relation project_exists(const Relation& r, std::size_t k, std::size_t n);
Relation project_forall(const Relation& r, std::size_t k, std::size_t n);

// Restriction to `subset`, renumbered in increasing element order.
Structure induced_substructure(const Structure& s, const std::set<Element>& subset);

}  // namespace hornfix
