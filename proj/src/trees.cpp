#include "hornfix/trees.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <optional>

#include "hornfix/error.hpp"

namespace hornfix {

std::size_t node_depth(Node v) {
  return static_cast<std::size_t>(std::bit_width(static_cast<std::uint64_t>(v) + 1) - 1);
}

Node parent(Node v) { return v == 0 ? 0 : (v - 1) / 2; }
Node left_child(Node v) { return 2 * v + 1; }
Node right_child(Node v) { return 2 * v + 2; }

Node lca(Node a, Node b) {
  std::size_t da = node_depth(a), db = node_depth(b);
  while (da > db) a = parent(a), --da;
  while (db > da) b = parent(b), --db;
  while (a != b) a = parent(a), b = parent(b);
  return a;
}

std::vector<Node> level_nodes(std::size_t depth) {
  std::vector<Node> out;
  const Node first = static_cast<Node>((std::size_t{1} << depth) - 1);
  for (Node v = first; v < 2 * first + 1; ++v) out.push_back(v);
  return out;
}

std::size_t triangular(std::size_t r) { return r * (r + 1) / 2; }

std::size_t arity_of_char_length(std::size_t length) {
  std::size_t r = 0;
  while (triangular(r) < length) ++r;
  if (triangular(r) != length)
    throw Error(ErrorCode::MalformedLength,
                "length " + std::to_string(length) + " is not of the form r(r+1)/2");
  return r;
}

std::size_t pair_index(std::size_t r, std::size_t i, std::size_t j) {
  if (i > j) std::swap(i, j);
  return i * r - i * (i - 1) / 2 + (j - i);
}

CharTuple char_tuple(const std::vector<Node>& nodes) {
  CharTuple out;
  out.reserve(triangular(nodes.size()));
  for (std::size_t i = 0; i < nodes.size(); ++i)
    for (std::size_t j = i; j < nodes.size(); ++j)
      out.push_back(static_cast<std::uint32_t>(node_depth(lca(nodes[i], nodes[j]))));
  return out;
}

// ---------------------------------------------------------------------------
// Automorphisms and invariance

std::vector<Automorphism> enumerate_automorphisms(const PerfectTree& tree,
                                                  std::size_t max_depth) {
  if (tree.depth() > max_depth)
    throw Error(ErrorCode::DepthTooLarge,
                "automorphism enumeration capped at depth " + std::to_string(max_depth));
  const std::size_t nodes = tree.node_count();
  const std::size_t internal = (std::size_t{1} << tree.depth()) - 1;
  std::vector<Automorphism> out;
  for (std::uint64_t swaps = 0; swaps < (std::uint64_t{1} << internal); ++swaps) {
    Automorphism f(nodes, 0);
    for (Node u = 0; u < internal; ++u) {
      const bool s = (swaps >> u) & 1;
      f[left_child(u)] = s ? right_child(f[u]) : left_child(f[u]);
      f[right_child(u)] = s ? left_child(f[u]) : right_child(f[u]);
    }
    out.push_back(std::move(f));
  }
  return out;
}

Relation apply(const Automorphism& f, const Relation& r) {
  Relation out(r.arity());
  for (const auto& t : r) {
    Tuple u;
    for (Node v : t) u.push_back(f.at(v));
    out.insert(std::move(u));
  }
  return out;
}

bool is_invariant(const Relation& r, const PerfectTree& tree, std::size_t max_depth) {
  for (const auto& f : enumerate_automorphisms(tree, max_depth))
    if (!(apply(f, r) == r)) return false;
  return true;
}

bool is_invariant_by_char(const Relation& r, const PerfectTree& tree) {
  std::map<CharTuple, bool> seen;
  bool ok = true;
  for_each_tuple(r.arity(), tree.node_count(), [&](const Tuple& t) {
    if (!ok) return;
    auto [it, inserted] = seen.emplace(char_tuple(t), r.contains(t));
    if (!inserted && it->second != r.contains(t)) ok = false;
  });
  return ok;
}

bool is_saturated(const Relation& r, const PerfectTree& tree) {
  // Saturated iff every depth class is either empty or complete in r.
  std::map<Tuple, std::uint64_t> count;
  for (const auto& t : r) {
    Tuple d;
    for (Node v : t) {
      if (!tree.contains(v)) return false;
      d.push_back(static_cast<Element>(node_depth(v)));
    }
    ++count[d];
  }
  for (const auto& [d, c] : count) {
    std::uint64_t full = 1;
    for (Element e : d) full <<= e;
    if (c != full) return false;
  }
  return true;
}

Relation char_relation_of(const Relation& r, const PerfectTree& tree) {
  if (!is_invariant_by_char(r, tree))
    throw Error(ErrorCode::NotInvariant, "relation is not invariant under tree automorphisms");
  Relation out(triangular(r.arity()));
  for (const auto& t : r) out.insert(char_tuple(t));
  return out;
}

// ---------------------------------------------------------------------------
// Encodings

TreeStructure make_tree(std::size_t levels) {
  if (levels == 0) throw Error(ErrorCode::InvalidArgument, "a tree needs at least one level");
  if (levels > 24) throw Error(ErrorCode::InvalidArgument, "tree too large to materialize");
  TreeStructure t;
  t.tree.levels = levels;
  t.structure.size = t.tree.node_count();
  t.structure.set_constant("root", 0);
  Relation e(2);
  const Node internal = static_cast<Node>((std::size_t{1} << (levels - 1)) - 1);
  for (Node u = 0; u < internal; ++u) {
    e.insert({u, left_child(u)});
    e.insert({u, right_child(u)});
  }
  t.structure.set_relation("E", std::move(e));
  return t;
}

TreeStructure encode(const Structure& a) {
  if (!a.constants.empty())
    throw Error(ErrorCode::InvalidArgument, "only purely relational structures can be encoded");
  if (a.relations.count("E"))
    throw Error(ErrorCode::InvalidArgument, "relation name E is reserved for tree edges");
  TreeStructure t = make_tree(a.size);
  for (const auto& [name, rel] : a.relations) {
    Relation out(rel.arity());
    for (const auto& d : rel) {
      Tuple pick(d.size());
      auto expand = [&](auto&& self, std::size_t i) -> void {
        if (i == d.size()) {
          out.insert(pick);
          return;
        }
        for (Node v : level_nodes(d[i])) {
          pick[i] = v;
          self(self, i + 1);
        }
      };
      expand(expand, 0);
    }
    t.structure.set_relation(name, std::move(out));
  }
  return t;
}

Structure decode(const TreeStructure& t) {
  Structure a;
  a.size = t.tree.levels;
  for (const auto& [name, rel] : t.structure.relations) {
    if (name == "E") continue;
    if (!is_saturated(rel, t.tree))
      throw Error(ErrorCode::NotSaturated, "relation " + name + " is not saturated");
    Relation out(rel.arity());
    for (const auto& tup : rel) {
      Tuple d;
      for (Node v : tup) d.push_back(static_cast<Element>(node_depth(v)));
      out.insert(std::move(d));
    }
    a.set_relation(name, std::move(out));
  }
  return a;
}

TreeStructure as_tree_structure(const Structure& s) {
  std::size_t levels = 0;
  while (((std::size_t{1} << levels) - 1) < s.size) ++levels;
  if (((std::size_t{1} << levels) - 1) != s.size)
    throw Error(ErrorCode::NotABinaryTree, "domain size is not 2^h - 1");
  TreeStructure t = make_tree(levels);
  auto root = s.constants.find("root");
  if (root == s.constants.end() || root->second != 0)
    throw Error(ErrorCode::NotABinaryTree, "constant root must be node 0");
  auto e = s.relations.find("E");
  if (e == s.relations.end() || !(e->second == t.structure.relation("E")))
    throw Error(ErrorCode::NotABinaryTree, "E is not the heap-ordered perfect tree");
  t.structure = s;
  return t;
}

// ---------------------------------------------------------------------------
// Deciders and CHECK

bool decider_r_neq(std::uint32_t e1, std::uint32_t e2, std::uint32_t e3) {
  if (e1 == e3) return e2 < e1;
  return e2 <= std::min(e1, e3);
}

bool decider_r_nege(std::uint32_t e1, std::uint32_t e2, std::uint32_t e3) {
  if (e1 >= e3) return e2 <= e3;
  if (e1 + 1 == e3) return e2 < e1;
  return e2 <= e1;
}

namespace {

struct View {
  const CharTuple& e;
  std::size_t n;
  std::uint32_t diag(std::size_t i) const { return e[pair_index(n, i, i)]; }
  std::uint32_t pair(std::size_t i, std::size_t j) const { return e[pair_index(n, i, j)]; }
};

struct Split {
  bool reject = false;
  std::vector<std::size_t> left, right;
};

// Steps 1-4 of PreCHECK, returning the index sets CHECK recurses on.
Split pre_check_split(const View& v) {
  Split out;
  const std::size_t n = v.n;
  std::uint32_t k1 = v.diag(0);
  for (std::size_t i = 1; i < n; ++i) k1 = std::min(k1, v.diag(i));
  std::uint32_t k2 = v.pair(0, 1);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) k2 = std::min(k2, v.pair(i, j));

  if (k1 < k2) {
    out.reject = true;
    return out;
  }
  auto any_pair = [&](const std::vector<std::size_t>& a, const std::vector<std::size_t>& b,
                      bool distinct_only, auto&& bad) {
    for (std::size_t i : a)
      for (std::size_t j : b) {
        if (distinct_only && i >= j) continue;
        if (bad(v.pair(i, j))) return true;
      }
    return false;
  };

  if (k1 == k2) {
    std::vector<std::size_t> s;
    std::optional<std::size_t> pivot;
    for (std::size_t i = 0; i < n; ++i) {
      if (v.diag(i) == k1)
        s.push_back(i);
      else if (!pivot)
        pivot = i;
    }
    if (pivot) {
      for (std::size_t i = 0; i < n; ++i) {
        if (v.diag(i) == k1) continue;
        if (i == *pivot || v.pair(*pivot, i) > k1)
          out.left.push_back(i);
        else if (v.pair(*pivot, i) == k1)
          out.right.push_back(i);
      }
    }
    std::vector<std::size_t> lr = out.left;
    lr.insert(lr.end(), out.right.begin(), out.right.end());
    auto ne = [&](std::uint32_t x) { return x != k1; };
    auto eq = [&](std::uint32_t x) { return x == k1; };
    out.reject = any_pair(s, s, true, ne) || any_pair(s, lr, false, ne) ||
                 any_pair(out.left, out.left, true, eq) ||
                 any_pair(out.right, out.right, true, eq) ||
                 any_pair(out.left, out.right, false, ne);
    return out;
  }

  out.left.push_back(0);
  for (std::size_t i = 1; i < n; ++i) {
    if (v.pair(0, i) > k2)
      out.left.push_back(i);
    else if (v.pair(0, i) == k2)
      out.right.push_back(i);
  }
  auto ne = [&](std::uint32_t x) { return x != k2; };
  auto eq = [&](std::uint32_t x) { return x == k2; };
  out.reject = any_pair(out.left, out.left, true, eq) ||
               any_pair(out.right, out.right, true, eq) ||
               any_pair(out.left, out.right, false, ne);
  return out;
}

CharTuple sub_tuple(const View& v, const std::vector<std::size_t>& idx) {
  CharTuple out;
  for (std::size_t a = 0; a < idx.size(); ++a)
    for (std::size_t b = a; b < idx.size(); ++b) out.push_back(v.pair(idx[a], idx[b]));
  return out;
}

}  // namespace

bool pre_check(const CharTuple& e) {
  const std::size_t n = arity_of_char_length(e.size());
  if (n <= 1) return true;
  return !pre_check_split(View{e, n}).reject;
}

bool check(const CharTuple& e) {
  const std::size_t n = arity_of_char_length(e.size());
  if (n <= 1) return true;
  const View v{e, n};
  Split s = pre_check_split(v);
  if (s.reject) return false;
  return check(sub_tuple(v, s.left)) && check(sub_tuple(v, s.right));
}

// ---------------------------------------------------------------------------
// Characteristic structure

std::string star_name(const std::string& relation) { return relation + "*"; }
std::string negated_star_name(const std::string& relation) { return relation + "~*"; }

namespace {

constexpr std::uint64_t kMaxEnumeration = 50'000'000;

void require_enumerable(std::size_t base, std::size_t arity) {
  std::uint64_t cells = 1;
  for (std::size_t i = 0; i < arity; ++i) {
    cells *= base;
    if (cells > kMaxEnumeration)
      throw Error(ErrorCode::InvalidArgument,
                  "too many tuples to enumerate; use the decider method");
  }
}

Structure sigma_skeleton(std::size_t levels) {
  Structure s;
  s.size = levels;
  s.set_constant(kZero, 0);
  Relation succ(2);
  for (Element i = 0; i + 1 < levels; ++i) succ.insert({i, i + 1});
  s.set_relation(kSucc, std::move(succ));
  return s;
}

// Characteristic relations decided from the base structure: R* holds at e iff
// CHECK(e) accepts and the diagonal of e is in R.
Structure sigma_decided(const Structure& a, std::size_t m) {
  const std::size_t h = a.size;
  Structure s = sigma_skeleton(h);
  Relation neq(3), nege(3);
  for_each_tuple(3, h, [&](const Tuple& e) {
    if (decider_r_neq(e[0], e[1], e[2])) neq.insert(e);
    if (decider_r_nege(e[0], e[1], e[2])) nege.insert(e);
  });
  s.set_relation(kRNeq, std::move(neq));
  s.set_relation(kRNegE, std::move(nege));

  std::map<std::size_t, std::vector<CharTuple>> valid;  // arity -> CHECK-accepted tuples
  auto candidates = [&](std::size_t r) -> const std::vector<CharTuple>& {
    auto it = valid.find(r);
    if (it != valid.end()) return it->second;
    require_enumerable(h, triangular(r));
    std::vector<CharTuple> out;
    for_each_tuple(triangular(r), h, [&](const Tuple& e) {
      if (check(e)) out.push_back(e);
    });
    return valid.emplace(r, std::move(out)).first->second;
  };
  Relation ful(triangular(m));
  for (const auto& e : candidates(m)) ful.insert(e);
  s.set_relation(kFul, std::move(ful));
  for (const auto& [name, rel] : a.relations) {
    const std::size_t r = rel.arity();
    Relation pos(triangular(r)), neg(triangular(r));
    for (const auto& e : candidates(r)) {
      Tuple diag;
      for (std::size_t i = 0; i < r; ++i) diag.push_back(e[pair_index(r, i, i)]);
      (rel.contains(diag) ? pos : neg).insert(e);
    }
    s.set_relation(star_name(name), std::move(pos));
    s.set_relation(negated_star_name(name), std::move(neg));
  }
  return s;
}

}  // namespace

Structure sigma_structure(const TreeStructure& t, std::size_t m, SigmaMethod method) {
  if (method == SigmaMethod::Decide) return sigma_decided(decode(t), m);

  const std::size_t nodes = t.tree.node_count();
  Structure s = sigma_skeleton(t.tree.levels);
  Relation neq(3), nege(3);
  const Relation& e = t.structure.relation("E");
  for (Node a = 0; a < nodes; ++a)
    for (Node b = 0; b < nodes; ++b) {
      CharTuple c = char_tuple({a, b});
      if (a != b) neq.insert(c);
      if (!e.contains({a, b})) nege.insert(c);
    }
  s.set_relation(kRNeq, std::move(neq));
  s.set_relation(kRNegE, std::move(nege));

  require_enumerable(nodes, m);
  Relation ful(triangular(m));
  for_each_tuple(m, nodes, [&](const Tuple& tup) { ful.insert(char_tuple(tup)); });
  s.set_relation(kFul, std::move(ful));
  for (const auto& [name, rel] : t.structure.relations) {
    if (name == "E") continue;
    require_enumerable(nodes, rel.arity());
    Relation pos(triangular(rel.arity())), neg(triangular(rel.arity()));
    for_each_tuple(rel.arity(), nodes, [&](const Tuple& tup) {
      (rel.contains(tup) ? pos : neg).insert(char_tuple(tup));
    });
    s.set_relation(star_name(name), std::move(pos));
    s.set_relation(negated_star_name(name), std::move(neg));
  }
  return s;
}

Structure sigma_from_base(const Structure& a, std::size_t m) {
  if (!a.constants.empty())
    throw Error(ErrorCode::InvalidArgument, "only purely relational structures can be encoded");
  return sigma_decided(a, m);
}

}  // namespace hornfix
