#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "hornfix/structure.hpp"

namespace hornfix {

// Nodes of a perfect binary tree in heap order: root 0, children 2i+1, 2i+2.
using Node = Element;
using CharTuple = std::vector<std::uint32_t>;

// A perfect binary tree with `levels` levels (levels 0..levels-1). A domain of
// size h is encoded on the tree with h levels and 2^h - 1 nodes.
struct PerfectTree {
  std::size_t levels = 1;

  std::size_t depth() const { return levels - 1; }
  std::size_t node_count() const { return (std::size_t{1} << levels) - 1; }
  bool contains(Node v) const { return v < node_count(); }
};

std::size_t node_depth(Node v);
Node parent(Node v);
Node left_child(Node v);
Node right_child(Node v);
Node lca(Node a, Node b);
// Nodes at the given depth, left to right.
std::vector<Node> level_nodes(std::size_t depth);

// r(r+1)/2.
std::size_t triangular(std::size_t r);
// Inverse of triangular; throws MalformedLength if `length` is not triangular.
std::size_t arity_of_char_length(std::size_t length);
// Position of d(a_i ^ a_j) in the row-major layout (0-based, i <= j).
std::size_t pair_index(std::size_t r, std::size_t i, std::size_t j);

CharTuple char_tuple(const std::vector<Node>& nodes);

// A permutation of node ids: result[v] is the image of v.
using Automorphism = std::vector<Node>;

inline constexpr std::size_t kDefaultAutomorphismDepth = 3;

// All child-swap combinations over internal nodes. Throws DepthTooLarge.
std::vector<Automorphism> enumerate_automorphisms(const PerfectTree& tree,
                                                  std::size_t max_depth = kDefaultAutomorphismDepth);

Relation apply(const Automorphism& f, const Relation& r);

// f[R] = R for every automorphism. Throws DepthTooLarge.
bool is_invariant(const Relation& r, const PerfectTree& tree,
                  std::size_t max_depth = kDefaultAutomorphismDepth);
// Membership is constant on each characteristic-tuple class. No depth cap.
bool is_invariant_by_char(const Relation& r, const PerfectTree& tree);
bool is_saturated(const Relation& r, const PerfectTree& tree);

// Image of r under char_tuple. Throws NotInvariant.
Relation char_relation_of(const Relation& r, const PerfectTree& tree);

// ---------------------------------------------------------------------------
// Encodings

struct TreeStructure {
  PerfectTree tree;
  Structure structure;  // constant `root`, relation E (parent -> child), the rest
};

// The relational skeleton: domain = nodes, E, root.
TreeStructure make_tree(std::size_t levels);

// C(A,T): tree with A.size levels; R^T(a..) iff R^A(d(a)..). Rejects
// structures with constants or a relation named E.
TreeStructure encode(const Structure& a);

// C^-1(T). Relations other than E must be saturated (NotSaturated).
Structure decode(const TreeStructure& t);

// Recognizes a Structure as a heap-addressed perfect tree (E and root as built
// by make_tree). Throws NotABinaryTree.
TreeStructure as_tree_structure(const Structure& s);

// ---------------------------------------------------------------------------
// Characteristic relations

bool decider_r_neq(std::uint32_t e1, std::uint32_t e2, std::uint32_t e3);
bool decider_r_nege(std::uint32_t e1, std::uint32_t e2, std::uint32_t e3);

// Throw MalformedLength on non-triangular input.
bool pre_check(const CharTuple& e);
bool check(const CharTuple& e);

// Names of the symbols of the characteristic structure.
inline const std::string kZero = "0";
inline const std::string kSucc = "SUCC";
inline const std::string kRNeq = "R_neq";
inline const std::string kRNegE = "R_nege";
inline const std::string kFul = "FUL*";
std::string star_name(const std::string& relation);          // R*
std::string negated_star_name(const std::string& relation);  // R~*

enum class SigmaMethod { Enumerate, Decide };

// S_T for m: domain {0..levels-1}, constant 0, SUCC, R_neq, R_nege, FUL*, and
// R*, R~* for every relation of t other than E.
Structure sigma_structure(const TreeStructure& t, std::size_t m,
                          SigmaMethod method = SigmaMethod::Enumerate);

// The same structure computed from A alone with the deciders and CHECK.
Structure sigma_from_base(const Structure& a, std::size_t m);

}  // namespace hornfix
