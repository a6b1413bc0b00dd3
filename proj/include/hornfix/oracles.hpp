#pragma once

#include <set>
#include <vector>

#include "hornfix/structure.hpp"
#include "hornfix/trees.hpp"

// Reference implementations written independently of the engine, used as
// ground truth by the self-test and the unit tests.
namespace hornfix::oracle {

// Alternating reachability from s to t on E with universal nodes Puni,
// computed as the attractor of t.
bool alternating_path(const Structure& g);

// Nodes reachable from `from` in one or more E steps.
std::set<Element> reachable(const Relation& edges, std::size_t n, Element from);

// Depth and lca depth from the path bits of heap ids.
std::size_t depth_of(Node v);
std::size_t meet_depth(Node a, Node b);
CharTuple characteristic(const std::vector<Node>& nodes);

// Characteristic tuples of all node tuples of the given arity in the tree with
// `levels` levels.
std::set<CharTuple> characteristic_tuples(std::size_t levels, std::size_t arity);

// Edge-preserving bijections fixing node 0, found by backtracking search.
std::vector<Automorphism> automorphisms(std::size_t levels);
bool invariant(const Relation& r, const std::vector<Automorphism>& autos);

// R_neq and R_nege membership by scanning node pairs of a tree deep enough.
bool r_neq(std::uint32_t e1, std::uint32_t e2, std::uint32_t e3);
bool r_nege(std::uint32_t e1, std::uint32_t e2, std::uint32_t e3);

}  // namespace hornfix::oracle
