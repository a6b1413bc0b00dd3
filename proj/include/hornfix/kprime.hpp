#pragma once

#include <functional>
#include <string>
#include <vector>

#include "hornfix/random.hpp"
#include "hornfix/structure.hpp"
#include "hornfix/trees.hpp"

namespace hornfix {

struct ExtensionParams {
  std::size_t c = 1;
};

// Membership test for the inner class K over tau-structures.
using KOracle = std::function<bool(const Structure&)>;

// even | 3col | always | never. 3col reads R1 as an undirected edge relation.
KOracle demo_oracle(const std::string& name);
const std::vector<std::string>& demo_oracle_names();

// Same relations on the domain {0..h+h^c-1}.
Structure trivial_extension(const Structure& a, const ExtensionParams& params);

// h + h^c, saturating instead of overflowing.
std::size_t extended_size(std::size_t h, std::size_t c);

// T(G) renumbered in heap order (children sorted by id), every relation of G
// other than E restricted to it. nodes[v] is the node of G at heap position v.
struct PerfectSubtree {
  TreeStructure tree;
  std::vector<Element> nodes;
  std::size_t reachable_levels = 0;
  // all_p[l]: every reachable node on level l is in P.
  std::vector<bool> all_p;
};

// Throws NotABinaryTree unless E is acyclic and the nodes reachable from root
// form a binary tree.
PerfectSubtree largest_perfect_subtree(const Structure& g);

// C^-1 of the first h levels of T(G). P is kept when keep_p is set.
Structure prefix_base(const PerfectSubtree& t, std::size_t h, bool keep_p);

enum class KCondition { None, Condition1, Condition2 };
const char* to_string(KCondition c);

struct KprimeVerdict {
  bool member = false;
  KCondition condition = KCondition::None;
  std::size_t h = 0;
  std::size_t depth = 0;  // levels of T(G)
  std::string reason;
};

// Throws StructuralViolation when G breaks the standing assumptions (acyclic,
// binary tree from root, saturated on T(G)).
KprimeVerdict membership_kprime(const Structure& g, const KOracle& k,
                                const ExtensionParams& params);

std::string format_verdict(const KprimeVerdict& v);

// encode((a with P full)^+). a must not use the names E or P.
Structure condition1_instance(const Structure& a, const ExtensionParams& params);

// A random member of K' over {R1/2}. Shapes: a Condition-1 instance when K
// accepts some sampled base, a truncated one, or either with unreachable and
// dangling noise nodes.
Structure generate_member(Rng& rng, const KOracle& k, const ExtensionParams& params,
                          std::size_t max_h = 2);

struct ClosureReport {
  std::size_t samples = 0;
  std::size_t members = 0;
  std::vector<std::string> failures;

  bool passed() const { return failures.empty() && members == samples; }
};

// Samples induced substructures that keep root and checks each for membership.
ClosureReport closure_under_substructures_test(const Structure& g, const KOracle& k,
                                               const ExtensionParams& params,
                                               std::size_t samples, Rng& rng);

}  // namespace hornfix
