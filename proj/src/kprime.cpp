#include "hornfix/kprime.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <queue>
#include <sstream>

#include "hornfix/error.hpp"

namespace hornfix {

namespace {

constexpr std::size_t kHuge = std::numeric_limits<std::size_t>::max() / 2;

bool three_colorable(const Structure& a) {
  auto it = a.relations.find("R1");
  if (it == a.relations.end()) return true;
  std::vector<std::pair<Element, Element>> edges;
  for (const auto& t : it->second) {
    if (t.size() < 2) continue;
    if (t[0] == t[1]) return false;
    edges.emplace_back(t[0], t[1]);
  }
  std::vector<int> color(a.size, 0);
  auto solve = [&](auto&& self, std::size_t v) -> bool {
    if (v == a.size) return true;
    for (int c = 0; c < 3; ++c) {
      color[v] = c;
      bool ok = true;
      for (const auto& [x, y] : edges)
        if ((x == v && y < v && color[y] == c) || (y == v && x < v && color[x] == c)) ok = false;
      if (ok && self(self, v + 1)) return true;
    }
    return false;
  };
  return solve(solve, 0);
}

struct GraphShape {
  Element root = 0;
  std::vector<std::vector<Element>> children;  // sorted
  std::vector<std::size_t> level;              // kHuge when unreachable
};

// Steps (1) and (2): returns the failing step number and a message, or 0.
std::pair<int, std::string> inspect(const Structure& g, GraphShape& shape) {
  auto rc = g.constants.find("root");
  if (rc == g.constants.end()) return {2, "no constant root"};
  shape.root = rc->second;
  shape.children.assign(g.size, {});
  std::vector<std::size_t> indegree(g.size, 0);
  if (auto e = g.relations.find("E"); e != g.relations.end())
    for (const auto& t : e->second) {
      shape.children[t[0]].push_back(t[1]);
      ++indegree[t[1]];
    }
  for (auto& c : shape.children) std::sort(c.begin(), c.end());

  // (1) acyclic, by Kahn's algorithm.
  std::vector<std::size_t> in = indegree;
  std::queue<Element> ready;
  for (Element v = 0; v < g.size; ++v)
    if (in[v] == 0) ready.push(v);
  std::size_t seen = 0;
  while (!ready.empty()) {
    Element v = ready.front();
    ready.pop();
    ++seen;
    for (Element w : shape.children[v])
      if (--in[w] == 0) ready.push(w);
  }
  if (seen != g.size) return {1, "E has a cycle"};

  // (2) the nodes reachable from root form a binary tree.
  shape.level.assign(g.size, kHuge);
  shape.level[shape.root] = 0;
  std::queue<Element> bfs;
  bfs.push(shape.root);
  std::vector<std::size_t> reachable_parents(g.size, 0);
  while (!bfs.empty()) {
    Element v = bfs.front();
    bfs.pop();
    if (shape.children[v].size() > 2)
      return {2, "node " + std::to_string(v) + " has more than two children"};
    for (Element w : shape.children[v]) {
      if (++reachable_parents[w] > 1)
        return {2, "node " + std::to_string(w) + " has two parents"};
      shape.level[w] = shape.level[v] + 1;
      bfs.push(w);
    }
  }
  if (reachable_parents[shape.root] != 0) return {2, "root has a parent"};
  return {0, ""};
}

Relation restrict_to_heap(const Relation& r, const std::map<Element, Node>& heap_of) {
  Relation out(r.arity());
  for (const auto& t : r) {
    Tuple u;
    for (Element e : t) {
      auto it = heap_of.find(e);
      if (it == heap_of.end()) break;
      u.push_back(it->second);
    }
    if (u.size() == t.size()) out.insert(std::move(u));
  }
  return out;
}

PerfectSubtree build_subtree(const Structure& g, const GraphShape& shape) {
  PerfectSubtree out;
  std::size_t levels = 1;
  std::vector<Element> heap = {shape.root};
  std::vector<Element> frontier = {shape.root};
  while (true) {
    std::vector<Element> next;
    bool full = true;
    for (Element v : frontier) {
      if (shape.children[v].size() != 2) {
        full = false;
        break;
      }
      next.push_back(shape.children[v][0]);
      next.push_back(shape.children[v][1]);
    }
    if (!full) break;
    heap.insert(heap.end(), next.begin(), next.end());
    frontier = std::move(next);
    ++levels;
  }
  out.tree = make_tree(levels);
  out.nodes = heap;
  std::map<Element, Node> heap_of;
  for (std::size_t i = 0; i < heap.size(); ++i) heap_of.emplace(heap[i], static_cast<Node>(i));
  for (const auto& [name, rel] : g.relations) {
    if (name == "E") continue;
    out.tree.structure.set_relation(name, restrict_to_heap(rel, heap_of));
  }

  const Relation* p = nullptr;
  if (auto it = g.relations.find("P"); it != g.relations.end()) p = &it->second;
  for (Element v = 0; v < g.size; ++v) {
    if (shape.level[v] == kHuge) continue;
    const std::size_t l = shape.level[v];
    if (l >= out.all_p.size()) out.all_p.resize(l + 1, true);
    if (!p || !p->contains({v})) out.all_p[l] = false;
  }
  out.reachable_levels = out.all_p.size();
  return out;
}

}  // namespace

KOracle demo_oracle(const std::string& name) {
  if (name == "even") return [](const Structure& a) { return a.size % 2 == 0; };
  if (name == "3col") return three_colorable;
  if (name == "always") return [](const Structure&) { return true; };
  if (name == "never") return [](const Structure&) { return false; };
  throw Error(ErrorCode::InvalidArgument, "unknown oracle " + name);
}

const std::vector<std::string>& demo_oracle_names() {
  static const std::vector<std::string> names = {"even", "3col", "always", "never"};
  return names;
}

std::size_t extended_size(std::size_t h, std::size_t c) {
  std::size_t power = 1;
  for (std::size_t i = 0; i < c; ++i) {
    if (h != 0 && power > kHuge / h) return kHuge;
    power *= h;
  }
  return h + power;
}

Structure trivial_extension(const Structure& a, const ExtensionParams& params) {
  if (params.c < 1) throw Error(ErrorCode::InvalidArgument, "c must be at least 1");
  const std::size_t size = extended_size(a.size, params.c);
  if (size >= kHuge) throw Error(ErrorCode::InvalidArgument, "trivial extension too large");
  Structure out = a;
  out.size = size;
  return out;
}

PerfectSubtree largest_perfect_subtree(const Structure& g) {
  GraphShape shape;
  auto [step, message] = inspect(g, shape);
  if (step != 0) throw Error(ErrorCode::NotABinaryTree, message);
  return build_subtree(g, shape);
}

Structure prefix_base(const PerfectSubtree& t, std::size_t h, bool keep_p) {
  if (h == 0 || h > t.tree.tree.levels)
    throw Error(ErrorCode::InvalidArgument, "prefix height out of range");
  TreeStructure prefix = make_tree(h);
  const Node bound = static_cast<Node>(prefix.tree.node_count());
  for (const auto& [name, rel] : t.tree.structure.relations) {
    if (name == "E" || (name == "P" && !keep_p)) continue;
    Relation r(rel.arity());
    for (const auto& tup : rel)
      if (std::all_of(tup.begin(), tup.end(), [&](Node v) { return v < bound; })) r.insert(tup);
    prefix.structure.set_relation(name, std::move(r));
  }
  return decode(prefix);
}

const char* to_string(KCondition c) {
  switch (c) {
    case KCondition::None: return "none";
    case KCondition::Condition1: return "condition 1";
    case KCondition::Condition2: return "condition 2";
  }
  return "?";
}

KprimeVerdict membership_kprime(const Structure& g, const KOracle& k,
                                const ExtensionParams& params) {
  if (params.c < 1) throw Error(ErrorCode::InvalidArgument, "c must be at least 1");
  GraphShape shape;
  if (auto [step, message] = inspect(g, shape); step != 0)
    throw Error(ErrorCode::StructuralViolation, "step " + std::to_string(step) + ": " + message);
  const PerfectSubtree t = build_subtree(g, shape);

  for (const auto& [name, rel] : t.tree.structure.relations)
    if (name != "E" && !is_saturated(rel, t.tree.tree))
      throw Error(ErrorCode::StructuralViolation,
                  "step 4: " + name + " is not saturated on T(G)");

  KprimeVerdict v;
  v.depth = t.tree.tree.levels;
  while (v.h < t.reachable_levels && t.all_p[v.h]) ++v.h;
  const std::size_t target = extended_size(v.h, params.c);

  if (v.depth < target) {
    v.member = true;
    v.condition = KCondition::Condition2;
    return v;
  }
  if (v.depth > target) {
    v.reason = "T(G) has " + std::to_string(v.depth) + " levels, more than h + h^c = " +
               std::to_string(target);
    return v;
  }
  for (const auto& [name, rel] : t.tree.structure.relations) {
    if (name == "E") continue;
    for (const auto& tup : rel)
      for (Node n : tup)
        if (node_depth(n) >= v.h) {
          v.reason = name == "P" ? "P marks a node in the last h^c levels"
                                 : name + " holds on a tuple reaching the last h^c levels";
          return v;
        }
  }
  if (!k(prefix_base(t, v.h, false))) {
    v.reason = "K rejects the base of the first h levels";
    return v;
  }
  v.member = true;
  v.condition = KCondition::Condition1;
  return v;
}

std::string format_verdict(const KprimeVerdict& v) {
  std::ostringstream os;
  os << (v.member ? "member" : "non-member") << " (" << to_string(v.condition) << ") h=" << v.h
     << " depth=" << v.depth;
  if (!v.reason.empty()) os << ": " << v.reason;
  return os.str();
}

Structure condition1_instance(const Structure& a, const ExtensionParams& params) {
  if (a.relations.count("P") || a.relations.count("E"))
    throw Error(ErrorCode::InvalidArgument, "base structure may not use the names E or P");
  Structure marked = a;
  marked.set_relation("P", Relation::full(1, a.size));
  return encode(trivial_extension(marked, params)).structure;
}

namespace {

Structure random_base(Rng& rng, std::size_t max_h) {
  Structure a;
  a.size = rng.between(1, std::max<std::size_t>(1, max_h));
  Relation r1(2);
  for_each_tuple(2, a.size, [&](const Tuple& t) {
    if (rng.chance(1, 3)) r1.insert(t);
  });
  a.set_relation("R1", std::move(r1));
  return a;
}

// Drops the deepest level entirely or in part.
Structure truncate(Rng& rng, const Structure& g) {
  const PerfectSubtree t = largest_perfect_subtree(g);
  const std::size_t levels = t.tree.tree.levels;
  if (levels <= 1) return g;
  const std::vector<Node> deepest = level_nodes(levels - 1);
  std::set<Element> keep;
  for (Element v = 0; v < g.size; ++v) keep.insert(v);
  const bool all = rng.chance(1, 2);
  bool removed = false;
  for (Node n : deepest)
    if (all || rng.chance(1, 2)) {
      keep.erase(t.nodes[n]);
      removed = true;
    }
  if (!removed) keep.erase(t.nodes[deepest.front()]);
  return induced_substructure(g, keep);
}

// Unreachable nodes plus one dangling child under a deepest leaf.
Structure add_noise(Rng& rng, const Structure& g) {
  const PerfectSubtree t = largest_perfect_subtree(g);
  Structure out = g;
  const std::size_t extra = rng.between(1, 3);
  const Element first = static_cast<Element>(g.size);
  out.size = g.size + extra + 1;
  Relation e = out.relation("E");
  Relation p = out.relations.count("P") ? out.relation("P") : Relation(1);
  Relation r1 = out.relations.count("R1") ? out.relation("R1") : Relation(2);
  for (Element v = first; v < first + extra; ++v) {
    for (Element w = v + 1; w < first + extra; ++w)
      if (rng.chance(1, 2)) e.insert({v, w});
    if (rng.chance(1, 2)) p.insert({v});
    if (rng.chance(1, 2)) r1.insert({v, static_cast<Element>(rng.below(out.size))});
  }
  // The dangling node hangs under a childless reachable node at or below the
  // leaf level of T(G), so T(G) itself is unchanged.
  GraphShape shape;
  inspect(g, shape);
  std::vector<Element> hooks;
  for (Element v = 0; v < g.size; ++v)
    if (shape.level[v] != kHuge && shape.level[v] + 1 >= t.tree.tree.levels &&
        shape.children[v].empty())
      hooks.push_back(v);
  const Element dangling = first + static_cast<Element>(extra);
  e.insert({rng.pick(hooks), dangling});
  if (rng.chance(1, 2)) r1.insert({dangling, dangling});
  out.set_relation("E", std::move(e));
  out.set_relation("P", std::move(p));
  out.set_relation("R1", std::move(r1));
  return out;
}

}  // namespace

Structure generate_member(Rng& rng, const KOracle& k, const ExtensionParams& params,
                          std::size_t max_h) {
  const std::uint64_t shape = rng.below(3);
  Structure a = random_base(rng, max_h);
  bool accepted = k(a);
  for (int attempt = 0; attempt < 20 && !accepted; ++attempt) {
    a = random_base(rng, max_h);
    accepted = k(a);
  }
  Structure g = condition1_instance(a, params);
  if (!accepted || shape == 1) g = truncate(rng, g);
  if (shape == 2) g = add_noise(rng, g);
  return g;
}

ClosureReport closure_under_substructures_test(const Structure& g, const KOracle& k,
                                               const ExtensionParams& params,
                                               std::size_t samples, Rng& rng) {
  ClosureReport report;
  const Element root = g.constant("root");
  for (std::size_t s = 0; s < samples; ++s) {
    const std::uint64_t keep_tenths = rng.between(1, 9);
    std::set<Element> subset = {root};
    for (Element v = 0; v < g.size; ++v)
      if (v != root && rng.chance(keep_tenths, 10)) subset.insert(v);
    ++report.samples;
    try {
      const KprimeVerdict v = membership_kprime(induced_substructure(g, subset), k, params);
      if (v.member)
        ++report.members;
      else
        report.failures.push_back("sample " + std::to_string(s) + ": " + format_verdict(v));
    } catch (const Error& e) {
      report.failures.push_back("sample " + std::to_string(s) + ": " + e.what());
    }
  }
  return report;
}

}  // namespace hornfix
