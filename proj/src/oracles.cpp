#include "hornfix/oracles.hpp"

#include <algorithm>
#include <functional>

namespace hornfix::oracle {

bool alternating_path(const Structure& g) {
  const std::size_t n = g.size;
  const Relation& e = g.relation("E");
  const Relation& uni = g.relation("Puni");
  std::vector<std::vector<Element>> succ(n);
  for (const auto& t : e) succ[t[0]].push_back(t[1]);
  std::vector<bool> win(n, false);
  win[g.constant("t")] = true;
  for (bool changed = true; changed;) {
    changed = false;
    for (Element x = 0; x < n; ++x) {
      if (win[x]) continue;
      const auto& out = succ[x];
      const bool ok = uni.contains({x})
                          ? std::all_of(out.begin(), out.end(), [&](Element z) { return win[z]; })
                          : std::any_of(out.begin(), out.end(), [&](Element z) { return win[z]; });
      if (ok) win[x] = changed = true;
    }
  }
  return win[g.constant("s")];
}

std::set<Element> reachable(const Relation& edges, std::size_t n, Element from) {
  std::set<Element> seen;
  std::vector<Element> stack = {from};
  while (!stack.empty()) {
    Element v = stack.back();
    stack.pop_back();
    for (Element w = 0; w < n; ++w)
      if (edges.contains({v, w}) && seen.insert(w).second) stack.push_back(w);
  }
  return seen;
}

namespace {

// Left = 0, right = 1, from the root down.
std::vector<int> path_bits(Node v) {
  std::vector<int> bits;
  for (std::uint64_t x = std::uint64_t{v} + 1; x > 1; x /= 2) bits.push_back(static_cast<int>(x % 2));
  std::reverse(bits.begin(), bits.end());
  return bits;
}

}  // namespace

std::size_t depth_of(Node v) { return path_bits(v).size(); }

std::size_t meet_depth(Node a, Node b) {
  const auto pa = path_bits(a);
  const auto pb = path_bits(b);
  std::size_t k = 0;
  while (k < pa.size() && k < pb.size() && pa[k] == pb[k]) ++k;
  return k;
}

CharTuple characteristic(const std::vector<Node>& nodes) {
  CharTuple out;
  for (std::size_t i = 0; i < nodes.size(); ++i)
    for (std::size_t j = i; j < nodes.size(); ++j)
      out.push_back(static_cast<std::uint32_t>(i == j ? depth_of(nodes[i])
                                                      : meet_depth(nodes[i], nodes[j])));
  return out;
}

std::set<CharTuple> characteristic_tuples(std::size_t levels, std::size_t arity) {
  std::set<CharTuple> out;
  const std::size_t nodes = (std::size_t{1} << levels) - 1;
  for_each_tuple(arity, nodes, [&](const Tuple& t) {
    out.insert(characteristic(std::vector<Node>(t.begin(), t.end())));
  });
  return out;
}

std::vector<Automorphism> automorphisms(std::size_t levels) {
  const std::size_t n = (std::size_t{1} << levels) - 1;
  std::vector<std::vector<bool>> adj(n, std::vector<bool>(n, false));
  for (Node v = 0; v < n; ++v)
    for (Node w : {2 * v + 1, 2 * v + 2})
      if (w < n) adj[v][w] = true;

  std::vector<Automorphism> out;
  Automorphism f(n, 0);
  std::vector<bool> used(n, false);
  std::function<void(Node)> extend = [&](Node v) {
    if (v == n) {
      out.push_back(f);
      return;
    }
    for (Node img = 0; img < n; ++img) {
      if (used[img] || (v == 0) != (img == 0)) continue;
      bool ok = true;
      for (Node u = 0; u < v && ok; ++u)
        ok = adj[u][v] == adj[f[u]][img] && adj[v][u] == adj[img][f[u]];
      if (!ok) continue;
      f[v] = img;
      used[img] = true;
      extend(v + 1);
      used[img] = false;
    }
  };
  extend(0);
  return out;
}

bool invariant(const Relation& r, const std::vector<Automorphism>& autos) {
  for (const auto& f : autos)
    for (const auto& t : r) {
      Tuple image;
      for (Element e : t) image.push_back(f[e]);
      if (!r.contains(image)) return false;
    }
  return true;
}

namespace {

bool scan_pairs(std::uint32_t e1, std::uint32_t e2, std::uint32_t e3,
                const std::function<bool(Node, Node)>& keep) {
  const std::size_t levels = std::max({e1, e2, e3}) + 1;
  const Node n = static_cast<Node>((std::size_t{1} << levels) - 1);
  for (Node a = 0; a < n; ++a)
    for (Node b = 0; b < n; ++b)
      if (keep(a, b) && characteristic({a, b}) == CharTuple{e1, e2, e3}) return true;
  return false;
}

}  // namespace

bool r_neq(std::uint32_t e1, std::uint32_t e2, std::uint32_t e3) {
  return scan_pairs(e1, e2, e3, [](Node a, Node b) { return a != b; });
}

bool r_nege(std::uint32_t e1, std::uint32_t e2, std::uint32_t e3) {
  return scan_pairs(e1, e2, e3, [](Node a, Node b) { return b != 2 * a + 1 && b != 2 * a + 2; });
}

}  // namespace hornfix::oracle
