#pragma once

#include <vector>

#include "p3c/core.hpp"
#include "p3c/graph.hpp"

namespace p3c {

// Linear-time counting of P3-convex sets on trees. Each subtree root carries
// three counts, split by the root's own state relative to the set and to its
// parent:
//   black             - root belongs to the set
//   white_free        - root outside the set, parent (if any) also outside
//   white_black_parent- root outside the set, parent inside
// The distinction matters because a white vertex tolerates at most one black
// neighbor, and a black parent uses up that allowance.
struct TriCounts {
  Count black;
  Count white_free;
  Count white_black_parent;

  Count total() const { return black + white_free; }
};

struct RootedTree {
  int root = 0;
  std::vector<int> parent;              // -1 at the root
  std::vector<std::vector<int>> children;
  std::vector<int> bfs_order;           // root first
};

inline RootedTree root_tree(const Graph& g, int root = 0) {
  if (!is_tree(g)) throw Error("root_tree: graph is not a tree");
  if (root < 0 || root >= g.vertex_count())
    throw Error("root_tree: root out of range");
  RootedTree t;
  t.root = root;
  int n = g.vertex_count();
  t.parent.assign(n, -1);
  t.children.assign(n, {});
  t.bfs_order.reserve(n);
  std::vector<bool> seen(n, false);
  seen[root] = true;
  t.bfs_order.push_back(root);
  for (size_t i = 0; i < t.bfs_order.size(); ++i) {
    int v = t.bfs_order[i];
    for (int u : g.neighbors(v)) {
      if (seen[u]) continue;
      seen[u] = true;
      t.parent[u] = v;
      t.children[v].push_back(u);
      t.bfs_order.push_back(u);
    }
  }
  return t;
}

// Bottom-up pass in reverse BFS order. A black root lets every child be black
// or white-under-black; a white root with a black parent forces all children
// white; a free white root admits at most one black child. The one-black sum
// uses prefix/suffix products, keeping everything in plain multiplications.
inline TriCounts noc_rooted(const Graph& g, const RootedTree& t) {
  int n = g.vertex_count();
  std::vector<TriCounts> c(n);
  for (int i = n - 1; i >= 0; --i) {
    int v = t.bfs_order[i];
    const auto& ch = t.children[v];
    if (ch.empty()) {
      c[v] = {1, 1, 1};
      continue;
    }
    Count black = 1, all_white = 1;
    for (int u : ch) {
      black *= c[u].black + c[u].white_black_parent;
      all_white *= c[u].white_free;
    }
    size_t k = ch.size();
    std::vector<Count> pre(k + 1), suf(k + 1);
    pre[0] = 1;
    for (size_t j = 0; j < k; ++j) pre[j + 1] = pre[j] * c[ch[j]].white_free;
    suf[k] = 1;
    for (size_t j = k; j-- > 0;) suf[j] = suf[j + 1] * c[ch[j]].white_free;
    Count one_black = 0;
    for (size_t j = 0; j < k; ++j)
      one_black += pre[j] * c[ch[j]].black * suf[j + 1];
    c[v].black = black;
    c[v].white_free = all_white + one_black;
    c[v].white_black_parent = all_white;
  }
  return c[t.root];
}

inline Count noc_tree(const Graph& g, int root = 0) {
  RootedTree t = root_tree(g, root);
  return noc_rooted(g, t).total();
}

// Star on n vertices: the 2^(n-1) sets containing the center, plus the n-1
// single leaves and the empty set.
inline Count noc_star_closed(int n) {
  if (n < 1) throw Error("noc_star_closed: n must be >= 1");
  return pow2(unsigned(n - 1)) + n;
}

// Path counts from the order-3 linear recurrence z_n = 2 z_{n-1} - z_{n-2}
// + z_{n-3}, seeded 2, 4, 7. Independent of the tree DP, which makes it a
// useful cross-check for paths of any length.
inline Count noc_path_recurrence(int n) {
  if (n < 1) throw Error("noc_path_recurrence: n must be >= 1");
  Count z1 = 2, z2 = 4, z3 = 7;
  if (n == 1) return z1;
  if (n == 2) return z2;
  if (n == 3) return z3;
  for (int k = 4; k <= n; ++k) {
    Count z4 = 2 * z3 - z2 + z1;
    z1 = z2;
    z2 = z3;
    z3 = z4;
  }
  return z3;
}

}  // namespace p3c
