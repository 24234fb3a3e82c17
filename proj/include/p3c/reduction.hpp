#pragma once

#include <algorithm>
#include <numeric>
#include <vector>

#include "p3c/core.hpp"
#include "p3c/graph.hpp"
#include "p3c/oracle.hpp"
#include "p3c/threshold.hpp"

namespace p3c {

// Split-graph construction used to tie convex-set counting to independent-set
// counting. For a graph g with at least one edge, h consists of a clique
// holding one vertex per edge of g plus one special vertex, and an
// independent part holding one copy of each vertex of g. The special vertex
// is universal in h; the vertex for edge (x, y) is additionally adjacent to
// the copies of x and y. Layout: edge vertices occupy [0, |E|) in
// lexicographic edge order, the special vertex is |E|, and the copy of
// g-vertex v is |E|+1+v. An edgeless input has nothing to encode, so h is
// just g itself (marked identity_reduction).
struct ReductionOutput {
  Graph h;
  bool identity_reduction = false;
  std::vector<int> edge_vertices;  // h-index per edge, lex order
  int special_vertex = -1;
  std::vector<int> vertex_copies;  // h-index per g-vertex
};

inline ReductionOutput build_split_reduction(const Graph& g) {
  ReductionOutput out;
  int n = g.vertex_count();
  auto ge = g.edges();
  int m = int(ge.size());
  if (m == 0) {
    out.h = g;
    out.identity_reduction = true;
    out.vertex_copies.resize(n);
    std::iota(out.vertex_copies.begin(), out.vertex_copies.end(), 0);
    return out;
  }
  int special = m;
  int nh = m + 1 + n;
  std::vector<std::pair<int, int>> he;
  for (int i = 0; i <= m; ++i)
    for (int j = i + 1; j <= m; ++j) he.emplace_back(i, j);  // clique
  for (int v = 0; v < n; ++v) he.emplace_back(special, m + 1 + v);
  for (int i = 0; i < m; ++i) {
    he.emplace_back(i, m + 1 + ge[i].first);
    he.emplace_back(i, m + 1 + ge[i].second);
  }
  out.h = Graph(nh, he);
  out.edge_vertices.resize(m);
  std::iota(out.edge_vertices.begin(), out.edge_vertices.end(), 0);
  out.special_vertex = special;
  out.vertex_copies.resize(n);
  std::iota(out.vertex_copies.begin(), out.vertex_copies.end(), m + 1);
  return out;
}

// Both counts are computed by the exhaustive oracle and compared against the
// target relation noc(h) = noi(g) + 2^z + n + 1 + m*n + m, where z counts the
// isolated vertices of g (for edgeless g the relation degenerates to
// noc(h) = noi(g)). The report keeps both measured values alongside the
// predicted one so a mismatch is directly inspectable.
struct ReductionIdentityReport {
  Count noc_h;
  Count noi_g;
  Count predicted_noc_h;
  bool identity_holds = false;
};

inline ReductionIdentityReport verify_reduction_identity(const Graph& g,
                                                         int cap = kOracleCap) {
  auto red = build_split_reduction(g);
  ReductionIdentityReport rep;
  rep.noc_h = noc_bruteforce(red.h, cap);
  rep.noi_g = noi_bruteforce(g, cap);
  if (red.identity_reduction) {
    rep.predicted_noc_h = rep.noi_g;
  } else {
    int n = g.vertex_count();
    int m = g.edge_count();
    int z = 0;
    for (int v = 0; v < n; ++v)
      if (g.degree(v) == 0) ++z;
    rep.predicted_noc_h =
        rep.noi_g + pow2(unsigned(z)) + n + 1 + Count(m) * n + m;
  }
  rep.identity_holds = rep.noc_h == rep.predicted_noc_h;
  return rep;
}

// Inverts the target relation: subtracts the g-dependent offset from a given
// noc(h) value. A result below zero means the inputs cannot belong together.
inline Count recover_noi_from_noc(const Count& noc_h, const Graph& g) {
  if (g.edge_count() == 0) return noc_h;
  int n = g.vertex_count();
  int m = g.edge_count();
  int z = 0;
  for (int v = 0; v < n; ++v)
    if (g.degree(v) == 0) ++z;
  Count offset = pow2(unsigned(z)) + n + 1 + Count(m) * n + m;
  if (noc_h < offset)
    throw Error("recover_noi_from_noc: count below the fixed offset " +
                to_decimal(offset) + "; not a value of this reduction");
  return noc_h - offset;
}

namespace detail {

inline bool exists_independent_subset(const Graph& g, const Bitset& allowed,
                                      int from, int need) {
  if (need == 0) return true;
  for (int v = allowed.find_next(from); v >= 0; v = allowed.find_next(v + 1)) {
    Bitset next = allowed.minus(g.neighbor_mask(v));
    if (exists_independent_subset(g, next, v + 1, need - 1)) return true;
  }
  return false;
}

template <typename Fn>
inline bool for_each_independent_subset(const Graph& g, const Bitset& allowed,
                                        int from, int need, Bitset& chosen,
                                        const Fn& fn) {
  if (need == 0) return fn(chosen);
  for (int v = allowed.find_next(from); v >= 0; v = allowed.find_next(v + 1)) {
    Bitset next = allowed.minus(g.neighbor_mask(v));
    chosen.set(v);
    if (for_each_independent_subset(g, next, v + 1, need - 1, chosen, fn))
      return true;
    chosen.reset(v);
  }
  return false;
}

}  // namespace detail

// True when g contains two vertex-disjoint induced stars K_{1,4}. Exhaustive
// over center pairs, with higher-degree centers tried first; leaf sets are
// grown as independent subsets of the centers' neighborhoods so every tested
// star is induced. Intended for small graphs (practical up to n around 20).
inline bool has_two_disjoint_induced_k14(const Graph& g) {
  int n = g.vertex_count();
  if (n < 10) return false;
  std::vector<int> centers;
  for (int v = 0; v < n; ++v)
    if (g.degree(v) >= 4) centers.push_back(v);
  std::sort(centers.begin(), centers.end(), [&](int a, int b) {
    if (g.degree(a) != g.degree(b)) return g.degree(a) > g.degree(b);
    return a < b;
  });
  for (size_t i = 0; i < centers.size(); ++i)
    for (size_t j = i + 1; j < centers.size(); ++j) {
      int c1 = centers[i], c2 = centers[j];
      Bitset cand1 = g.neighbor_mask(c1);
      if (cand1.test(c2)) cand1.reset(c2);
      Bitset chosen(n);
      bool found = detail::for_each_independent_subset(
          g, cand1, 0, 4, chosen, [&](const Bitset& leaves1) {
            Bitset cand2 = g.neighbor_mask(c2).minus(leaves1);
            if (cand2.test(c1)) cand2.reset(c1);
            return detail::exists_independent_subset(g, cand2, 0, 4);
          });
      if (found) return true;
    }
  return false;
}

}  // namespace p3c
