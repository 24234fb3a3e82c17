#pragma once

#include <algorithm>
#include <array>
#include <numeric>
#include <optional>
#include <set>
#include <utility>
#include <vector>

#include "p3c/core.hpp"
#include "p3c/graph.hpp"
#include "p3c/tree.hpp"

namespace p3c {

// ---------------------------------------------------------------------------
// Split partition. For a split graph the m highest-degree vertices form a
// maximum clique, where m is the largest i with d_i >= i-1 over the degree
// sequence in descending order. The candidate is verified directly, so for
// non-split inputs this returns nullopt.

inline std::optional<std::pair<Bitset, Bitset>> split_partition(const Graph& g) {
  int n = g.vertex_count();
  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    if (g.degree(a) != g.degree(b)) return g.degree(a) > g.degree(b);
    return a < b;
  });
  int m = 0;
  for (int i = 1; i <= n; ++i)
    if (g.degree(order[i - 1]) >= i - 1) m = i;
  Bitset clique(n), indep(n);
  for (int i = 0; i < n; ++i) (i < m ? clique : indep).set(order[i]);
  for (int i = 0; i < m; ++i)
    for (int j = i + 1; j < m; ++j)
      if (!g.adjacent(order[i], order[j])) return std::nullopt;
  for (int i = m; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (g.adjacent(order[i], order[j])) return std::nullopt;
  return std::make_pair(clique, indep);
}

inline bool is_split(const Graph& g) { return split_partition(g).has_value(); }

// ---------------------------------------------------------------------------
// Threshold recognition.

struct ForbiddenWitness {
  enum class Shape { P4, C4, TwoK2 };
  Shape shape;
  std::array<int, 4> vertices;
};

struct ThresholdProfile {
  std::vector<ThresholdTag> creation_sequence;  // tag of the i-th added vertex
  std::vector<int> creation_order;              // original id of that vertex
  Bitset clique_part;                           // |clique_part| = omega(G)
  Bitset independent_part;
  Bitset s0;              // degree-0 vertices of the independent part
  Bitset s1;              // degree-1 vertices of the independent part
  Count universal_correction;  // extra sets through the unique universal vertex
  int min_deg;
};

struct ThresholdCheck {
  bool is_threshold = false;
  std::optional<ThresholdProfile> profile;
  std::optional<ForbiddenWitness> witness;  // populated when n <= 12
};

namespace detail {

// Exhaustive scan of 4-subsets for an induced P4, C4 or 2K2, the three
// obstructions whose absence characterizes threshold graphs.
inline std::optional<ForbiddenWitness> find_threshold_obstruction(
    const Graph& g) {
  int n = g.vertex_count();
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b)
      for (int c = b + 1; c < n; ++c)
        for (int d = c + 1; d < n; ++d) {
          std::array<int, 4> vs{a, b, c, d};
          std::array<int, 4> deg{};
          int edges = 0;
          for (int i = 0; i < 4; ++i)
            for (int j = i + 1; j < 4; ++j)
              if (g.adjacent(vs[i], vs[j])) {
                ++edges;
                ++deg[i];
                ++deg[j];
              }
          if (edges == 2 && deg[0] == 1 && deg[1] == 1 && deg[2] == 1 &&
              deg[3] == 1)
            return ForbiddenWitness{ForbiddenWitness::Shape::TwoK2, vs};
          if (edges == 4 && deg[0] == 2 && deg[1] == 2 && deg[2] == 2 &&
              deg[3] == 2)
            return ForbiddenWitness{ForbiddenWitness::Shape::C4, vs};
          if (edges == 3) {
            std::array<int, 4> s = deg;
            std::sort(s.begin(), s.end());
            if (s == std::array<int, 4>{1, 1, 2, 2})
              return ForbiddenWitness{ForbiddenWitness::Shape::P4, vs};
          }
        }
  return std::nullopt;
}

}  // namespace detail

// Peels a currently-universal or currently-isolated vertex until the graph is
// gone; getting stuck means the graph is not threshold. While peeling, every
// alive vertex is adjacent to every universal vertex removed so far and to no
// removed isolated vertex, so current degrees are original degrees minus the
// number of universal removals. That makes degree buckets exact without any
// per-edge updates.
inline ThresholdCheck recognize_threshold(const Graph& g) {
  int n = g.vertex_count();
  ThresholdCheck out;
  if (n == 0) return out;

  std::vector<std::set<int>> bucket(n);
  for (int v = 0; v < n; ++v) bucket[g.degree(v)].insert(v);
  std::vector<int> peel_order;
  std::vector<ThresholdTag> peel_tag;
  int alive = n, universals = 0;
  while (alive > 0) {
    int iso = -1, uni = -1;
    if (universals < n && !bucket[universals].empty())
      iso = *bucket[universals].begin();
    int udeg = alive - 1 + universals;
    if (udeg >= 0 && udeg < n && !bucket[udeg].empty())
      uni = *bucket[udeg].begin();
    int pick;
    ThresholdTag tag;
    if (iso >= 0 && (uni < 0 || iso <= uni)) {
      pick = iso;
      tag = ThresholdTag::Isolated;
    } else if (uni >= 0) {
      pick = uni;
      tag = ThresholdTag::Universal;
    } else {
      if (n <= 12) out.witness = detail::find_threshold_obstruction(g);
      return out;
    }
    bucket[g.degree(pick)].erase(pick);
    peel_order.push_back(pick);
    peel_tag.push_back(tag);
    --alive;
    if (tag == ThresholdTag::Universal) ++universals;
  }

  ThresholdProfile p;
  p.creation_order.assign(peel_order.rbegin(), peel_order.rend());
  p.creation_sequence.assign(peel_tag.rbegin(), peel_tag.rend());
  auto parts = split_partition(g);
  if (!parts)
    throw Error("recognize_threshold: internal split partition failure");
  p.clique_part = parts->first;
  p.independent_part = parts->second;
  p.s0 = Bitset(n);
  p.s1 = Bitset(n);
  for (int v : p.independent_part) {
    if (g.degree(v) == 0) p.s0.set(v);
    if (g.degree(v) == 1) p.s1.set(v);
  }
  p.min_deg = min_degree(g);
  p.universal_correction =
      p.min_deg == 1 ? pow2(unsigned(p.s1.count())) - 1 : Count(0);
  out.is_threshold = true;
  out.profile = std::move(p);
  return out;
}

// ---------------------------------------------------------------------------
// Exact count for threshold graphs.
//
// Isolated vertices double the count each (they can join or skip any convex
// set freely). On the rest, with split partition (K, S), minimum degree >= 1
// and a non-star graph, the convex sets are exactly: the sets meeting K
// nowhere (at most one S-vertex: |S|+1), the sets meeting K in one vertex
// (|K| of them, plus 2^|S1|-1 extras through the unique universal vertex when
// the minimum degree is 1), and the sets containing all of K (any subset of
// the degree-1 part on top: 2^|S1|).

inline Count noc_threshold(const Graph& g) {
  auto rec = recognize_threshold(g);
  if (!rec.is_threshold) throw Error("noc_threshold: not a threshold graph");

  int n = g.vertex_count();
  Bitset isolated(n);
  for (int v = 0; v < n; ++v)
    if (g.degree(v) == 0) isolated.set(v);
  Count mult = pow2(unsigned(isolated.count()));
  if (isolated.count() == n) return mult;

  auto sub = induced_subgraph(g, isolated.complement());
  const Graph& r = sub.graph;
  int k = r.vertex_count();

  if (r.edge_count() == k - 1 && max_degree(r) == k - 1)
    return mult * noc_star_closed(k);

  auto parts = split_partition(r);
  if (!parts) throw Error("noc_threshold: internal split partition failure");
  const auto& [clique, indep] = *parts;
  int s1 = 0;
  for (int v : indep)
    if (r.degree(v) == 1) ++s1;
  Count through_one = Count(clique.count());
  if (min_degree(r) == 1) through_one += pow2(unsigned(s1)) - 1;
  return mult * (Count(indep.count() + 1) + through_one + pow2(unsigned(s1)));
}

}  // namespace p3c
