#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <utility>
#include <vector>

#include "p3c/core.hpp"
#include "p3c/graph.hpp"
#include "p3c/oracle.hpp"
#include "p3c/threshold.hpp"
#include "p3c/tree.hpp"

namespace p3c {

// ---------------------------------------------------------------------------
// Partial colorings and forcing rules.
//
// A convex set can be described by coloring its members black and everyone
// else white. Two local rules push a partial coloring toward the only
// completions that can still be convex:
//   R1: a white vertex that already sees a black neighbor cannot afford a
//       second one, so all its uncolored neighbors must be white.
//   R2: an uncolored vertex seeing two black neighbors is forced black.
// A coloring is invalid when some white vertex ends up with two black
// neighbors, or a vertex would need both colors.

enum class Color : uint8_t { Uncolored, White, Black };

using PartialColoring = std::vector<Color>;

struct PropagationResult {
  PartialColoring coloring;
  Bitset forced;  // vertices colored by the rules rather than the input
  bool valid = true;
};

inline PropagationResult propagate(const Graph& g, const PartialColoring& pi) {
  const int n = g.vertex_count();
  if (int(pi.size()) != n) throw Error("propagate: coloring size mismatch");
  PropagationResult res{pi, Bitset(n), true};
  auto& col = res.coloring;
  std::vector<int> bcnt(n, 0);
  for (int v = 0; v < n; ++v)
    if (col[v] == Color::Black)
      for (int u : g.neighbors(v)) ++bcnt[u];

  // Consistency of the given colors comes first: a white vertex that already
  // sees two blacks dooms every completion.
  for (int v = 0; v < n; ++v)
    if (col[v] == Color::White && bcnt[v] >= 2) {
      res.valid = false;
      return res;
    }

  std::vector<int> work;
  auto blacken = [&](int v) {
    if (col[v] == Color::Black) return;
    if (col[v] == Color::White) {
      res.valid = false;
      return;
    }
    col[v] = Color::Black;
    res.forced.set(v);
    work.push_back(v);
  };
  auto whiten = [&](int v) {
    if (col[v] == Color::White) return;
    if (col[v] == Color::Black) {
      res.valid = false;
      return;
    }
    col[v] = Color::White;
    res.forced.set(v);
    work.push_back(v);
  };

  for (int v = 0; v < n && res.valid; ++v) {
    if (col[v] == Color::White && bcnt[v] == 1) {
      for (int u : g.neighbors(v)) {
        if (col[u] == Color::Uncolored) whiten(u);
        if (!res.valid) break;
      }
    } else if (col[v] == Color::Uncolored && bcnt[v] >= 2) {
      blacken(v);
    }
  }

  while (!work.empty() && res.valid) {
    int v = work.back();
    work.pop_back();
    if (col[v] == Color::Black) {
      for (int u : g.neighbors(v)) {
        ++bcnt[u];
        if (col[u] == Color::White) {
          if (bcnt[u] >= 2) {
            res.valid = false;
            break;
          }
          for (int z : g.neighbors(u)) {
            if (col[z] == Color::Uncolored) whiten(z);
            if (!res.valid) break;
          }
        } else if (col[u] == Color::Uncolored && bcnt[u] >= 2) {
          blacken(u);
        }
        if (!res.valid) break;
      }
    } else {  // freshly whitened
      if (bcnt[v] >= 2) {
        res.valid = false;
        break;
      }
      if (bcnt[v] == 1) {
        for (int z : g.neighbors(v)) {
          if (col[z] == Color::Uncolored) whiten(z);
          if (!res.valid) break;
        }
      }
    }
  }
  return res;
}

// ---------------------------------------------------------------------------
// Auxiliary conflict graph. After a valid propagation, the only freedom left
// sits on `remaining` (uncolored vertices forming an independent set). Two of
// them cannot both turn black when they share a white neighbor, and those
// pair conflicts are the whole story: completions correspond exactly to
// independent sets of this graph. Vertex i of the result is the i-th lowest
// member of `remaining`.

inline Graph build_aux_graph(const Graph& g, const PropagationResult& pr,
                             const Bitset& remaining) {
  const int n = g.vertex_count();
  if (!pr.valid) throw Error("build_aux_graph: propagation was invalid");
  if (remaining.universe() != n)
    throw Error("build_aux_graph: set universe mismatch");
  std::vector<int> verts = remaining.to_vector();
  std::vector<int> local(n, -1);
  for (int i = 0; i < int(verts.size()); ++i) {
    if (pr.coloring[verts[i]] != Color::Uncolored)
      throw Error("build_aux_graph: remaining vertex is already colored");
    local[verts[i]] = i;
  }
  for (int v : verts)
    for (int u : g.neighbors(v))
      if (local[u] >= 0)
        throw Error("build_aux_graph: remaining set is not independent");

  int k = int(verts.size());
  std::vector<Bitset> adj(k, Bitset(k));
  for (int w = 0; w < n; ++w) {
    if (pr.coloring[w] != Color::White) continue;
    Bitset nb(k);
    for (int u : g.neighbors(w))
      if (local[u] >= 0) nb.set(local[u]);
    if (nb.count() < 2) continue;
    for (int x : nb) adj[x] |= nb;
  }
  std::vector<std::pair<int, int>> edges;
  for (int x = 0; x < k; ++x)
    for (int y : adj[x])
      if (y > x) edges.emplace_back(x, y);
  return Graph(k, edges);
}

// ---------------------------------------------------------------------------
// Exact independent-set counting by branching. Components are handled
// independently (counts multiply); cliques, paths and cycles are closed
// forms; otherwise the recursion pivots on a maximum-degree vertex v with
// noi(G) = noi(G - v) + noi(G - N[v]).

namespace detail {

inline Count path_noi(int k) {
  // p(0) = 1, p(1) = 2, p(k) = p(k-1) + p(k-2)
  Count a = 1, b = 2;
  if (k == 0) return a;
  for (int i = 2; i <= k; ++i) {
    Count c = a + b;
    a = b;
    b = c;
  }
  return b;
}

inline Count cycle_noi(int k) { return path_noi(k - 1) + path_noi(k - 3); }

inline Count noi_component(const Graph& g, const Bitset& comp);

inline Count noi_masked(const Graph& g, const Bitset& alive) {
  Count total = 1;
  Bitset left = alive;
  int s;
  while ((s = left.find_first()) >= 0) {
    Bitset comp(alive.universe());
    std::vector<int> stack{s};
    comp.set(s);
    left.reset(s);
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      for (int u : g.neighbors(v))
        if (left.test(u)) {
          left.reset(u);
          comp.set(u);
          stack.push_back(u);
        }
    }
    total *= noi_component(g, comp);
  }
  return total;
}

inline Count noi_component(const Graph& g, const Bitset& comp) {
  int k = comp.count();
  if (k <= 1) return k == 0 ? Count(1) : Count(2);
  int edges2 = 0, maxdeg = 0, pivot = -1;
  for (int v : comp) {
    int d = (g.neighbor_mask(v) & comp).count();
    edges2 += d;
    if (d > maxdeg) {
      maxdeg = d;
      pivot = v;
    }
  }
  if (edges2 == k * (k - 1)) return Count(k + 1);  // clique
  if (maxdeg <= 2)
    return edges2 / 2 == k - 1 ? path_noi(k) : cycle_noi(k);
  Bitset without_v = comp;
  without_v.reset(pivot);
  Bitset without_nv = without_v.minus(g.neighbor_mask(pivot));
  return noi_masked(g, without_v) + noi_masked(g, without_nv);
}

}  // namespace detail

inline Count noi_branching(const Graph& g) {
  if (!g.has_masks())
    throw Error("noi_branching: needs the bitset view (at most " +
                std::to_string(Graph::kMaskCap) + " vertices)");
  return detail::noi_masked(g, Bitset::full(g.vertex_count()));
}

// ---------------------------------------------------------------------------
// Independent set selection.

enum class ISStrategy { Greedy, Bipartite };

inline bool is_independent_set(const Graph& g, const Bitset& s) {
  if (s.universe() != g.vertex_count())
    throw Error("is_independent_set: set universe mismatch");
  for (int v : s)
    for (int u : g.neighbors(v))
      if (u > v && s.test(u)) return false;
  return true;
}

// Greedy: repeatedly take a residual vertex of minimum residual degree
// (lowest index on ties) and drop its closed neighborhood. Guarantees at
// least n / (maxdeg + 1) vertices. Bipartite: the larger color class per
// component (the class of the component's lowest vertex on ties), at least
// n / 2 vertices overall; errors on odd cycles.
inline Bitset find_independent_set(const Graph& g, ISStrategy strategy) {
  const int n = g.vertex_count();
  Bitset out(n);
  if (strategy == ISStrategy::Greedy) {
    std::vector<bool> alive(n, true);
    std::vector<int> deg(n);
    for (int v = 0; v < n; ++v) deg[v] = g.degree(v);
    int left = n;
    while (left > 0) {
      int best = -1;
      for (int v = 0; v < n; ++v)
        if (alive[v] && (best < 0 || deg[v] < deg[best])) best = v;
      out.set(best);
      std::vector<int> drop{best};
      for (int u : g.neighbors(best))
        if (alive[u]) drop.push_back(u);
      for (int d : drop) {
        alive[d] = false;
        --left;
        for (int u : g.neighbors(d))
          if (alive[u]) --deg[u];
      }
    }
    return out;
  }
  auto colors = bipartition(g);
  if (!colors)
    throw Error("find_independent_set: graph is not bipartite");
  for (const auto& comp : connected_components(g)) {
    int ones = 0;
    for (int v : comp) ones += (*colors)[v];
    int take = 2 * ones > int(comp.size()) ? 1 : 0;
    for (int v : comp)
      if ((*colors)[v] == take) out.set(v);
  }
  return out;
}

// Caller-provided set: validated, then used as-is.
inline Bitset find_independent_set(const Graph& g, const Bitset& provided) {
  if (!is_independent_set(g, provided))
    throw Error("find_independent_set: provided set is not independent");
  return provided;
}

// ---------------------------------------------------------------------------
// Generic exact scheme: fix an independent set I, enumerate all 2^|V \ I|
// black/white colorings of the other vertices, propagate each, and count the
// completions of the valid ones through the auxiliary graph. Masks are
// enumerated ascending, bit j standing for the j-th lowest vertex outside I
// (set bit = black).

inline constexpr int kEnumerationCap = 30;

inline Count noc_generic(const Graph& g, const Bitset& i,
                         int cap = kEnumerationCap) {
  const int n = g.vertex_count();
  if (!g.has_masks())
    throw Error("noc_generic: needs the bitset view (at most " +
                std::to_string(Graph::kMaskCap) + " vertices)");
  if (!is_independent_set(g, i))
    throw Error("noc_generic: chosen set is not independent");
  if (cap > 62) cap = 62;  // colorings are enumerated as 64-bit masks
  std::vector<int> outside = i.complement().to_vector();
  int k = int(outside.size());
  if (k > cap)
    throw Error("noc_generic: " + std::to_string(k) +
                " enumerated vertices exceed the cap of " + std::to_string(cap));
  Count total = 0;
  PartialColoring base(n, Color::Uncolored);
  for (uint64_t mask = 0; mask < (uint64_t(1) << k); ++mask) {
    PartialColoring pi = base;
    for (int j = 0; j < k; ++j)
      pi[outside[j]] = (mask >> j) & 1 ? Color::Black : Color::White;
    auto pr = propagate(g, pi);
    if (!pr.valid) continue;
    Bitset remaining(n);
    for (int v : i)
      if (pr.coloring[v] == Color::Uncolored) remaining.set(v);
    if (remaining.none()) {
      total += 1;
    } else {
      total += noi_branching(build_aux_graph(g, pr, remaining));
    }
  }
  return total;
}

// ---------------------------------------------------------------------------
// Structured decomposition. Phase 1 peels "major blocks": a vertex v plus a
// nontrivial connected component of its residual neighborhood. Every convex
// set restricted to such a block is all white, all black, or exactly one
// black, so a block of size b contributes only b+2 patterns instead of 2^b.
// Phase 2 peels induced stars (K_{1,3}, K_{1,4} or K_{1,5} depending on the
// variant) from the triangle-free residue; their local patterns are the
// convex colorings of a star. Phase 3 picks an independent set from what is
// left; the remainder ("leftover") is enumerated freely.

enum class Variant { A, B, C };

inline const char* variant_name(Variant v) {
  switch (v) {
    case Variant::A: return "A";
    case Variant::B: return "B";
    default: return "C";
  }
}

struct DecompositionTrace {
  Variant variant = Variant::A;
  std::vector<Bitset> blocks;                       // extraction order
  std::vector<std::pair<int, std::vector<int>>> stars;  // (center, leaves)
  Bitset independent_set;
  Bitset leftover;
  int p = 0;  // vertices in blocks
  int q = 0;  // vertices in stars
  int r = 0;  // size of the independent set
  int t = 0;  // leftover vertices
};

namespace detail {

// Connected components of g restricted to `within`, in order of their lowest
// vertex.
inline std::vector<Bitset> masked_components(const Graph& g,
                                             const Bitset& within) {
  std::vector<Bitset> out;
  Bitset left = within;
  int s;
  while ((s = left.find_first()) >= 0) {
    Bitset comp(within.universe());
    comp.set(s);
    left.reset(s);
    std::vector<int> stack{s};
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      for (int u : g.neighbors(v))
        if (left.test(u)) {
          left.reset(u);
          comp.set(u);
          stack.push_back(u);
        }
    }
    out.push_back(std::move(comp));
  }
  return out;
}

}  // namespace detail

inline DecompositionTrace decompose(const Graph& g, Variant variant) {
  const int n = g.vertex_count();
  if (!g.has_masks())
    throw Error("decompose: needs the bitset view (at most " +
                std::to_string(Graph::kMaskCap) + " vertices)");
  DecompositionTrace tr;
  tr.variant = variant;
  Bitset alive = Bitset::full(n);

  // Phase 1: major blocks, largest first; ties fall to the lowest vertex and
  // then to the component holding the lowest vertex.
  while (true) {
    int best_v = -1;
    Bitset best_comp;
    int best_size = 1;
    for (int v : alive) {
      Bitset nb = g.neighbor_mask(v) & alive;
      if (nb.count() < 2) continue;
      for (const Bitset& comp : detail::masked_components(g, nb)) {
        if (comp.count() > best_size) {
          best_size = comp.count();
          best_v = v;
          best_comp = comp;
        }
      }
    }
    if (best_v < 0) break;
    Bitset block = best_comp;
    block.set(best_v);
    alive = alive.minus(block);
    tr.p += block.count();
    tr.blocks.push_back(std::move(block));
  }

  // The residue must be triangle-free now; a triangle would be a nontrivial
  // neighborhood component. Checked outright so a future edit cannot silently
  // break the star patterns of phase 2.
  for (int v : alive) {
    Bitset nb = g.neighbor_mask(v) & alive;
    for (int x : nb)
      if ((g.neighbor_mask(x) & nb).find_next(x + 1) >= 0)
        throw Error("decompose: triangle survived the block phase at vertex " +
                    std::to_string(v));
  }

  // Phase 2: induced stars around the lowest qualifying vertex, lowest
  // neighbors first.
  const int leaves_wanted = variant == Variant::A ? 3 : variant == Variant::B ? 4 : 5;
  while (true) {
    int center = -1;
    for (int v : alive) {
      if ((g.neighbor_mask(v) & alive).count() >= leaves_wanted) {
        center = v;
        break;
      }
    }
    if (center < 0) break;
    Bitset nb = g.neighbor_mask(center) & alive;
    std::vector<int> leaves;
    for (int u : nb) {
      leaves.push_back(u);
      if (int(leaves.size()) == leaves_wanted) break;
    }
    alive.reset(center);
    for (int u : leaves) alive.reset(u);
    tr.q += 1 + leaves_wanted;
    tr.stars.emplace_back(center, std::move(leaves));
  }

  // Phase 3: independent set. With max degree <= 2 the components are paths
  // and cycles and a maximum independent set is read off by alternation;
  // otherwise greedy minimum degree.
  tr.independent_set = Bitset(n);
  if (variant == Variant::A) {
    for (const Bitset& comp : detail::masked_components(g, alive)) {
      int size = comp.count();
      if (size == 1) {
        tr.independent_set.set(comp.find_first());
        continue;
      }
      int start = -1;
      for (int v : comp)
        if ((g.neighbor_mask(v) & comp).count() <= 1) {
          start = v;
          break;
        }
      bool is_cycle = start < 0;
      if (is_cycle) start = comp.find_first();
      std::vector<int> order{start};
      int prev = -1, cur = start;
      while (int(order.size()) < size) {
        int next = -1;
        for (int u : (g.neighbor_mask(cur) & comp))
          if (u != prev && (next < 0 || u < next)) next = u;
        order.push_back(next);
        prev = cur;
        cur = next;
      }
      int take_until = is_cycle && size % 2 == 1 ? size - 2 : size - 1;
      for (int idx = 0; idx <= take_until; idx += 2)
        tr.independent_set.set(order[idx]);
    }
  } else {
    Bitset residual = alive;
    while (residual.any()) {
      int best = -1, best_deg = 0;
      for (int v : residual) {
        int d = (g.neighbor_mask(v) & residual).count();
        if (best < 0 || d < best_deg) {
          best = v;
          best_deg = d;
        }
      }
      tr.independent_set.set(best);
      residual = residual.minus(g.neighbor_mask(best));
      residual.reset(best);
    }
  }
  tr.leftover = alive.minus(tr.independent_set);
  tr.r = tr.independent_set.count();
  tr.t = tr.leftover.count();
  return tr;
}

// ---------------------------------------------------------------------------
// Local pattern tables and the composite enumeration shared by the
// structured and clique-partition schemes.

namespace detail {

struct PatternGroup {
  std::vector<int> verts;
  std::vector<PartialColoring> patterns;  // each entry sized like verts
};

// all white, one black each, all black
inline PatternGroup trichotomy_group(const std::vector<int>& verts) {
  PatternGroup gp;
  gp.verts = verts;
  size_t b = verts.size();
  gp.patterns.emplace_back(b, Color::White);
  for (size_t one = 0; one < b; ++one) {
    PartialColoring pat(b, Color::White);
    pat[one] = Color::Black;
    gp.patterns.push_back(std::move(pat));
  }
  gp.patterns.emplace_back(b, Color::Black);
  return gp;
}

// Convex colorings of a star with `leaves` leaves, computed once from the
// oracle on the star shape. Index 0 is the center.
inline const std::vector<PartialColoring>& star_local_patterns(int leaves) {
  static const std::map<int, std::vector<PartialColoring>> table = [] {
    std::map<int, std::vector<PartialColoring>> t;
    for (int k : {3, 4, 5}) {
      std::vector<PartialColoring>& pats = t[k];
      enumerate_convex_sets(star(k + 1), [&](const Bitset& s) {
        PartialColoring pat(k + 1, Color::White);
        for (int v : s) pat[v] = Color::Black;
        pats.push_back(std::move(pat));
      });
    }
    return t;
  }();
  auto it = table.find(leaves);
  if (it == table.end())
    throw Error("star_local_patterns: unsupported star size");
  return it->second;
}

inline PatternGroup star_group(int center, const std::vector<int>& leaves) {
  PatternGroup gp;
  gp.verts.push_back(center);
  gp.verts.insert(gp.verts.end(), leaves.begin(), leaves.end());
  gp.patterns = star_local_patterns(int(leaves.size()));
  return gp;
}

inline PatternGroup free_vertex_group(int v) {
  PatternGroup gp;
  gp.verts.push_back(v);
  gp.patterns.push_back({Color::White});
  gp.patterns.push_back({Color::Black});
  return gp;
}

// Odometer over the per-group pattern choices. Each composite colors all
// grouped vertices, leaving `island` uncolored; composites surviving
// propagation contribute the independent-set count of their auxiliary graph.
inline Count sum_over_composites(const Graph& g,
                                 const std::vector<PatternGroup>& groups,
                                 const Bitset& island, Count* enumerated_out) {
  const int n = g.vertex_count();
  Count enumerated = 1;
  for (const auto& gp : groups) enumerated *= Count(gp.patterns.size());
  if (enumerated_out) *enumerated_out = enumerated;

  Count total = 0;
  std::vector<size_t> idx(groups.size(), 0);
  while (true) {
    PartialColoring pi(n, Color::Uncolored);
    for (size_t gi = 0; gi < groups.size(); ++gi) {
      const auto& gp = groups[gi];
      const auto& pat = gp.patterns[idx[gi]];
      for (size_t j = 0; j < gp.verts.size(); ++j) pi[gp.verts[j]] = pat[j];
    }
    auto pr = propagate(g, pi);
    if (pr.valid) {
      Bitset remaining(n);
      for (int v : island)
        if (pr.coloring[v] == Color::Uncolored) remaining.set(v);
      if (remaining.none())
        total += 1;
      else
        total += noi_branching(build_aux_graph(g, pr, remaining));
    }
    size_t gi = 0;
    while (gi < groups.size() && ++idx[gi] == groups[gi].patterns.size()) {
      idx[gi] = 0;
      ++gi;
    }
    if (gi == groups.size()) break;
  }
  return total;
}

}  // namespace detail

struct StructuredResult {
  Count noc;
  Count colorings_enumerated;
  DecompositionTrace trace;
};

inline StructuredResult noc_structured(const Graph& g, Variant variant,
                                       int cap = kEnumerationCap) {
  DecompositionTrace tr = decompose(g, variant);
  const int n = g.vertex_count();
  int enumerated_side = n - tr.r;
  if (enumerated_side > cap)
    throw Error("noc_structured: " + std::to_string(enumerated_side) +
                " enumerated vertices exceed the cap of " + std::to_string(cap));
  std::vector<detail::PatternGroup> groups;
  for (const Bitset& b : tr.blocks)
    groups.push_back(detail::trichotomy_group(b.to_vector()));
  for (const auto& [center, leaves] : tr.stars)
    groups.push_back(detail::star_group(center, leaves));
  for (int v : tr.leftover) groups.push_back(detail::free_vertex_group(v));
  StructuredResult out;
  out.noc = detail::sum_over_composites(g, groups, tr.independent_set,
                                        &out.colorings_enumerated);
  out.trace = std::move(tr);
  return out;
}

// ---------------------------------------------------------------------------
// Clique-and-independent partition scheme. The caller supplies a partition of
// V into independent parts and cliques; cliques carry the same b+2 pattern
// trichotomy as blocks, the largest independent part stays uncolored, and
// every other vertex is enumerated freely.

struct KLPartition {
  std::vector<Bitset> independent_parts;
  std::vector<Bitset> clique_parts;
};

inline Count noc_kl(const Graph& g, const KLPartition& part,
                    int cap = kEnumerationCap) {
  const int n = g.vertex_count();
  Bitset seen(n);
  auto absorb = [&](const Bitset& b, bool want_independent) {
    if (b.universe() != n) throw Error("noc_kl: part universe mismatch");
    if (b.intersects(seen)) throw Error("noc_kl: parts overlap");
    seen |= b;
    for (int v : b)
      for (int u : b)
        if (u > v && g.adjacent(u, v) == want_independent)
          throw Error(want_independent ? "noc_kl: independent part has an edge"
                                       : "noc_kl: clique part misses an edge");
  };
  for (const auto& b : part.independent_parts) absorb(b, true);
  for (const auto& b : part.clique_parts) absorb(b, false);
  if (seen != Bitset::full(n))
    throw Error("noc_kl: parts do not cover the vertex set");

  int island_idx = -1;
  for (int i = 0; i < int(part.independent_parts.size()); ++i)
    if (island_idx < 0 || part.independent_parts[i].count() >
                              part.independent_parts[island_idx].count())
      island_idx = i;
  Bitset island =
      island_idx >= 0 ? part.independent_parts[island_idx] : Bitset(n);

  int enumerated_side = n - island.count();
  if (enumerated_side > cap)
    throw Error("noc_kl: " + std::to_string(enumerated_side) +
                " enumerated vertices exceed the cap of " + std::to_string(cap));

  std::vector<detail::PatternGroup> groups;
  for (const auto& c : part.clique_parts)
    groups.push_back(detail::trichotomy_group(c.to_vector()));
  for (int i = 0; i < int(part.independent_parts.size()); ++i)
    if (i != island_idx)
      for (int v : part.independent_parts[i])
        groups.push_back(detail::free_vertex_group(v));
  return detail::sum_over_composites(g, groups, island, nullptr);
}

// ---------------------------------------------------------------------------
// Dispatcher: per-component product, then trees by the linear DP, threshold
// graphs by the closed form, everything else through the structured scheme
// with the variant promising the fewest composites.

inline Count noc_auto(const Graph& g, int cap = kEnumerationCap) {
  const int n = g.vertex_count();
  if (n == 0) return 1;
  auto comps = connected_components(g);
  if (comps.size() > 1) {
    Count total = 1;
    for (const auto& comp : comps) {
      Bitset keep(n);
      for (int v : comp) keep.set(v);
      total *= noc_auto(induced_subgraph(g, keep).graph, cap);
    }
    return total;
  }
  if (is_tree(g)) return noc_tree(g);
  if (recognize_threshold(g).is_threshold) return noc_threshold(g);

  Variant best = Variant::A;
  Count best_load;
  bool first = true;
  for (Variant v : {Variant::A, Variant::B, Variant::C}) {
    DecompositionTrace tr = decompose(g, v);
    Count load = pow2(unsigned(tr.t));
    for (const Bitset& b : tr.blocks) load *= Count(b.count() + 2);
    for (const auto& [center, leaves] : tr.stars)
      load *= Count(detail::star_local_patterns(int(leaves.size())).size());
    if (first || load < best_load) {
      best = v;
      best_load = load;
      first = false;
    }
  }
  return noc_structured(g, best, cap).noc;
}

}  // namespace p3c
