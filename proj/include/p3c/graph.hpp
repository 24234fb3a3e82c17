#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <queue>
#include <random>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "p3c/bitset.hpp"
#include "p3c/core.hpp"

namespace p3c {

// Finite simple undirected graph on vertices 0..n-1. Immutable once built.
// Parallel edges in the input are collapsed silently; self-loops are an error.
// For graphs up to kMaskCap vertices a per-vertex neighbor bitset is kept
// alongside the sorted adjacency lists; subset-enumeration style algorithms
// require that view and refuse to run beyond the cap.
class Graph {
 public:
  static constexpr int kMaskCap = 128;

  Graph() = default;

  Graph(int n, const std::vector<std::pair<int, int>>& edge_list) : n_(n) {
    if (n < 0) throw Error("graph: negative vertex count");
    adj_.resize(n);
    for (auto [u, v] : edge_list) {
      if (u < 0 || u >= n || v < 0 || v >= n)
        throw Error("graph: edge endpoint out of range");
      if (u == v) throw Error("graph: self-loop on vertex " + std::to_string(u));
      adj_[u].push_back(v);
      adj_[v].push_back(u);
    }
    int m2 = 0;
    for (auto& nb : adj_) {
      std::sort(nb.begin(), nb.end());
      nb.erase(std::unique(nb.begin(), nb.end()), nb.end());
      m2 += int(nb.size());
    }
    m_ = m2 / 2;
    if (n_ <= kMaskCap) {
      masks_.assign(n_, Bitset(n_));
      for (int u = 0; u < n_; ++u)
        for (int v : adj_[u]) masks_[u].set(v);
    }
  }

  int vertex_count() const { return n_; }
  int edge_count() const { return m_; }

  const std::vector<int>& neighbors(int v) const { return adj_[v]; }
  int degree(int v) const { return int(adj_[v].size()); }

  bool adjacent(int u, int v) const {
    if (!masks_.empty()) return masks_[u].test(v);
    return std::binary_search(adj_[u].begin(), adj_[u].end(), v);
  }

  bool has_masks() const { return n_ == 0 || !masks_.empty(); }

  const Bitset& neighbor_mask(int v) const {
    if (masks_.empty())
      throw Error("graph: bitset view unavailable beyond " +
                  std::to_string(kMaskCap) + " vertices");
    return masks_[v];
  }

  // Edges as (u, v) with u < v, lexicographically sorted.
  std::vector<std::pair<int, int>> edges() const {
    std::vector<std::pair<int, int>> e;
    e.reserve(m_);
    for (int u = 0; u < n_; ++u)
      for (int v : adj_[u])
        if (u < v) e.emplace_back(u, v);
    return e;
  }

 private:
  int n_ = 0;
  int m_ = 0;
  std::vector<std::vector<int>> adj_;
  std::vector<Bitset> masks_;
};

// ---------------------------------------------------------------------------
// Text format: first non-comment line "n m", then m lines "u v". Lines whose
// first non-blank character is '#' are comments. Vertices are 0-indexed.

namespace detail {

inline bool is_comment_or_blank(const std::string& line) {
  for (char c : line) {
    if (c == ' ' || c == '\t' || c == '\r') continue;
    return c == '#';
  }
  return true;
}

inline std::vector<long long> parse_ints(const std::string& line, int lineno,
                                         size_t expect) {
  std::istringstream is(line);
  std::vector<long long> out;
  long long x;
  while (is >> x) out.push_back(x);
  std::string rest;
  if (!is.eof()) {
    throw Error("parse error at line " + std::to_string(lineno) +
                ": expected integers, got \"" + line + "\"");
  }
  if (out.size() != expect)
    throw Error("parse error at line " + std::to_string(lineno) + ": expected " +
                std::to_string(expect) + " integers, got \"" + line + "\"");
  return out;
}

}  // namespace detail

inline Graph parse_edge_list(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  long long n = -1, m = -1;
  std::vector<std::pair<int, int>> edges;
  long long seen = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (detail::is_comment_or_blank(line)) continue;
    if (n < 0) {
      auto h = detail::parse_ints(line, lineno, 2);
      n = h[0];
      m = h[1];
      if (n < 0 || m < 0)
        throw Error("parse error at line " + std::to_string(lineno) +
                    ": negative n or m");
      continue;
    }
    if (seen == m)
      throw Error("parse error at line " + std::to_string(lineno) +
                  ": unexpected content after " + std::to_string(m) + " edges");
    auto e = detail::parse_ints(line, lineno, 2);
    if (e[0] < 0 || e[0] >= n || e[1] < 0 || e[1] >= n)
      throw Error("parse error at line " + std::to_string(lineno) +
                  ": vertex out of range [0, " + std::to_string(n) + ")");
    if (e[0] == e[1])
      throw Error("parse error at line " + std::to_string(lineno) +
                  ": self-loop on vertex " + std::to_string(e[0]));
    edges.emplace_back(int(e[0]), int(e[1]));
    ++seen;
  }
  if (n < 0) throw Error("parse error: missing header line \"n m\"");
  if (seen < m)
    throw Error("parse error: header promises " + std::to_string(m) +
                " edges, found " + std::to_string(seen));
  return Graph(int(n), edges);
}

inline std::string to_edge_list(const Graph& g) {
  std::ostringstream os;
  auto e = g.edges();
  os << g.vertex_count() << ' ' << e.size() << '\n';
  for (auto [u, v] : e) os << u << ' ' << v << '\n';
  return os.str();
}

// ---------------------------------------------------------------------------
// Generators.

inline Graph edgeless(int n) {
  if (n < 0) throw Error("edgeless: n must be >= 0");
  return Graph(n, {});
}

inline Graph path(int n) {
  if (n < 1) throw Error("path: n must be >= 1");
  std::vector<std::pair<int, int>> e;
  for (int i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
  return Graph(n, e);
}

inline Graph cycle(int n) {
  if (n < 3) throw Error("cycle: n must be >= 3");
  std::vector<std::pair<int, int>> e;
  for (int i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
  e.emplace_back(n - 1, 0);
  return Graph(n, e);
}

// Center is vertex 0, leaves 1..n-1.
inline Graph star(int n) {
  if (n < 1) throw Error("star: n must be >= 1");
  std::vector<std::pair<int, int>> e;
  for (int i = 1; i < n; ++i) e.emplace_back(0, i);
  return Graph(n, e);
}

inline Graph complete(int n) {
  if (n < 1) throw Error("complete: n must be >= 1");
  std::vector<std::pair<int, int>> e;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) e.emplace_back(u, v);
  return Graph(n, e);
}

// Parts are 0..a-1 and a..a+b-1.
inline Graph complete_bipartite(int a, int b) {
  if (a < 1 || b < 1) throw Error("complete_bipartite: parts must be >= 1");
  std::vector<std::pair<int, int>> e;
  for (int u = 0; u < a; ++u)
    for (int v = 0; v < b; ++v) e.emplace_back(u, a + v);
  return Graph(a + b, e);
}

// Vertices of b are shifted up by a.vertex_count().
inline Graph disjoint_union(const Graph& a, const Graph& b) {
  int na = a.vertex_count();
  auto e = a.edges();
  for (auto [u, v] : b.edges()) e.emplace_back(na + u, na + v);
  return Graph(na + b.vertex_count(), e);
}

// Standard decode: degree counts, repeatedly attach the smallest current leaf
// to the next sequence entry. Sequence of length n-2 yields a tree on n >= 2
// labeled vertices; the map is a bijection onto labeled trees.
inline Graph tree_from_prufer(const std::vector<int>& seq) {
  int n = int(seq.size()) + 2;
  std::vector<int> deg(n, 1);
  for (int s : seq) {
    if (s < 0 || s >= n) throw Error("tree_from_prufer: entry out of range");
    ++deg[s];
  }
  std::priority_queue<int, std::vector<int>, std::greater<>> leaves;
  for (int v = 0; v < n; ++v)
    if (deg[v] == 1) leaves.push(v);
  std::vector<std::pair<int, int>> e;
  for (int s : seq) {
    int leaf = leaves.top();
    leaves.pop();
    e.emplace_back(leaf, s);
    if (--deg[s] == 1) leaves.push(s);
  }
  int u = leaves.top();
  leaves.pop();
  int v = leaves.top();
  e.emplace_back(u, v);
  return Graph(n, e);
}

enum class ThresholdTag : uint8_t { Isolated, Universal };

// Builds the graph whose i-th added vertex is isolated or universal at the
// time of insertion. The first tag is immaterial (a single vertex is both).
inline Graph threshold_from_sequence(const std::vector<ThresholdTag>& tags) {
  if (tags.empty()) throw Error("threshold_from_sequence: empty sequence");
  std::vector<std::pair<int, int>> e;
  for (int i = 1; i < int(tags.size()); ++i)
    if (tags[i] == ThresholdTag::Universal)
      for (int j = 0; j < i; ++j) e.emplace_back(j, i);
  return Graph(int(tags.size()), e);
}

// Erdos-Renyi G(n, p). The per-pair uniform draw is computed from raw mt19937_64
// output so results are identical across platforms for a fixed seed.
inline Graph random_gnp(int n, double p, uint64_t seed) {
  if (n < 1) throw Error("random_gnp: n must be >= 1");
  if (p < 0.0 || p > 1.0) throw Error("random_gnp: p must be in [0, 1]");
  std::mt19937_64 gen(seed);
  std::vector<std::pair<int, int>> e;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) {
      double r = double(gen() >> 11) * 0x1.0p-53;
      if (r < p) e.emplace_back(u, v);
    }
  return Graph(n, e);
}

// ---------------------------------------------------------------------------
// Structure queries.

inline int min_degree(const Graph& g) {
  int d = g.vertex_count() == 0 ? 0 : g.degree(0);
  for (int v = 1; v < g.vertex_count(); ++v) d = std::min(d, g.degree(v));
  return d;
}

inline int max_degree(const Graph& g) {
  int d = 0;
  for (int v = 0; v < g.vertex_count(); ++v) d = std::max(d, g.degree(v));
  return d;
}

inline std::vector<std::vector<int>> connected_components(const Graph& g) {
  int n = g.vertex_count();
  std::vector<int> comp(n, -1);
  std::vector<std::vector<int>> out;
  for (int s = 0; s < n; ++s) {
    if (comp[s] >= 0) continue;
    int id = int(out.size());
    out.emplace_back();
    std::vector<int> stack{s};
    comp[s] = id;
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      out[id].push_back(v);
      for (int u : g.neighbors(v))
        if (comp[u] < 0) {
          comp[u] = id;
          stack.push_back(u);
        }
    }
    std::sort(out[id].begin(), out[id].end());
  }
  return out;
}

inline bool is_connected(const Graph& g) {
  return g.vertex_count() <= 1 || connected_components(g).size() == 1;
}

inline bool is_tree(const Graph& g) {
  return g.vertex_count() >= 1 && g.edge_count() == g.vertex_count() - 1 &&
         is_connected(g);
}

// Two-coloring, or nullopt if an odd cycle exists. Colors are 0/1; the
// BFS root of each component (its smallest vertex) gets color 0.
inline std::optional<std::vector<int>> bipartition(const Graph& g) {
  int n = g.vertex_count();
  std::vector<int> color(n, -1);
  for (int s = 0; s < n; ++s) {
    if (color[s] >= 0) continue;
    color[s] = 0;
    std::queue<int> q;
    q.push(s);
    while (!q.empty()) {
      int v = q.front();
      q.pop();
      for (int u : g.neighbors(v)) {
        if (color[u] < 0) {
          color[u] = 1 - color[v];
          q.push(u);
        } else if (color[u] == color[v]) {
          return std::nullopt;
        }
      }
    }
  }
  return color;
}

inline bool is_bipartite(const Graph& g) { return bipartition(g).has_value(); }

inline Graph delete_edge(const Graph& g, int u, int v) {
  if (u < 0 || u >= g.vertex_count() || v < 0 || v >= g.vertex_count())
    throw Error("delete_edge: vertex out of range");
  if (!g.adjacent(u, v)) throw Error("delete_edge: no such edge");
  std::vector<std::pair<int, int>> e;
  for (auto [a, b] : g.edges())
    if (!(a == std::min(u, v) && b == std::max(u, v))) e.emplace_back(a, b);
  return Graph(g.vertex_count(), e);
}

// Induced subgraph plus the map from new indices back to g's vertices
// (ascending order of the kept vertices).
struct Subgraph {
  Graph graph;
  std::vector<int> vertices;
};

inline Subgraph induced_subgraph(const Graph& g, const Bitset& keep) {
  if (keep.universe() != g.vertex_count())
    throw Error("induced_subgraph: set universe mismatch");
  std::vector<int> verts = keep.to_vector();
  std::vector<int> index(g.vertex_count(), -1);
  for (int i = 0; i < int(verts.size()); ++i) index[verts[i]] = i;
  std::vector<std::pair<int, int>> e;
  for (int v : verts)
    for (int u : g.neighbors(v))
      if (u > v && index[u] >= 0) e.emplace_back(index[v], index[u]);
  return {Graph(int(verts.size()), e), std::move(verts)};
}

inline Subgraph delete_vertices(const Graph& g, const Bitset& drop) {
  if (drop.universe() != g.vertex_count())
    throw Error("delete_vertices: set universe mismatch");
  return induced_subgraph(g, drop.complement());
}

// A set s is P3-convex when no vertex outside s has two or more neighbors
// inside it. Runs in O(|V| + |E|).
inline bool is_p3_convex(const Graph& g, const Bitset& s) {
  if (s.universe() != g.vertex_count())
    throw Error("is_p3_convex: set universe mismatch");
  for (int v = 0; v < g.vertex_count(); ++v) {
    if (s.test(v)) continue;
    int inside = 0;
    for (int u : g.neighbors(v))
      if (s.test(u) && ++inside >= 2) return false;
  }
  return true;
}

}  // namespace p3c
