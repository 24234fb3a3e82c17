#pragma once

#include <bit>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "p3c/core.hpp"
#include "p3c/graph.hpp"

namespace p3c {

// Exhaustive reference counters. Every subset of V is tested, so these are
// the ground truth the faster algorithms are measured against. The cap is a
// refusal bound, not a truncation: a too-large input raises an error rather
// than returning a partial answer.

inline constexpr int kOracleCap = 25;

namespace detail {

inline void check_oracle_size(const Graph& g, int cap, const char* who) {
  if (cap > 63) cap = 63;  // subsets are enumerated as 64-bit masks
  if (g.vertex_count() > cap)
    throw Error(std::string(who) + ": " + std::to_string(g.vertex_count()) +
                " vertices exceeds the oracle cap of " + std::to_string(cap));
}

inline std::vector<uint64_t> word_masks(const Graph& g) {
  std::vector<uint64_t> adj(g.vertex_count(), 0);
  for (int v = 0; v < g.vertex_count(); ++v)
    for (int u : g.neighbors(v)) adj[v] |= uint64_t(1) << u;
  return adj;
}

}  // namespace detail

// Number of P3-convex subsets of V, the empty set and V included.
inline Count noc_bruteforce(const Graph& g, int cap = kOracleCap) {
  detail::check_oracle_size(g, cap, "noc_bruteforce");
  const int n = g.vertex_count();
  const auto adj = detail::word_masks(g);
  Count total = 0;
  const uint64_t end = uint64_t(1) << n;
  for (uint64_t mask = 0; mask < end; ++mask) {
    bool ok = true;
    uint64_t outside = ~mask & (end - 1);
    while (outside) {
      int v = std::countr_zero(outside);
      outside &= outside - 1;
      if (std::popcount(adj[v] & mask) >= 2) {
        ok = false;
        break;
      }
    }
    if (ok) ++total;
  }
  return total;
}

// Number of independent sets, the empty set included.
inline Count noi_bruteforce(const Graph& g, int cap = kOracleCap) {
  detail::check_oracle_size(g, cap, "noi_bruteforce");
  const int n = g.vertex_count();
  const auto adj = detail::word_masks(g);
  Count total = 0;
  const uint64_t end = uint64_t(1) << n;
  for (uint64_t mask = 0; mask < end; ++mask) {
    bool ok = true;
    uint64_t rest = mask;
    while (rest) {
      int v = std::countr_zero(rest);
      rest &= rest - 1;
      if (adj[v] & mask) {
        ok = false;
        break;
      }
    }
    if (ok) ++total;
  }
  return total;
}

// Emits each P3-convex set in ascending bitmask order (so the empty set is
// always first and V always last).
inline void enumerate_convex_sets(const Graph& g,
                                  const std::function<void(const Bitset&)>& fn,
                                  int cap = kOracleCap) {
  detail::check_oracle_size(g, cap, "enumerate_convex_sets");
  const int n = g.vertex_count();
  const auto adj = detail::word_masks(g);
  const uint64_t end = uint64_t(1) << n;
  for (uint64_t mask = 0; mask < end; ++mask) {
    bool ok = true;
    uint64_t outside = ~mask & (end - 1);
    while (outside) {
      int v = std::countr_zero(outside);
      outside &= outside - 1;
      if (std::popcount(adj[v] & mask) >= 2) {
        ok = false;
        break;
      }
    }
    if (!ok) continue;
    Bitset s(n);
    uint64_t rest = mask;
    while (rest) {
      int v = std::countr_zero(rest);
      rest &= rest - 1;
      s.set(v);
    }
    fn(s);
  }
}

}  // namespace p3c
