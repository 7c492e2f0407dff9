#pragma once

// Plain reference implementations used as oracles. Deliberately written
// with naive containers and exhaustive subset loops, independent of the
// bitset code paths they check. Only sensible for small n.

#include <algorithm>
#include <optional>
#include <set>
#include <vector>

#include "zf/graph.hpp"

namespace ref {

inline std::vector<std::vector<int>> adj_lists(const zf::Graph& g) {
  std::vector<std::vector<int>> adj(static_cast<std::size_t>(g.order()));
  for (int u = 0; u < g.order(); ++u)
    for (int v = 0; v < g.order(); ++v)
      if (u != v && g.adjacent(u, v)) adj[static_cast<std::size_t>(u)].push_back(v);
  return adj;
}

inline std::set<int> closure(const std::vector<std::vector<int>>& adj, std::set<int> blue) {
  for (;;) {
    std::vector<int> forced;
    for (int b : blue) {
      std::vector<int> whites;
      for (int w : adj[static_cast<std::size_t>(b)])
        if (!blue.count(w)) whites.push_back(w);
      if (whites.size() == 1) forced.push_back(whites.front());
    }
    bool grew = false;
    for (int w : forced) grew = blue.insert(w).second || grew;
    if (!grew) return blue;
  }
}

inline bool is_zfs(const zf::Graph& g, const std::vector<int>& start) {
  return static_cast<int>(closure(adj_lists(g), {start.begin(), start.end()}).size()) == g.order();
}

struct ZfRef {
  int value = 0;
  std::vector<int> witness;  // lexicographically least among all minimum sets
};

inline ZfRef zero_forcing(const zf::Graph& g) {
  const auto adj = adj_lists(g);
  const int n = g.order();
  for (int k = 1; k <= n; ++k) {
    std::optional<std::vector<int>> best;
    for (unsigned mask = 0; mask < (1u << n); ++mask) {
      if (std::popcount(mask) != k) continue;
      std::set<int> blue;
      std::vector<int> verts;
      for (int v = 0; v < n; ++v)
        if (mask >> v & 1) {
          blue.insert(v);
          verts.push_back(v);
        }
      if (static_cast<int>(closure(adj, blue).size()) != n) continue;
      if (!best || std::lexicographical_compare(verts.begin(), verts.end(), best->begin(), best->end()))
        best = verts;
    }
    if (best) return {k, *best};
  }
  return {n, {}};
}

inline bool contains_krs(const zf::Graph& g, int r, int s) {
  const int n = g.order();
  for (unsigned a = 0; a < (1u << n); ++a) {
    if (std::popcount(a) != r) continue;
    for (unsigned b = 0; b < (1u << n); ++b) {
      if (std::popcount(b) != s || (a & b)) continue;
      bool complete = true;
      for (int u = 0; u < n && complete; ++u)
        for (int v = 0; v < n && complete; ++v)
          if ((a >> u & 1) && (b >> v & 1)) complete = g.adjacent(u, v);
      if (complete) return true;
    }
  }
  return false;
}

}  // namespace ref
