#include "zf/structure.hpp"

#include <algorithm>
#include <stdexcept>

namespace zf {

namespace {

VertexSet lowest_k(VertexSet s, int k) {
  VertexSet out = 0;
  for (int i = 0; i < k; ++i) {
    out |= s & -s;
    s &= s - 1;
  }
  return out;
}

}  // namespace

std::optional<KrsWitness> contains_krs(const Graph& g, int r, int s) {
  if (r < 1 || r > s) throw std::invalid_argument("contains_krs: need 1 <= r <= s");
  if (r + s > g.order()) throw std::invalid_argument("contains_krs: r + s exceeds graph order");
  const int n = g.order();

  if (r == 1) {
    for (int v = 0; v < n; ++v)
      if (g.degree(v) >= s) return KrsWitness{vbit(v), lowest_k(g.neighbors(v), s)};
    return std::nullopt;
  }
  if (r == 2) {
    for (int u = 0; u < n; ++u)
      for (int v = u + 1; v < n; ++v) {
        const VertexSet common = g.neighbors(u) & g.neighbors(v);
        if (set_size(common) >= s)
          return KrsWitness{vbit(u) | vbit(v), lowest_k(common, s)};
      }
    return std::nullopt;
  }

  // r >= 3: backtrack over the r-side, keeping the running common
  // neighborhood; prune when it can no longer supply the s-side
  std::optional<KrsWitness> found;
  auto rec = [&](auto&& self, int next, int picked, VertexSet side, VertexSet common) -> bool {
    if (picked == r) {
      const VertexSet pool = common & ~side;
      if (set_size(pool) >= s) {
        found = KrsWitness{side, lowest_k(pool, s)};
        return true;
      }
      return false;
    }
    for (int v = next; v <= n - (r - picked); ++v) {
      if (g.degree(v) < s) continue;
      const VertexSet c = common & g.neighbors(v);
      if (set_size(c & ~(side | vbit(v))) < s) continue;
      if (self(self, v + 1, picked + 1, side | vbit(v), c)) return true;
    }
    return false;
  };
  rec(rec, 0, 0, 0, g.vertices());
  return found;
}

KrsBound krs_free_bound(const Graph& g) {
  const int n = g.order();
  for (int t = 2; t <= n; ++t)
    for (int r = t / 2; r >= 1; --r)
      if (!contains_krs(g, r, t - r)) return {n - t + 1, r, t - r};
  return {1, 0, 0};
}

bool contains_induced(const Graph& g, const Graph& pattern) {
  const int n = g.order();
  const int p = pattern.order();
  if (p > n) return false;
  std::vector<int> map(static_cast<std::size_t>(p));
  VertexSet used = 0;
  auto rec = [&](auto&& self, int i) -> bool {
    if (i == p) return true;
    for (int v = 0; v < n; ++v) {
      if (used & vbit(v)) continue;
      bool ok = true;
      for (int j = 0; j < i && ok; ++j)
        ok = pattern.adjacent(i, j) == g.adjacent(v, map[static_cast<std::size_t>(j)]);
      if (!ok) continue;
      map[static_cast<std::size_t>(i)] = v;
      used |= vbit(v);
      if (self(self, i + 1)) return true;
      used &= ~vbit(v);
    }
    return false;
  };
  return rec(rec, 0);
}

const std::array<Graph, 5>& forbidden_patterns() {
  static const std::array<Graph, 5> patterns = {
      Graph::from_edges(4, {{0, 1}, {1, 2}, {2, 3}}),                  // P4
      Graph::from_edges(5, {{0, 1}, {1, 2}, {3, 4}}),                  // P3 + P2
      Graph::from_edges(5, {{0, 1}, {0, 2}, {1, 2}, {0, 3}, {0, 4}}),  // cricket
      Graph::from_edges(5, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {0, 4}}),  // dart
      Graph::from_edges(6, {{0, 1}, {2, 3}, {4, 5}}),                  // 3 P2
  };
  return patterns;
}

std::array<std::string_view, 5> forbidden_pattern_names() {
  return {"P4", "P3+P2", "cricket", "dart", "P2+P2+P2"};
}

bool forbidden_induced_test(const Graph& g) {
  if (g.order() < 3) throw std::invalid_argument("forbidden_induced_test: needs n >= 3");
  for (const Graph& pat : forbidden_patterns())
    if (contains_induced(g, pat)) return false;
  return true;
}

std::string_view family_name(Family f) {
  switch (f) {
    case Family::Tree: return "tree";
    case Family::Unicyclic: return "unicyclic";
    case Family::Cactus: return "cactus";
    case Family::BipartiteK22Free: return "bipartite_k22_free";
    case Family::Other: return "other";
  }
  return "other";
}

bool is_bipartite(const Graph& g) {
  const int n = g.order();
  std::vector<int> color(static_cast<std::size_t>(n), -1);
  for (int v0 = 0; v0 < n; ++v0) {
    if (color[static_cast<std::size_t>(v0)] >= 0) continue;
    color[static_cast<std::size_t>(v0)] = 0;
    std::vector<int> queue{v0};
    while (!queue.empty()) {
      const int u = queue.back();
      queue.pop_back();
      for (VertexSet m = g.neighbors(u); m; m &= m - 1) {
        const int w = first_vertex(m);
        if (color[static_cast<std::size_t>(w)] < 0) {
          color[static_cast<std::size_t>(w)] = 1 - color[static_cast<std::size_t>(u)];
          queue.push_back(w);
        } else if (color[static_cast<std::size_t>(w)] == color[static_cast<std::size_t>(u)]) {
          return false;
        }
      }
    }
  }
  return true;
}

namespace {

bool block_is_cycle(const Graph& g, VertexSet block) {
  if (set_size(block) < 3) return false;
  for (VertexSet m = block; m; m &= m - 1)
    if (set_size(g.neighbors(first_vertex(m)) & block) != 2) return false;
  return true;
}

// cyclic order of a block known to be a cycle: least vertex, then its
// least in-block neighbor
std::vector<int> cycle_order(const Graph& g, VertexSet block) {
  const int start = first_vertex(block);
  std::vector<int> cyc{start};
  int prev = start;
  int cur = first_vertex(g.neighbors(start) & block);
  while (cur != start) {
    cyc.push_back(cur);
    const VertexSet nb = (g.neighbors(cur) & block) & ~vbit(prev);
    prev = cur;
    cur = first_vertex(nb);
  }
  return cyc;
}

UnicyclicDecomposition unicyclic_decomposition(const Graph& g) {
  const int n = g.order();
  // peel leaves down to the 2-core, which is exactly the cycle
  std::vector<int> deg(static_cast<std::size_t>(n));
  std::vector<int> stack;
  for (int v = 0; v < n; ++v) {
    deg[static_cast<std::size_t>(v)] = g.degree(v);
    if (deg[static_cast<std::size_t>(v)] <= 1) stack.push_back(v);
  }
  VertexSet core = g.vertices();
  while (!stack.empty()) {
    const int v = stack.back();
    stack.pop_back();
    core &= ~vbit(v);
    for (VertexSet m = g.neighbors(v) & core; m; m &= m - 1) {
      const int u = first_vertex(m);
      if (--deg[static_cast<std::size_t>(u)] == 1) stack.push_back(u);
    }
  }

  UnicyclicDecomposition dec;
  dec.cycle = cycle_order(g, core);
  for (int v : dec.cycle) {
    VertexSet forest = 0;
    VertexSet frontier = g.neighbors(v) & ~core;
    while (frontier) {
      forest |= frontier;
      VertexSet next = 0;
      for (VertexSet m = frontier; m; m &= m - 1) next |= g.neighbors(first_vertex(m));
      frontier = next & ~core & ~forest;
    }
    dec.forest_of.push_back(forest);
    dec.m.push_back(set_size(forest));
    dec.m_max = std::max(dec.m_max, set_size(forest));
  }
  return dec;
}

bool book_check(const Graph& g) {
  const int n = g.order();
  int hub = -1;
  for (int v = 0; v < n && hub < 0; ++v)
    if (g.degree(v) == n - 1) hub = v;
  if (hub < 0) return false;
  int endpoints = 0;
  for (int u = 0; u < n; ++u) {
    if (u == hub) continue;
    const int others = set_size(g.neighbors(u) & ~vbit(hub));
    if (others > 1) return false;  // leaf edges would share a vertex
    endpoints += others;
  }
  return endpoints / 2 >= 2;
}

}  // namespace

FamilyClassification classify(const Graph& g) {
  FamilyClassification out;
  const int n = g.order();
  out.connected = is_connected(g);
  out.contains_c4_subgraph = n >= 4 && contains_krs(g, 2, 2).has_value();
  if (!out.connected) return out;

  const int m = g.edge_count();
  if (m == n - 1) {
    out.family = Family::Tree;
    out.is_star = g.max_degree() == n - 1;
    return out;
  }
  if (m == n) {
    out.family = Family::Unicyclic;
    out.unicyclic = unicyclic_decomposition(g);
    return out;
  }

  bool cactus = true;
  std::vector<VertexSet> cycles;
  for (VertexSet block : blocks(g).blocks) {
    if (set_size(block) == 2) continue;
    if (block_is_cycle(g, block)) {
      cycles.push_back(block);
    } else {
      cactus = false;
      break;
    }
  }
  if (cactus) {
    out.family = Family::Cactus;
    out.cycle_blocks = std::move(cycles);
    out.is_book = book_check(g);
    return out;
  }
  if (is_bipartite(g) && !out.contains_c4_subgraph) {
    out.family = Family::BipartiteK22Free;
    return out;
  }
  return out;  // Other
}

std::vector<C4Context> c4_contexts(const Graph& g, const FamilyClassification& cls) {
  std::vector<VertexSet> quads;
  if (cls.family == Family::Unicyclic) {
    if (cls.unicyclic->girth() == 4) {
      VertexSet b = 0;
      for (int v : cls.unicyclic->cycle) b |= vbit(v);
      quads.push_back(b);
    }
  } else if (cls.family == Family::Cactus) {
    for (VertexSet block : cls.cycle_blocks)
      if (set_size(block) == 4) quads.push_back(block);
  } else {
    throw std::invalid_argument("c4_contexts: graph must classify Unicyclic or Cactus");
  }

  std::vector<C4Context> out;
  for (VertexSet block : quads) {
    C4Context ctx;
    const std::vector<int> cyc = cycle_order(g, block);
    for (int i = 0; i < 4; ++i) {
      ctx.cycle[static_cast<std::size_t>(i)] = cyc[static_cast<std::size_t>(i)];
      ctx.off_cycle_neighbors[static_cast<std::size_t>(i)] = g.neighbors(cyc[static_cast<std::size_t>(i)]) & ~block;
      if (g.degree(cyc[static_cast<std::size_t>(i)]) == 2) ++ctx.degree2_count;
    }
    for (int i = 0; i < 4; ++i)
      if (ctx.off_cycle_neighbors[static_cast<std::size_t>(i)] &&
          ctx.off_cycle_neighbors[static_cast<std::size_t>((i + 1) % 4)])
        ctx.adjacent_attached_pair = true;
    out.push_back(ctx);
  }
  return out;
}

std::vector<C4Context> c4_contexts(const Graph& g) { return c4_contexts(g, classify(g)); }

bool is_cactus_structure(const Graph& g) {
  if (!is_connected(g)) return false;
  for (VertexSet block : blocks(g).blocks)
    if (set_size(block) > 2 && !block_is_cycle(g, block)) return false;
  return true;
}

namespace {

std::vector<VertexSet> components_within(const Graph& g, VertexSet sub) {
  std::vector<VertexSet> parts;
  VertexSet seen = 0;
  for (VertexSet m = sub; m; m &= m - 1) {
    const int v = first_vertex(m);
    if (seen & vbit(v)) continue;
    VertexSet comp = vbit(v);
    VertexSet frontier = comp;
    while (frontier) {
      VertexSet next = 0;
      for (VertexSet f = frontier; f; f &= f - 1) next |= g.neighbors(first_vertex(f));
      frontier = next & sub & ~comp;
      comp |= frontier;
    }
    parts.push_back(comp);
    seen |= comp;
  }
  return parts;
}

}  // namespace

bool cactus_observations_check(const Graph& g) {
  const BlockDecomposition dec = blocks(g);
  std::vector<VertexSet> cycles;
  for (VertexSet block : dec.blocks)
    if (set_size(block) > 2) cycles.push_back(block);

  VertexSet on_cycles = 0;
  for (VertexSet c : cycles) on_cycles |= c;
  const VertexSet tree_verts = g.vertices() & ~on_cycles;

  // (a) at most one fully-distinct edge between any two cycles
  for (std::size_t a = 0; a < cycles.size(); ++a)
    for (std::size_t b = a + 1; b < cycles.size(); ++b) {
      std::vector<std::pair<int, int>> cross;
      for (VertexSet m = cycles[a] & ~cycles[b]; m; m &= m - 1) {
        const int v = first_vertex(m);
        for (VertexSet w = g.neighbors(v) & cycles[b] & ~cycles[a]; w; w &= w - 1)
          cross.emplace_back(v, first_vertex(w));
      }
      for (std::size_t i = 0; i < cross.size(); ++i)
        for (std::size_t j = i + 1; j < cross.size(); ++j)
          if (cross[i].first != cross[j].first && cross[i].second != cross[j].second)
            return false;
    }

  // (b) a cycle vertex sees at most one vertex of any cycle it is not on
  for (VertexSet m = on_cycles; m; m &= m - 1) {
    const int v = first_vertex(m);
    for (VertexSet c : cycles) {
      if (c & vbit(v)) continue;
      if (set_size(g.neighbors(v) & c) > 1) return false;
    }
  }

  // (c) two vertices of one cycle never share a neighbor in the trees
  for (VertexSet c : cycles) {
    const std::vector<int> verts = set_vertices(c);
    for (std::size_t i = 0; i < verts.size(); ++i)
      for (std::size_t j = i + 1; j < verts.size(); ++j)
        if (g.neighbors(verts[i]) & g.neighbors(verts[j]) & tree_verts) return false;
  }

  // (d) a cycle vertex sends at most one edge into any hanging tree
  for (VertexSet m = on_cycles; m; m &= m - 1) {
    const int v = first_vertex(m);
    for (VertexSet comp : components_within(g, g.vertices() & ~vbit(v))) {
      if (comp & on_cycles) continue;
      if (set_size(g.neighbors(v) & comp) > 1) return false;
    }
  }
  return true;
}

}  // namespace zf
