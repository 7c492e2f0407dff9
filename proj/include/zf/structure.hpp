#pragma once

#include <array>
#include <optional>
#include <string_view>
#include <vector>

#include "zf/graph.hpp"

namespace zf {

// Complete bipartite subgraph witness: sides are disjoint and every cross
// pair is an edge (subgraph containment, sides need not be independent).
struct KrsWitness {
  VertexSet r_side = 0;
  VertexSet s_side = 0;
};

/// Search for K_{r,s} as a subgraph. Requires r <= s and r + s <= n.
std::optional<KrsWitness> contains_krs(const Graph& g, int r, int s);

// Best value of n - r - s + 1 over all (r, s) with r <= s, r + s <= n and
// no K_{r,s} subgraph present; found by scanning t = r + s upward. When
// every admissible K_{r,s} occurs the bound degenerates to 1 with the
// sentinel pair (0, 0).
struct KrsBound {
  int bound = 1;
  int r = 0;
  int s = 0;
};

KrsBound krs_free_bound(const Graph& g);

/// Induced-subgraph containment test for fixed small patterns.
bool contains_induced(const Graph& g, const Graph& pattern);

// The five minimal graphs whose presence as an induced subgraph is
// equivalent to Z(G) < |G| - 2. Edge lists were frozen from an exhaustive
// minimal-obstruction enumeration against the exact solver (the test suite
// re-derives them); the two unnamed shapes come out as the cricket
// (triangle plus two pendants at one vertex) and the dart (diamond plus a
// pendant at a degree-3 vertex).
const std::array<Graph, 5>& forbidden_patterns();
std::array<std::string_view, 5> forbidden_pattern_names();

/// True iff none of the five patterns occurs as an induced subgraph;
/// equivalently Z(g) >= n - 2. Requires n >= 3.
bool forbidden_induced_test(const Graph& g);

enum class Family { Tree, Unicyclic, Cactus, BipartiteK22Free, Other };

std::string_view family_name(Family f);

// Labeling of the unique cycle and its hanging forests. forest_of[i] is
// the vertex set that reaches cycle[i] without touching the cycle,
// excluding cycle[i] itself; m[i] its size.
struct UnicyclicDecomposition {
  std::vector<int> cycle;  // least vertex first, then its least cycle neighbor
  std::vector<VertexSet> forest_of;
  std::vector<int> m;
  int m_max = 0;

  int girth() const { return static_cast<int>(cycle.size()); }
};

// A 4-cycle block together with the attachment data the complement rules
// branch on.
struct C4Context {
  std::array<int, 4> cycle{};  // cyclic order
  std::array<VertexSet, 4> off_cycle_neighbors{};
  int degree2_count = 0;            // cycle vertices of graph degree exactly 2
  bool adjacent_attached_pair = false;  // two adjacent cycle vertices both with off-cycle neighbors
};

// Families are mutually exclusive with precedence
// Tree > Unicyclic > Cactus > BipartiteK22Free > Other (a tree is
// vacuously a cactus; the precedence makes classification a function).
struct FamilyClassification {
  Family family = Family::Other;
  bool connected = false;
  bool contains_c4_subgraph = false;
  bool is_star = false;                                 // Tree
  std::optional<UnicyclicDecomposition> unicyclic;      // Unicyclic
  std::vector<VertexSet> cycle_blocks;                  // Cactus
  bool is_book = false;                                 // Cactus
};

FamilyClassification classify(const Graph& g);

/// One context per 4-cycle block (a unicyclic graph has at most one).
/// Requires g classified Unicyclic or Cactus.
std::vector<C4Context> c4_contexts(const Graph& g);
std::vector<C4Context> c4_contexts(const Graph& g, const FamilyClassification& cls);

/// Structural sanity oracle: the four adjacency consequences that hold in
/// every cactus (cross-cycle edges are unique, a cycle vertex sees at most
/// one vertex of any other cycle, and hanging trees attach at one vertex
/// by one edge).
bool cactus_observations_check(const Graph& g);

bool is_bipartite(const Graph& g);

/// Every block is an edge or a cycle (trees and unicyclic graphs count).
bool is_cactus_structure(const Graph& g);

}  // namespace zf
