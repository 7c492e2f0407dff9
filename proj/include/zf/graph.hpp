#pragma once

#include <bit>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace zf {

// Vertices are dense ints 0..n-1 and a VertexSet packs them into one
// machine word, which is why the library caps graphs at 64 vertices.
using VertexSet = std::uint64_t;

constexpr int kMaxVertices = 64;

constexpr VertexSet vbit(int v) { return VertexSet{1} << v; }

constexpr VertexSet full_set(int n) {
  return n >= 64 ? ~VertexSet{0} : (VertexSet{1} << n) - 1;
}

inline int set_size(VertexSet s) { return std::popcount(s); }

inline int first_vertex(VertexSet s) { return std::countr_zero(s); }

inline bool is_singleton(VertexSet s) { return s != 0 && (s & (s - 1)) == 0; }

/// Vertices of a set in ascending order.
std::vector<int> set_vertices(VertexSet s);

/// Raised by parse_graph6; byte_offset() points at the offending byte.
class graph6_error : public std::runtime_error {
 public:
  graph6_error(const std::string& msg, std::size_t offset)
      : std::runtime_error(msg + " (byte offset " + std::to_string(offset) + ")"),
        offset_(offset) {}
  std::size_t byte_offset() const { return offset_; }

 private:
  std::size_t offset_;
};

// Simple undirected graph, one adjacency bit row per vertex. Treated as
// immutable once built: every operation below returns a new value, so
// graphs can be shared freely across threads.
class Graph {
 public:
  explicit Graph(int n);

  static Graph from_edges(int n, const std::vector<std::pair<int, int>>& edges);

  int order() const { return n_; }
  int edge_count() const;
  VertexSet vertices() const { return full_set(n_); }

  bool adjacent(int u, int v) const { return (adj_[u] >> v) & 1; }
  VertexSet neighbors(int v) const { return adj_[v]; }
  int degree(int v) const { return set_size(adj_[v]); }
  int min_degree() const;
  int max_degree() const;

  void add_edge(int u, int v);

  Graph complement() const;

  /// Subgraph induced by s; vertices relabeled 0..|s|-1 in ascending
  /// original order.
  Graph induced(VertexSet s) const;

  bool operator==(const Graph&) const = default;

 private:
  int n_;
  std::vector<VertexSet> adj_;
};

/// Connected components as vertex sets, ordered by least vertex.
std::vector<VertexSet> components(const Graph& g);

bool is_connected(const Graph& g);

struct BlockDecomposition {
  std::vector<VertexSet> blocks;  // each a maximal 2-connected subgraph or a bridge edge
  VertexSet cut_vertices = 0;
};

/// Biconnected components of a connected graph (Hopcroft-Tarjan). Every
/// edge lies in exactly one block; K1 has no blocks.
BlockDecomposition blocks(const Graph& g);

/// Decode one graph6 line (optionally prefixed ">>graph6<<"). Only
/// graphs on 1..64 vertices are accepted.
Graph parse_graph6(std::string_view text);

/// Canonical graph6 encoding: short size byte for n <= 62, '~'-prefixed
/// long form above, upper-triangle column-major edge bits.
std::string to_graph6(const Graph& g);

// Upper-triangle edge bit layout shared by the small-graph enumerators;
// same bit order as graph6, usable while C(n,2) <= 64 (n <= 11).
constexpr int edge_bit(int i, int j) {  // requires i < j
  return j * (j - 1) / 2 + i;
}

Graph graph_from_mask(int n, std::uint64_t mask);
std::uint64_t mask_from_graph(const Graph& g);

}  // namespace zf
