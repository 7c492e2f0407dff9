#include "zf/graph.hpp"

#include <algorithm>

namespace zf {

std::vector<int> set_vertices(VertexSet s) {
  std::vector<int> out;
  out.reserve(set_size(s));
  for (VertexSet m = s; m; m &= m - 1) out.push_back(first_vertex(m));
  return out;
}

Graph::Graph(int n) : n_(n), adj_(static_cast<std::size_t>(n), 0) {
  if (n < 1 || n > kMaxVertices)
    throw std::invalid_argument("Graph: order must be in 1..64, got " + std::to_string(n));
}

Graph Graph::from_edges(int n, const std::vector<std::pair<int, int>>& edges) {
  Graph g(n);
  for (auto [u, v] : edges) g.add_edge(u, v);
  return g;
}

void Graph::add_edge(int u, int v) {
  if (u < 0 || v < 0 || u >= n_ || v >= n_)
    throw std::invalid_argument("add_edge: vertex out of range");
  if (u == v) throw std::invalid_argument("add_edge: loops not allowed");
  adj_[u] |= vbit(v);
  adj_[v] |= vbit(u);
}

int Graph::edge_count() const {
  int twice = 0;
  for (int v = 0; v < n_; ++v) twice += degree(v);
  return twice / 2;
}

int Graph::min_degree() const {
  int d = n_;
  for (int v = 0; v < n_; ++v) d = std::min(d, degree(v));
  return d;
}

int Graph::max_degree() const {
  int d = 0;
  for (int v = 0; v < n_; ++v) d = std::max(d, degree(v));
  return d;
}

Graph Graph::complement() const {
  Graph h(n_);
  const VertexSet all = vertices();
  for (int v = 0; v < n_; ++v) h.adj_[v] = all & ~(adj_[v] | vbit(v));
  return h;
}

Graph Graph::induced(VertexSet s) const {
  if (!s) throw std::invalid_argument("induced: vertex set is empty");
  if (s & ~vertices()) throw std::invalid_argument("induced: vertex out of range");
  const std::vector<int> verts = set_vertices(s);
  Graph h(static_cast<int>(verts.size()));
  for (std::size_t a = 0; a < verts.size(); ++a)
    for (std::size_t b = a + 1; b < verts.size(); ++b)
      if (adjacent(verts[a], verts[b])) h.add_edge(static_cast<int>(a), static_cast<int>(b));
  return h;
}

std::vector<VertexSet> components(const Graph& g) {
  std::vector<VertexSet> parts;
  VertexSet seen = 0;
  for (int v = 0; v < g.order(); ++v) {
    if (seen & vbit(v)) continue;
    VertexSet comp = vbit(v);
    VertexSet frontier = comp;
    while (frontier) {
      VertexSet next = 0;
      for (VertexSet m = frontier; m; m &= m - 1) next |= g.neighbors(first_vertex(m));
      frontier = next & ~comp;
      comp |= frontier;
    }
    parts.push_back(comp);
    seen |= comp;
  }
  return parts;
}

bool is_connected(const Graph& g) {
  VertexSet comp = vbit(0);
  VertexSet frontier = comp;
  while (frontier) {
    VertexSet next = 0;
    for (VertexSet m = frontier; m; m &= m - 1) next |= g.neighbors(first_vertex(m));
    frontier = next & ~comp;
    comp |= frontier;
  }
  return comp == g.vertices();
}

namespace {

struct BlockDfs {
  const Graph& g;
  BlockDecomposition& out;
  std::vector<int> disc, low;
  std::vector<std::pair<int, int>> estack;
  int timer = 0;

  BlockDfs(const Graph& graph, BlockDecomposition& dec)
      : g(graph), out(dec), disc(graph.order(), -1), low(graph.order(), 0) {}

  void run(int u, int parent) {
    disc[u] = low[u] = timer++;
    int children = 0;
    for (VertexSet m = g.neighbors(u); m; m &= m - 1) {
      int v = first_vertex(m);
      if (v == parent) continue;
      if (disc[v] == -1) {
        estack.emplace_back(u, v);
        ++children;
        run(v, u);
        low[u] = std::min(low[u], low[v]);
        if ((parent != -1 && low[v] >= disc[u]) || (parent == -1 && children > 1))
          out.cut_vertices |= vbit(u);
        if (low[v] >= disc[u]) {
          VertexSet block = 0;
          for (;;) {
            auto [a, b] = estack.back();
            estack.pop_back();
            block |= vbit(a) | vbit(b);
            if (a == u && b == v) break;
          }
          out.blocks.push_back(block);
        }
      } else if (disc[v] < disc[u]) {
        estack.emplace_back(u, v);
        low[u] = std::min(low[u], disc[v]);
      }
    }
  }
};

}  // namespace

BlockDecomposition blocks(const Graph& g) {
  if (!is_connected(g))
    throw std::invalid_argument("blocks: graph must be connected; split by components first");
  BlockDecomposition out;
  if (g.order() == 1) return out;
  BlockDfs dfs(g, out);
  dfs.run(0, -1);
  return out;
}

namespace {

int g6_byte(std::string_view text, std::size_t i) {
  const unsigned char c = static_cast<unsigned char>(text[i]);
  if (c < 63 || c > 126) throw graph6_error("byte outside graph6 alphabet", i);
  return c - 63;
}

}  // namespace

Graph parse_graph6(std::string_view text) {
  constexpr std::string_view kHeader = ">>graph6<<";
  if (text.substr(0, kHeader.size()) == kHeader) text.remove_prefix(kHeader.size());
  if (text.empty()) throw graph6_error("empty graph6 string", 0);

  long n = 0;
  std::size_t pos = 0;
  if (text[0] == '~') {
    if (text.size() > 1 && text[1] == '~')
      throw graph6_error("graph order exceeds 64", 1);  // 8-byte size form starts at 258048
    if (text.size() < 4) throw graph6_error("truncated size header", text.size());
    n = static_cast<long>(g6_byte(text, 1)) << 12 | g6_byte(text, 2) << 6 | g6_byte(text, 3);
    pos = 4;
  } else {
    n = g6_byte(text, 0);
    pos = 1;
  }
  if (n == 0) throw graph6_error("empty graph (n = 0) not supported", 0);
  if (n > kMaxVertices) throw graph6_error("graph order exceeds 64", 0);

  const std::size_t nbits = static_cast<std::size_t>(n) * (n - 1) / 2;
  const std::size_t nbytes = (nbits + 5) / 6;
  if (text.size() < pos + nbytes) throw graph6_error("truncated edge data", text.size());
  if (text.size() > pos + nbytes) throw graph6_error("trailing bytes after edge data", pos + nbytes);

  Graph g(static_cast<int>(n));
  std::size_t k = 0;
  for (int j = 1; j < n; ++j)
    for (int i = 0; i < j; ++i, ++k)
      if (g6_byte(text, pos + k / 6) >> (5 - k % 6) & 1) g.add_edge(i, j);
  for (std::size_t b = nbits; b < nbytes * 6; ++b)
    if (g6_byte(text, pos + b / 6) >> (5 - b % 6) & 1)
      throw graph6_error("nonzero padding bits", pos + b / 6);
  return g;
}

std::string to_graph6(const Graph& g) {
  const int n = g.order();
  std::string out;
  if (n <= 62) {
    out.push_back(static_cast<char>(n + 63));
  } else {
    out.push_back('~');
    out.push_back(static_cast<char>(63 + (n >> 12 & 63)));
    out.push_back(static_cast<char>(63 + (n >> 6 & 63)));
    out.push_back(static_cast<char>(63 + (n & 63)));
  }
  int acc = 0, nbits = 0;
  for (int j = 1; j < n; ++j)
    for (int i = 0; i < j; ++i) {
      acc = acc << 1 | (g.adjacent(i, j) ? 1 : 0);
      if (++nbits == 6) {
        out.push_back(static_cast<char>(acc + 63));
        acc = nbits = 0;
      }
    }
  if (nbits) out.push_back(static_cast<char>((acc << (6 - nbits)) + 63));
  return out;
}

Graph graph_from_mask(int n, std::uint64_t mask) {
  Graph g(n);
  for (int j = 1; j < n; ++j)
    for (int i = 0; i < j; ++i)
      if (mask >> edge_bit(i, j) & 1) g.add_edge(i, j);
  return g;
}

std::uint64_t mask_from_graph(const Graph& g) {
  const int n = g.order();
  if (n > 11) throw std::invalid_argument("mask_from_graph: needs C(n,2) <= 64");
  std::uint64_t mask = 0;
  for (int j = 1; j < n; ++j)
    for (int i = 0; i < j; ++i)
      if (g.adjacent(i, j)) mask |= std::uint64_t{1} << edge_bit(i, j);
  return mask;
}

}  // namespace zf
