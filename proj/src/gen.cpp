#include "zf/gen.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <stdexcept>
#include <string>
#include <unordered_set>

namespace zf {

namespace {

Graph path_graph(int n) {
  Graph g(n);
  for (int v = 0; v + 1 < n; ++v) g.add_edge(v, v + 1);
  return g;
}

Graph cycle_graph(int n) {
  if (n < 3) throw std::invalid_argument("cycle: needs n >= 3");
  Graph g = path_graph(n);
  g.add_edge(n - 1, 0);
  return g;
}

Graph star_graph(int n) {
  Graph g(n);
  for (int v = 1; v < n; ++v) g.add_edge(0, v);
  return g;
}

Graph complete_graph(int n) {
  Graph g(n);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) g.add_edge(u, v);
  return g;
}

Graph star_plus_edge(int n) {
  if (n < 3) throw std::invalid_argument("star_plus_edge: needs n >= 3");
  Graph g = star_graph(n);
  g.add_edge(1, 2);
  return g;
}

Graph sunlet_graph(int base) {
  if (base < 3) throw std::invalid_argument("sunlet: base cycle needs n >= 3");
  if (2 * base > kMaxVertices) throw std::invalid_argument("sunlet: 2n exceeds 64 vertices");
  Graph g(2 * base);
  for (int v = 0; v < base; ++v) {
    g.add_edge(v, (v + 1) % base);
    g.add_edge(v, base + v);
  }
  return g;
}

Graph book_graph(int n, int pages) {
  if (pages < 2) throw std::invalid_argument("book: needs at least 2 pages");
  if (n < 2 * pages + 1) throw std::invalid_argument("book: needs n >= 2*pages + 1");
  Graph g = star_graph(n);
  for (int p = 0; p < pages; ++p) g.add_edge(2 * p + 1, 2 * p + 2);
  return g;
}

Graph tree_from_pruefer(int n, const std::vector<int>& seq) {
  if (n == 1) return Graph(1);
  Graph g(n);
  if (n == 2) {
    g.add_edge(0, 1);
    return g;
  }
  std::vector<int> deg(static_cast<std::size_t>(n), 1);
  for (int v : seq) ++deg[static_cast<std::size_t>(v)];
  // classic decode: repeatedly join the smallest leaf to the next entry
  VertexSet leaves = 0;
  for (int v = 0; v < n; ++v)
    if (deg[static_cast<std::size_t>(v)] == 1) leaves |= vbit(v);
  for (int v : seq) {
    const int leaf = first_vertex(leaves);
    leaves &= leaves - 1;
    g.add_edge(leaf, v);
    if (--deg[static_cast<std::size_t>(v)] == 1) leaves |= vbit(v);
  }
  const int a = first_vertex(leaves);
  leaves &= leaves - 1;
  g.add_edge(a, first_vertex(leaves));
  return g;
}

Graph random_tree(int n, SplitMix64& rng) {
  if (n <= 2) return tree_from_pruefer(n, {});
  std::vector<int> seq(static_cast<std::size_t>(n) - 2);
  for (int& x : seq) x = static_cast<int>(rng.below(static_cast<std::uint64_t>(n)));
  return tree_from_pruefer(n, seq);
}

std::vector<std::pair<int, int>> non_edges(const Graph& g) {
  std::vector<std::pair<int, int>> out;
  for (int u = 0; u < g.order(); ++u)
    for (int v = u + 1; v < g.order(); ++v)
      if (!g.adjacent(u, v)) out.emplace_back(u, v);
  return out;
}

int cycle_length_of_unicyclic(const Graph& g) {
  // peel to the 2-core
  std::vector<int> deg(static_cast<std::size_t>(g.order()));
  std::vector<int> stack;
  for (int v = 0; v < g.order(); ++v) {
    deg[static_cast<std::size_t>(v)] = g.degree(v);
    if (deg[static_cast<std::size_t>(v)] <= 1) stack.push_back(v);
  }
  VertexSet core = g.vertices();
  while (!stack.empty()) {
    const int v = stack.back();
    stack.pop_back();
    core &= ~vbit(v);
    for (VertexSet m = g.neighbors(v) & core; m; m &= m - 1)
      if (--deg[static_cast<std::size_t>(first_vertex(m))] == 1) stack.push_back(first_vertex(m));
  }
  return set_size(core);
}

Graph random_unicyclic(int n, int girth, SplitMix64& rng) {
  if (n < 3) throw std::invalid_argument("random_unicyclic: needs n >= 3");
  if (girth && (girth < 3 || girth > n))
    throw std::invalid_argument("random_unicyclic: girth must be in 3..n");
  for (int attempt = 0; attempt < 100000; ++attempt) {
    Graph t = random_tree(n, rng);
    const auto missing = non_edges(t);
    const auto [u, v] = missing[rng.below(missing.size())];
    Graph g = t;
    g.add_edge(u, v);
    if (!girth || cycle_length_of_unicyclic(g) == girth) return g;
  }
  throw std::runtime_error("random_unicyclic: girth target not hit after 100000 attempts");
}

Graph random_graph(int n, double p, SplitMix64& rng) {
  Graph g(n);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (rng.unit() < p) g.add_edge(u, v);
  return g;
}

}  // namespace

Graph random_cactus(int n, std::uint64_t seed, double cycle_bias) {
  if (n < 3) throw std::invalid_argument("random_cactus: needs n >= 3");
  if (n > kMaxVertices) throw std::invalid_argument("random_cactus: n exceeds 64");
  SplitMix64 rng(seed);
  Graph g(n);
  int count = 1;
  bool first = true;
  while (count < n) {
    const int at = static_cast<int>(rng.below(static_cast<std::uint64_t>(count)));
    const int room = n - count;
    const bool grow_cycle = room >= 2 && (first || rng.unit() < cycle_bias);
    if (grow_cycle) {
      const int max_len = std::min(6, room + 1);
      const int len = 3 + static_cast<int>(rng.below(static_cast<std::uint64_t>(max_len - 2)));
      int prev = at;
      for (int i = 0; i < len - 1; ++i) {
        g.add_edge(prev, count);
        prev = count++;
      }
      g.add_edge(prev, at);
    } else {
      g.add_edge(at, count++);
    }
    first = false;
  }
  return g;
}

Graph generate(const GenSpec& spec) {
  SplitMix64 rng(spec.seed);
  switch (spec.family) {
    case GenFamily::Path: return path_graph(spec.n);
    case GenFamily::Cycle: return cycle_graph(spec.n);
    case GenFamily::Star: return star_graph(spec.n);
    case GenFamily::Complete: return complete_graph(spec.n);
    case GenFamily::StarPlusEdge: return star_plus_edge(spec.n);
    case GenFamily::Sunlet: return sunlet_graph(spec.n);
    case GenFamily::Book: return book_graph(spec.n, spec.pages);
    case GenFamily::RandomTree: return random_tree(spec.n, rng);
    case GenFamily::RandomUnicyclic: return random_unicyclic(spec.n, spec.girth, rng);
    case GenFamily::RandomCactus: return random_cactus(spec.n, spec.seed, spec.cycle_bias);
    case GenFamily::RandomGraph: return random_graph(spec.n, spec.edge_prob, rng);
  }
  throw std::invalid_argument("generate: unknown family");
}

std::uint64_t tree_count(int n) {
  if (n <= 2) return 1;
  std::uint64_t c = 1;
  for (int i = 0; i < n - 2; ++i) c *= static_cast<std::uint64_t>(n);
  return c;
}

Graph tree_from_index(int n, std::uint64_t index) {
  if (n <= 2) return tree_from_pruefer(n, {});
  std::vector<int> seq(static_cast<std::size_t>(n) - 2);
  for (int i = 0; i < n - 2; ++i) {
    seq[static_cast<std::size_t>(i)] = static_cast<int>(index % static_cast<std::uint64_t>(n));
    index /= static_cast<std::uint64_t>(n);
  }
  return tree_from_pruefer(n, seq);
}

void enumerate_trees(int n, const std::function<void(const Graph&)>& fn) {
  if (n > 9)
    throw std::runtime_error("enumerate_trees: budget is n <= 9 (n^(n-2) labeled trees)");
  const std::uint64_t total = tree_count(n);
  for (std::uint64_t i = 0; i < total; ++i) fn(tree_from_index(n, i));
}

const std::vector<std::uint64_t>& unicyclic_edge_masks(int n) {
  if (n < 3 || n > 8)
    throw std::runtime_error("unicyclic_edge_masks: budget is 3 <= n <= 8");
  static std::map<int, std::vector<std::uint64_t>> cache;
  static std::mutex mu;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(n);
  if (it != cache.end()) return it->second;

  std::unordered_set<std::uint64_t> seen;
  const std::uint64_t total = tree_count(n);
  for (std::uint64_t i = 0; i < total; ++i) {
    const Graph t = tree_from_index(n, i);
    const std::uint64_t base = mask_from_graph(t);
    for (int u = 0; u < n; ++u)
      for (int v = u + 1; v < n; ++v)
        if (!t.adjacent(u, v)) seen.insert(base | std::uint64_t{1} << edge_bit(u, v));
  }
  std::vector<std::uint64_t> masks(seen.begin(), seen.end());
  std::sort(masks.begin(), masks.end());
  return cache.emplace(n, std::move(masks)).first->second;
}

std::uint64_t all_graph_count(int n) {
  return std::uint64_t{1} << (static_cast<unsigned>(n) * (n - 1) / 2);
}

void enumerate_all_graphs(int n, const std::function<void(const Graph&)>& fn) {
  if (n > 7)
    throw std::runtime_error("enumerate_all_graphs: budget is n <= 7 (2^C(n,2) graphs)");
  const std::uint64_t total = all_graph_count(n);
  for (std::uint64_t mask = 0; mask < total; ++mask) fn(graph_from_mask(n, mask));
}

void enumerate_connected_graphs(int n, const std::function<void(const Graph&)>& fn) {
  enumerate_all_graphs(n, [&](const Graph& g) {
    if (is_connected(g)) fn(g);
  });
}

void enumerate_family(std::string_view family, int n, const std::function<void(const Graph&)>& fn) {
  if (family == "trees") {
    enumerate_trees(n, fn);
  } else if (family == "unicyclic") {
    for (std::uint64_t mask : unicyclic_edge_masks(n)) fn(graph_from_mask(n, mask));
  } else if (family == "all_graphs") {
    enumerate_all_graphs(n, fn);
  } else if (family == "connected_graphs") {
    enumerate_connected_graphs(n, fn);
  } else {
    throw std::invalid_argument("enumerate_family: unknown family '" + std::string(family) +
                                "' (want trees|unicyclic|all_graphs|connected_graphs)");
  }
}

}  // namespace zf
