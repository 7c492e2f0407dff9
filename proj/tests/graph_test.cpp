#include <algorithm>

#include "doctest.h"
#include "zf/gen.hpp"
#include "zf/graph.hpp"

using namespace zf;

namespace {

Graph random_graph_for_test(int n, double p, std::uint64_t seed) {
  SplitMix64 rng(seed);
  Graph g(n);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (rng.unit() < p) g.add_edge(u, v);
  return g;
}

}  // namespace

TEST_CASE("graph6 decodes the reference strings") {
  const Graph k4 = parse_graph6("C~");
  CHECK(k4.order() == 4);
  CHECK(k4.edge_count() == 6);

  const Graph single = parse_graph6("@");
  CHECK(single.order() == 1);
  CHECK(single.edge_count() == 0);

  const Graph g = parse_graph6("DQc");
  CHECK(g.order() == 5);
  CHECK(g.edge_count() == 4);
  CHECK(g.adjacent(0, 2));
  CHECK(g.adjacent(0, 4));
  CHECK(g.adjacent(1, 3));
  CHECK(g.adjacent(3, 4));
  CHECK(to_graph6(g) == "DQc");

  CHECK(parse_graph6(">>graph6<<C~") == k4);
}

TEST_CASE("graph6 rejects malformed input with byte offsets") {
  CHECK_THROWS_AS(parse_graph6(""), graph6_error);
  CHECK_THROWS_AS(parse_graph6("?"), graph6_error);       // n = 0
  CHECK_THROWS_AS(parse_graph6("C~~"), graph6_error);     // trailing bytes
  CHECK_THROWS_AS(parse_graph6("D"), graph6_error);       // truncated edge data
  CHECK_THROWS_AS(parse_graph6("~~????"), graph6_error);  // 8-byte size form, n too large
  CHECK_THROWS_AS(parse_graph6("C\x05"), graph6_error);   // byte below alphabet

  // n = 65 in the long size form
  std::string too_big = "~";
  too_big += static_cast<char>(63);
  too_big += static_cast<char>(63 + 1);
  too_big += static_cast<char>(63 + 1);
  CHECK_THROWS_AS(parse_graph6(too_big), graph6_error);

  try {
    parse_graph6("C\x05");
    CHECK(false);
  } catch (const graph6_error& e) {
    CHECK(e.byte_offset() == 1);
    CHECK(std::string(e.what()).find("offset") != std::string::npos);
  }

  // nonzero padding: K2 is "A_" (bits 10 + 0000); "A~" has padding bits set
  CHECK(parse_graph6("A_").edge_count() == 1);
  CHECK_THROWS_AS(parse_graph6("A~"), graph6_error);
}

TEST_CASE("graph6 round-trips random graphs including the long size form") {
  for (int n : {1, 2, 5, 13, 32, 61, 62, 63, 64}) {
    for (std::uint64_t seed = 0; seed < 4; ++seed) {
      const Graph g = random_graph_for_test(n, 0.4, seed * 977 + static_cast<std::uint64_t>(n));
      const std::string enc = to_graph6(g);
      CHECK(parse_graph6(enc) == g);
      if (n <= 62)
        CHECK(enc.size() == 1 + (static_cast<std::size_t>(n) * (n - 1) / 2 + 5) / 6);
      else
        CHECK(enc[0] == '~');
    }
  }
  CHECK(to_graph6(Graph(63)).substr(0, 4) == "~??~");
  CHECK(to_graph6(Graph(64)).substr(0, 4) == "~?@?");
}

TEST_CASE("complement matches the known small cases") {
  // K_{1,3} -> K3 plus an isolated vertex
  const Graph star = Graph::from_edges(4, {{0, 1}, {0, 2}, {0, 3}});
  const Graph comp = star.complement();
  CHECK(comp.edge_count() == 3);
  CHECK(comp.degree(0) == 0);
  const auto parts = components(comp);
  REQUIRE(parts.size() == 2);
  CHECK(parts[0] == vbit(0));
  CHECK(parts[1] == (full_set(4) & ~vbit(0)));

  const Graph edgeless(5);
  CHECK(edgeless.complement().edge_count() == 10);

  // C5 is self-complementary: the complement is again connected 2-regular
  const Graph c5 = generate({GenFamily::Cycle, 5});
  const Graph c5c = c5.complement();
  CHECK(c5c.edge_count() == 5);
  CHECK(c5c.min_degree() == 2);
  CHECK(c5c.max_degree() == 2);
  CHECK(is_connected(c5c));
}

TEST_CASE("complement is an involution and flips degrees") {
  for (int n = 1; n <= 5; ++n) {
    const std::uint64_t total = all_graph_count(n);
    for (std::uint64_t mask = 0; mask < total; ++mask) {
      const Graph g = graph_from_mask(n, mask);
      CHECK(g.complement().complement() == g);
    }
  }
  for (int n : {7, 8}) {
    for (std::uint64_t seed = 0; seed < 500; ++seed) {
      const Graph g = random_graph_for_test(n, 0.5, seed);
      CHECK(g.complement().complement() == g);
      const Graph c = g.complement();
      for (int v = 0; v < n; ++v) CHECK(c.degree(v) == n - 1 - g.degree(v));
    }
  }
}

TEST_CASE("induced subgraphs relabel in ascending order") {
  const Graph c5 = generate({GenFamily::Cycle, 5});
  const Graph p4 = c5.induced(vbit(0) | vbit(1) | vbit(2) | vbit(3));
  CHECK(p4 == Graph::from_edges(4, {{0, 1}, {1, 2}, {2, 3}}));

  CHECK(c5.induced(c5.vertices()) == c5);

  const Graph paw = Graph::from_edges(4, {{0, 1}, {1, 2}, {2, 0}, {0, 3}});
  const Graph k3 = paw.induced(vbit(0) | vbit(1) | vbit(2));
  CHECK(k3 == Graph::from_edges(3, {{0, 1}, {1, 2}, {2, 0}}));

  CHECK_THROWS_AS(c5.induced(0), std::invalid_argument);
  CHECK_THROWS_AS(c5.induced(vbit(5)), std::invalid_argument);

  // complement(induced(g, s)) == induced(complement(g), s)
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    const Graph g = random_graph_for_test(8, 0.5, 7000 + seed);
    SplitMix64 rng(seed);
    VertexSet s = rng.next() & full_set(8);
    if (!s) s = vbit(0);
    CHECK(g.induced(s).complement() == g.complement().induced(s));
  }
}

TEST_CASE("components are maximal and ordered by least vertex") {
  const Graph edgeless(3);
  const auto parts = components(edgeless);
  REQUIRE(parts.size() == 3);
  CHECK(parts[0] == vbit(0));
  CHECK(parts[2] == vbit(2));

  CHECK(components(generate({GenFamily::Path, 6})).size() == 1);
}

TEST_CASE("blocks of the known shapes") {
  // two triangles sharing vertex 2
  const Graph bowtie =
      Graph::from_edges(5, {{0, 1}, {1, 2}, {2, 0}, {2, 3}, {3, 4}, {4, 2}});
  const auto dec = blocks(bowtie);
  CHECK(dec.blocks.size() == 2);
  CHECK(dec.cut_vertices == vbit(2));

  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    const Graph t = generate({GenFamily::RandomTree, 9, seed});
    const auto tdec = blocks(t);
    CHECK(tdec.blocks.size() == 8);
    for (VertexSet b : tdec.blocks) CHECK(set_size(b) == 2);
  }

  const Graph c6 = generate({GenFamily::Cycle, 6});
  const auto cdec = blocks(c6);
  REQUIRE(cdec.blocks.size() == 1);
  CHECK(cdec.blocks[0] == full_set(6));
  CHECK(cdec.cut_vertices == 0);

  CHECK_THROWS_AS(blocks(Graph(2)), std::invalid_argument);
  CHECK(blocks(Graph(1)).blocks.empty());
}

TEST_CASE("blocks partition the edge set on random connected graphs") {
  int checked = 0;
  for (std::uint64_t seed = 0; checked < 1000; ++seed) {
    const int n = 4 + static_cast<int>(seed % 9);  // 4..12
    Graph g = random_graph_for_test(n, 0.35, 40000 + seed);
    if (!is_connected(g)) continue;
    ++checked;
    int edge_sum = 0;
    for (VertexSet b : blocks(g).blocks) edge_sum += g.induced(b).edge_count();
    CHECK(edge_sum == g.edge_count());
  }
}

TEST_CASE("graph invariants are enforced") {
  CHECK_THROWS_AS(Graph(0), std::invalid_argument);
  CHECK_THROWS_AS(Graph(65), std::invalid_argument);
  Graph g(3);
  CHECK_THROWS_AS(g.add_edge(0, 0), std::invalid_argument);
  CHECK_THROWS_AS(g.add_edge(0, 3), std::invalid_argument);
  g.add_edge(0, 2);
  CHECK(g.adjacent(2, 0));  // symmetry
}
