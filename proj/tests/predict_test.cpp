#include "doctest.h"
#include "zf/forcing.hpp"
#include "zf/gen.hpp"
#include "zf/predict.hpp"

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

void check_exact(const Graph& g, int want, Rule rule) {
  const Prediction p = predict_complement_zf(g);
  CHECK(p.exact());
  CHECK(p.lo == want);
  CHECK(p.rule == rule);
  CHECK(zero_forcing_number(g.complement()).value() == want);
}

Graph c4_with_pendants(std::initializer_list<int> at) {
  const int n = 4 + static_cast<int>(at.size());
  Graph g(n);
  for (int v = 0; v < 4; ++v) g.add_edge(v, (v + 1) % 4);
  int next = 4;
  for (int v : at) g.add_edge(v, next++);
  return g;
}

}  // namespace

TEST_CASE("tree and star rules") {
  check_exact(generate({GenFamily::Path, 5}), 2, Rule::Tree);
  check_exact(generate({GenFamily::Star, 6}), 5, Rule::Star);
  check_exact(generate({GenFamily::Path, 3}), 2, Rule::Star);  // P3 = K_{1,2}
}

TEST_CASE("unicyclic rules across the decision table") {
  check_exact(generate({GenFamily::StarPlusEdge, 6}), 4, Rule::UniN2);
  check_exact(generate({GenFamily::Cycle, 7}), 4, Rule::UniGirthNot4);
  check_exact(c4_with_pendants({0, 1, 2, 3}), 4, Rule::UniC4Case1);
  check_exact(c4_with_pendants({0, 1, 2}), 3, Rule::UniC4Case1);
  check_exact(c4_with_pendants({0, 1}), 2, Rule::UniC4Case2a);
  check_exact(c4_with_pendants({0, 2}), 3, Rule::UniC4Case2b);
  check_exact(c4_with_pendants({0}), 2, Rule::UniC4Case3);
  check_exact(generate({GenFamily::Cycle, 3}), 3, Rule::UniSmallN);
  check_exact(generate({GenFamily::Cycle, 4}), 2, Rule::UniSmallN);
  check_exact(Graph::from_edges(4, {{0, 1}, {1, 2}, {2, 0}, {0, 3}}), 2, Rule::UniSmallN);
}

TEST_CASE("cactus rules") {
  const Graph book5 = Graph::from_edges(5, {{0, 1}, {0, 2}, {1, 2}, {0, 3}, {0, 4}, {3, 4}});
  check_exact(book5, 3, Rule::CactusBook);
  check_exact(generate({GenFamily::Book, 7, 0, 3}), 5, Rule::CactusBook);

  // C4 with a triangle at one cycle vertex and a pendant at the adjacent one
  const Graph adj = Graph::from_edges(
      7, {{0, 1}, {1, 2}, {2, 3}, {3, 0}, {0, 4}, {0, 5}, {4, 5}, {1, 6}});
  check_exact(adj, 3, Rule::CactusC4Adj);

  const Graph chain = Graph::from_edges(
      6, {{0, 1}, {1, 2}, {2, 0}, {3, 4}, {4, 5}, {5, 3}, {2, 3}});
  check_exact(chain, 3, Rule::CactusDefault);

  // C4 with triangles at two opposite cycle vertices: no adjacent attached pair
  const Graph opp = Graph::from_edges(
      8, {{0, 1}, {1, 2}, {2, 3}, {3, 0}, {0, 4}, {0, 5}, {4, 5}, {2, 6}, {2, 7}, {6, 7}});
  check_exact(opp, 5, Rule::CactusDefault);
}

TEST_CASE("bipartite K22-free rule") {
  const Graph theta = Graph::from_edges(8, {{0, 2}, {2, 3}, {3, 1},
                                            {0, 4}, {4, 5}, {5, 1},
                                            {0, 6}, {6, 7}, {7, 1}});
  check_exact(theta, 5, Rule::BipartiteK22Free);
}

TEST_CASE("generic bounds stay sound, complete graphs included") {
  const Prediction k4 = predict_complement_zf(generate({GenFamily::Complete, 4}));
  CHECK(k4.rule == Rule::GenericBounds);
  CHECK(k4.lo <= 4);
  CHECK(k4.hi == 4);  // the complement is edgeless, so Z = n

  for (std::uint64_t seed = 0; seed < 300; ++seed) {
    const int n = 4 + static_cast<int>(seed % 6);  // 4..9
    const double p = 0.2 + 0.2 * static_cast<double>(seed % 4);
    const Graph g = random_graph_for_test(n, p, 3100 + seed);
    if (!is_connected(g)) continue;
    const Prediction pred = predict_complement_zf(g);
    const int exact = zero_forcing_number(g.complement()).value();
    CHECK(pred.lo <= exact);
    CHECK(exact <= pred.hi);
    if (pred.rule != Rule::GenericBounds) CHECK(pred.exact());
    if (pred.exact()) CHECK(pred.lo == exact);
  }
}

TEST_CASE("predict rejects the inputs outside its contract") {
  Graph disconnected(4);
  disconnected.add_edge(0, 1);
  CHECK_THROWS_AS(predict_complement_zf(disconnected), std::invalid_argument);
  CHECK_THROWS_AS(predict_complement_zf(Graph(1)), std::invalid_argument);
}

TEST_CASE("unicyclic predictions stay within the three-value window") {
  for (std::uint64_t seed = 0; seed < 300; ++seed) {
    const int n = 5 + static_cast<int>(seed % 8);  // 5..12
    const Graph g = generate({GenFamily::RandomUnicyclic, n, seed});
    const int nn = g.order();
    const Prediction p = predict_complement_zf(g);
    CHECK(p.exact());
    CHECK(p.lo >= nn - 4);
    CHECK(p.lo <= nn - 2);
    if (p.lo == nn - 4) CHECK(classify(g).unicyclic->girth() == 4);
    CHECK(unicyclic_forest_bound(*classify(g).unicyclic) <= p.lo);
  }
}

TEST_CASE("forest bound formula") {
  const Graph c5 = generate({GenFamily::Cycle, 5});
  CHECK(unicyclic_forest_bound(*classify(c5).unicyclic) == 2);

  const Graph sun5 = generate({GenFamily::Sunlet, 5});
  CHECK(unicyclic_forest_bound(*classify(sun5).unicyclic) == 6);  // 2n - 4

  // triangle with one size-2 forest: the bound degenerates to 0
  const Graph tadpole = Graph::from_edges(5, {{0, 1}, {1, 2}, {2, 0}, {0, 3}, {3, 4}});
  CHECK(unicyclic_forest_bound(*classify(tadpole).unicyclic) == 0);
}

TEST_CASE("sunlet closed form") {
  CHECK(sunlet_prediction(3) == 3);
  CHECK(sunlet_prediction(4) == 4);
  CHECK(sunlet_prediction(5) == 7);
  CHECK(sunlet_prediction(7) == 11);
  CHECK_THROWS_AS(sunlet_prediction(2), std::invalid_argument);
  for (int base : {3, 4, 5, 6}) {
    const Graph sun = generate({GenFamily::Sunlet, base});
    CHECK(predict_complement_zf(sun).lo == sunlet_prediction(base));
  }
}

TEST_CASE("self-equality decisions") {
  auto eq = [](const Graph& g) { return unicyclic_self_equality(g); };

  CHECK(eq(generate({GenFamily::Cycle, 4})).equal);
  CHECK(eq(Graph::from_edges(4, {{0, 1}, {1, 2}, {2, 0}, {0, 3}})).equal);  // paw
  CHECK(eq(generate({GenFamily::Cycle, 4})).decided_by == "n4-structural");

  // n = 5: all unicyclic graphs except the cricket qualify
  CHECK(eq(generate({GenFamily::Cycle, 5})).equal);
  CHECK(eq(Graph::from_edges(5, {{0, 1}, {1, 2}, {2, 0}, {0, 3}, {3, 4}})).equal);  // tadpole
  CHECK(eq(Graph::from_edges(5, {{0, 1}, {1, 2}, {2, 3}, {3, 0}, {0, 4}})).equal);  // C4+pendant
  CHECK(eq(Graph::from_edges(5, {{0, 1}, {1, 2}, {2, 0}, {0, 3}, {1, 4}})).equal);  // bull
  const SelfEquality cricket =
      eq(Graph::from_edges(5, {{0, 1}, {1, 2}, {2, 0}, {0, 3}, {0, 4}}));
  CHECK_FALSE(cricket.equal);
  CHECK(cricket.decided_by == "n5-exhaustive");

  // n = 6 sporadic graph: C4 plus pendants at two adjacent cycle vertices
  const Graph sporadic =
      Graph::from_edges(6, {{0, 1}, {1, 2}, {2, 3}, {3, 0}, {0, 4}, {1, 5}});
  const SelfEquality sp = eq(sporadic);
  CHECK(sp.equal);
  CHECK(sp.decided_by == "n6-c4-adjacent-pendants");

  CHECK_FALSE(eq(generate({GenFamily::Cycle, 6})).equal);
  CHECK_FALSE(eq(generate({GenFamily::StarPlusEdge, 6})).equal);

  CHECK_THROWS_AS(eq(generate({GenFamily::Path, 4})), std::invalid_argument);
  CHECK_THROWS_AS(eq(generate({GenFamily::Cycle, 3})), std::invalid_argument);
}

TEST_CASE("self-equality matches brute force on random unicyclic graphs") {
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    const int n = 4 + static_cast<int>(seed % 6);  // 4..9
    const Graph g = generate({GenFamily::RandomUnicyclic, n, 7100 + seed});
    const bool truth =
        zero_forcing_number(g).value() == zero_forcing_number(g.complement()).value();
    CHECK(unicyclic_self_equality(g).equal == truth);
  }
}
