#pragma once

#include <cstdint>
#include <functional>
#include <string_view>
#include <vector>

#include "zf/graph.hpp"

namespace zf {

// SplitMix64. The algorithm is pinned (not std::mt19937 or any
// distribution) so that seeded streams are bit-identical across platforms
// and standard libraries.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ull);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
  }

  /// Uniform in [0, bound), unbiased by rejection.
  std::uint64_t below(std::uint64_t bound) {
    const std::uint64_t limit = ~std::uint64_t{0} - ~std::uint64_t{0} % bound;
    for (;;) {
      const std::uint64_t x = next();
      if (x < limit) return x % bound;
    }
  }

  double unit() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

 private:
  std::uint64_t state_;
};

enum class GenFamily {
  Path,
  Cycle,
  Star,
  Complete,
  StarPlusEdge,
  Sunlet,
  Book,
  RandomTree,
  RandomUnicyclic,
  RandomCactus,
  RandomGraph,
};

// A spec fully determines the graph: same (family, n, params, seed)
// always yields the identical edge set.
struct GenSpec {
  GenFamily family = GenFamily::Path;
  int n = 1;               // sunlet: base cycle length, graph gets 2n vertices
  std::uint64_t seed = 0;
  int pages = 2;           // book: leaf matching size
  int girth = 0;           // random_unicyclic: 0 = unconstrained, else target cycle length
  double edge_prob = 0.5;  // random_graph
  double cycle_bias = 0.6; // random_cactus: probability of growing a cycle over a bridge
};

Graph generate(const GenSpec& spec);

/// Grow a cactus: the first attachment is always a cycle, then cycles of
/// length 3..6 or bridge edges at uniformly chosen vertices.
Graph random_cactus(int n, std::uint64_t seed, double cycle_bias = 0.6);

// Exhaustive labeled enumerations. Budgets are hard errors, not
// truncations.
std::uint64_t tree_count(int n);                    // n^(n-2)
Graph tree_from_index(int n, std::uint64_t index);  // Pruefer digits of index
void enumerate_trees(int n, const std::function<void(const Graph&)>& fn);  // n <= 9

/// Edge masks (edge_bit layout) of every labeled unicyclic graph,
/// deduplicated and sorted; n <= 8.
const std::vector<std::uint64_t>& unicyclic_edge_masks(int n);

std::uint64_t all_graph_count(int n);  // 2^C(n,2)
void enumerate_all_graphs(int n, const std::function<void(const Graph&)>& fn);        // n <= 7
void enumerate_connected_graphs(int n, const std::function<void(const Graph&)>& fn);  // n <= 7

/// Dispatch by family name: trees | unicyclic | all_graphs | connected_graphs.
void enumerate_family(std::string_view family, int n, const std::function<void(const Graph&)>& fn);

}  // namespace zf
