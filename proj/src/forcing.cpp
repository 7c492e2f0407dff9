#include "zf/forcing.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <limits>
#include <numeric>
#include <optional>
#include <stdexcept>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace zf {

namespace {

void check_subset(const Graph& g, VertexSet s, const char* who) {
  if (s & ~g.vertices())
    throw std::invalid_argument(std::string(who) + ": start set has vertices outside the graph");
}

}  // namespace

ColorState closure(const Graph& g, VertexSet start) {
  check_subset(g, start, "closure");
  ColorState st;
  st.n = g.order();
  st.blue = start;
  const VertexSet all = g.vertices();
  for (;;) {
    const VertexSet white = all & ~st.blue;
    if (!white) break;
    VertexSet claimed = 0;
    std::vector<std::pair<int, int>> forces;  // (forced, forcer)
    for (VertexSet m = st.blue; m; m &= m - 1) {
      const int b = first_vertex(m);
      const VertexSet cand = g.neighbors(b) & white;
      if (is_singleton(cand) && !(cand & claimed)) {
        claimed |= cand;
        forces.emplace_back(first_vertex(cand), b);
      }
    }
    if (!claimed) break;
    ++st.rounds;
    std::sort(forces.begin(), forces.end());
    for (auto [w, b] : forces) st.log.push_back({b, w, st.rounds});
    st.blue |= claimed;
  }
  return st;
}

VertexSet closure_set(const Graph& g, VertexSet blue) {
  const VertexSet all = g.vertices();
  for (;;) {
    const VertexSet white = all & ~blue;
    if (!white) return blue;
    VertexSet forced = 0;
    for (VertexSet m = blue; m; m &= m - 1) {
      const VertexSet cand = g.neighbors(first_vertex(m)) & white;
      if (is_singleton(cand)) forced |= cand;
    }
    if (!forced) return blue;
    blue |= forced;
  }
}

bool is_zfs(const Graph& g, VertexSet start) {
  check_subset(g, start, "is_zfs");
  return closure_set(g, start) == g.vertices();
}

ForcingChains chains(const ColorState& state, VertexSet start) {
  if (!state.complete())
    throw std::invalid_argument("chains: closure did not color every vertex");
  std::array<int, kMaxVertices> succ;
  succ.fill(-1);
  for (const auto& ev : state.log) succ[ev.forcer] = ev.forced;
  ForcingChains out;
  for (VertexSet m = start; m; m &= m - 1) {
    std::vector<int> chain{first_vertex(m)};
    while (succ[chain.back()] >= 0) chain.push_back(succ[chain.back()]);
    out.chains.push_back(std::move(chain));
  }
  return out;
}

VertexSet reverse_chains(const ForcingChains& c) {
  VertexSet out = 0;
  for (const auto& chain : c.chains) out |= vbit(chain.back());
  return out;
}

int ZfResult::value() const {
  if (!exact()) throw std::logic_error("ZfResult::value: budget-limited interval, no exact value");
  return lo;
}

namespace {

constexpr std::uint64_t kNoLimit = std::numeric_limits<std::uint64_t>::max();

std::uint64_t binom_capped(int n, int k, std::uint64_t cap) {
  if (k < 0 || k > n) return 0;
  k = std::min(k, n - k);
  std::uint64_t r = 1;
  for (int i = 1; i <= k; ++i) {
    if (r > cap / static_cast<std::uint64_t>(n - k + i)) return cap;
    r = r * static_cast<std::uint64_t>(n - k + i) / static_cast<std::uint64_t>(i);
    if (r >= cap) return cap;
  }
  return r;
}

VertexSet subset_of(const std::vector<int>& comb) {
  VertexSet s = 0;
  for (int v : comb) s |= vbit(v);
  return s;
}

// advance c to the next k-combination of 0..n-1 with positions < fixed
// prefix length held; returns false when exhausted
bool next_combination(std::vector<int>& c, int n, int fixed) {
  const int k = static_cast<int>(c.size());
  int i = k - 1;
  while (i >= fixed && c[i] == n - k + i) --i;
  if (i < fixed) return false;
  ++c[i];
  for (int j = i + 1; j < k; ++j) c[j] = c[j - 1] + 1;
  return true;
}

// First k-subset in lexicographic order that forces all of g, or nullopt.
std::optional<VertexSet> first_zfs_of_size_serial(const Graph& g, int k, std::uint64_t& examined) {
  const int n = g.order();
  const VertexSet all = g.vertices();
  std::vector<int> c(static_cast<std::size_t>(k));
  std::iota(c.begin(), c.end(), 0);
  do {
    ++examined;
    const VertexSet s = subset_of(c);
    if (closure_set(g, s) == all) return s;
  } while (next_combination(c, n, 0));
  return std::nullopt;
}

// Same contract as the serial kernel. The lex-ordered subset space splits
// into blocks by leading vertex; threads scan blocks independently and the
// reducer keeps the success from the smallest block, so the witness does
// not depend on the schedule. Blocks beyond an already-successful one are
// skipped.
std::optional<VertexSet> first_zfs_of_size_parallel(const Graph& g, int k, std::uint64_t& examined) {
  const int n = g.order();
  const VertexSet all = g.vertices();
  const int pmax = n - k;
  std::vector<VertexSet> found(static_cast<std::size_t>(pmax) + 1, 0);
  std::atomic<int> best_block{std::numeric_limits<int>::max()};
  std::atomic<std::uint64_t> count{0};

#pragma omp parallel for schedule(dynamic)
  for (int p = 0; p <= pmax; ++p) {
    if (p > best_block.load(std::memory_order_relaxed)) continue;
    std::uint64_t local = 0;
    std::vector<int> c(static_cast<std::size_t>(k));
    c[0] = p;
    std::iota(c.begin() + 1, c.end(), p + 1);
    do {
      ++local;
      const VertexSet s = subset_of(c);
      if (closure_set(g, s) == all) {
        found[static_cast<std::size_t>(p)] = s;
        int cur = best_block.load(std::memory_order_relaxed);
        while (p < cur && !best_block.compare_exchange_weak(cur, p)) {
        }
        break;
      }
    } while (next_combination(c, n, 1));
    count += local;
  }

  examined += count.load();
  for (VertexSet s : found)
    if (s) return s;
  return std::nullopt;
}

int component_upper_bound(const Graph& h) {
  // any n-1 vertices of a connected graph force the last one
  return h.order() == 1 ? 1 : h.order() - 1;
}

struct ComponentOutcome {
  int lo = 0, hi = 0;
  VertexSet witness = 0;
  bool exact = false;
};

ComponentOutcome solve_component(const Graph& h, const SolveOptions& opts, std::uint64_t& used) {
  const int lb = std::max(1, h.min_degree());
  const int ub = component_upper_bound(h);
  const std::uint64_t budget = opts.max_sets ? opts.max_sets : kNoLimit;
  for (int k = lb; k <= ub; ++k) {
    const std::uint64_t need = binom_capped(h.order(), k, kNoLimit);
    if (budget != kNoLimit && (need > budget || used > budget - need))
      return {k, ub, 0, false};
    auto witness = opts.parallel ? first_zfs_of_size_parallel(h, k, used)
                                 : first_zfs_of_size_serial(h, k, used);
    if (witness) return {k, k, *witness, true};
  }
  // unreachable: ub is a guaranteed zero forcing set size
  throw std::logic_error("solve_component: no zero forcing set up to the trivial bound");
}

}  // namespace

ZfResult zero_forcing_number(const Graph& g, const SolveOptions& opts) {
  ZfResult total;
  bool exhausted = false;
  for (VertexSet comp : components(g)) {
    const Graph h = g.induced(comp);
    if (exhausted) {
      total.lo += std::max(1, h.min_degree());
      total.hi += component_upper_bound(h);
      continue;
    }
    ComponentOutcome res = solve_component(h, opts, total.sets_examined);
    total.lo += res.lo;
    total.hi += res.hi;
    if (res.exact) {
      // component vertices are relabeled in ascending order, so mapping the
      // witness back preserves lexicographic minimality
      const std::vector<int> verts = set_vertices(comp);
      for (VertexSet m = res.witness; m; m &= m - 1)
        total.witness |= vbit(verts[static_cast<std::size_t>(first_vertex(m))]);
    } else {
      exhausted = true;
    }
  }
  if (exhausted) total.witness = 0;
  return total;
}

ZfResult zero_forcing_number_serial(const Graph& g, std::uint64_t max_sets) {
  return zero_forcing_number(g, SolveOptions{max_sets, false});
}

}  // namespace zf
