#pragma once

#include <cstdint>
#include <vector>

#include "zf/graph.hpp"

namespace zf {

struct ForceEvent {
  int forcer = -1;
  int forced = -1;
  int round = 0;
  bool operator==(const ForceEvent&) const = default;
};

// Result of running the color change rule to its fixed point. Rounds are
// simultaneous: every force recorded in round r was legal with respect to
// the coloring at the start of round r. Within a round, white vertices are
// claimed in ascending index and the recorded forcer is the least-index
// blue vertex able to force that white vertex, so the log is deterministic.
struct ColorState {
  int n = 0;
  VertexSet blue = 0;
  int rounds = 0;
  std::vector<ForceEvent> log;

  bool complete() const { return blue == full_set(n); }
};

ColorState closure(const Graph& g, VertexSet start);

/// Fixed-point blue set only; the solver's hot path.
VertexSet closure_set(const Graph& g, VertexSet start);

bool is_zfs(const Graph& g, VertexSet start);

// One chain per initial blue vertex (length-1 chains allowed), ordered by
// starting vertex. Chains are vertex-disjoint and cover the final blue set.
struct ForcingChains {
  std::vector<std::vector<int>> chains;
};

/// Extract chains from a completed closure; throws when the closure did
/// not color every vertex.
ForcingChains chains(const ColorState& state, VertexSet start);

/// Terminal vertices of each chain; always a zero forcing set of the same
/// size for the same graph.
VertexSet reverse_chains(const ForcingChains& c);

struct SolveOptions {
  std::uint64_t max_sets = 0;  // closure budget; 0 = unlimited
  bool parallel = true;        // OpenMP subset-search kernel vs serial reference
};

// Exact when lo == hi: then witness is the lexicographically least minimum
// zero forcing set (compared as ascending vertex sequences). When the
// budget runs out the result degrades to the interval [lo, hi], witness 0,
// never a wrong exact value. Budget accounting is schedule-independent: a
// candidate size k is only entered if all C(n,k) closures fit the budget.
struct ZfResult {
  int lo = 0;
  int hi = 0;
  VertexSet witness = 0;
  std::uint64_t sets_examined = 0;

  bool exact() const { return lo == hi; }
  int value() const;  // throws unless exact
};

/// Exact zero forcing number. Disconnected graphs are solved per component
/// and summed; the witness is the union of component witnesses.
ZfResult zero_forcing_number(const Graph& g, const SolveOptions& opts = {});

/// Serial reference solver; same contract, kept for tests and benchmarks.
ZfResult zero_forcing_number_serial(const Graph& g, std::uint64_t max_sets = 0);

}  // namespace zf
