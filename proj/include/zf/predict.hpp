#pragma once

#include <string>
#include <string_view>

#include "zf/forcing.hpp"
#include "zf/structure.hpp"

namespace zf {

// Rule identifiers are part of the public report schema; rule_name()
// strings are frozen.
enum class Rule {
  Tree,
  Star,
  BipartiteK22Free,
  UniN2,
  UniGirthNot4,
  UniC4Case1,
  UniC4Case2a,
  UniC4Case2b,
  UniC4Case3,
  UniSmallN,
  CactusBook,
  CactusC4Adj,
  CactusDefault,
  GenericBounds,
};

std::string_view rule_name(Rule r);

// Value or interval for the zero forcing number of the complement of the
// input graph. lo == hi for every rule except GENERIC_BOUNDS.
struct Prediction {
  int lo = 0;
  int hi = 0;
  Rule rule = Rule::GenericBounds;
  std::string notes;

  bool exact() const { return lo == hi; }
};

/// Closed-form prediction of Z(complement of g) for the recognized
/// families, generic bounds otherwise. Requires g connected and n >= 3;
/// disconnected inputs raise (solve components exactly and add instead).
Prediction predict_complement_zf(const Graph& g);

/// Minimum-degree lower bound on Z(complement): |G| - m_max - 3.
int unicyclic_forest_bound(const UnicyclicDecomposition& dec);

/// Z of the complement of the n-sunlet (cycle with one pendant per cycle
/// vertex, 2n vertices): 2n - 3, except 2n - 4 at n = 4. Requires n >= 3.
int sunlet_prediction(int n);

// Decision plus the rule that settled it, for reporting.
struct SelfEquality {
  bool equal = false;
  std::string decided_by;
};

/// Does Z(g) equal Z(complement of g)? Structural tests handle n = 4 and
/// the one sporadic n = 6 graph; n = 5 is settled by exhaustive solving
/// (the closed-form list is incomplete there, see tests); for n >= 6 the
/// criterion is that both g and its complement are connected with
/// Z(g) = n - 3 matched by the complement prediction. Requires a
/// connected unicyclic graph on n >= 4 vertices.
SelfEquality unicyclic_self_equality(const Graph& g);

}  // namespace zf
