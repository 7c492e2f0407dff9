#include "zf/predict.hpp"

#include <algorithm>
#include <stdexcept>

namespace zf {

std::string_view rule_name(Rule r) {
  switch (r) {
    case Rule::Tree: return "TREE";
    case Rule::Star: return "STAR";
    case Rule::BipartiteK22Free: return "BIPARTITE_K22FREE";
    case Rule::UniN2: return "UNI_N2";
    case Rule::UniGirthNot4: return "UNI_GIRTH_NOT4";
    case Rule::UniC4Case1: return "UNI_C4_CASE1";
    case Rule::UniC4Case2a: return "UNI_C4_CASE2A";
    case Rule::UniC4Case2b: return "UNI_C4_CASE2B";
    case Rule::UniC4Case3: return "UNI_C4_CASE3";
    case Rule::UniSmallN: return "UNI_SMALL_N";
    case Rule::CactusBook: return "CACTUS_BOOK";
    case Rule::CactusC4Adj: return "CACTUS_C4_ADJ";
    case Rule::CactusDefault: return "CACTUS_DEFAULT";
    case Rule::GenericBounds: return "GENERIC_BOUNDS";
  }
  return "GENERIC_BOUNDS";
}

namespace {

Prediction exact_rule(int value, Rule rule, std::string notes) {
  return Prediction{value, value, rule, std::move(notes)};
}

Prediction predict_unicyclic(const Graph& g, const FamilyClassification& cls) {
  const int n = g.order();
  const UnicyclicDecomposition& dec = *cls.unicyclic;
  if (n == 3) return exact_rule(3, Rule::UniSmallN, "triangle: complement is edgeless");
  if (n == 4)
    return exact_rule(2, Rule::UniSmallN, "4-vertex unicyclic: complement is C4 or P3 plus an isolated vertex");
  if (g.max_degree() == n - 1)
    return exact_rule(n - 2, Rule::UniN2, "star plus one leaf edge: complement is (K_{n-1} - e) plus an isolated vertex");
  if (dec.girth() != 4)
    return exact_rule(n - 3, Rule::UniGirthNot4, "unicyclic with girth != 4");

  const C4Context ctx = c4_contexts(g, cls).front();
  switch (ctx.degree2_count) {
    case 0:
    case 1:
      return exact_rule(n - 4, Rule::UniC4Case1, "girth 4, at most one degree-2 cycle vertex");
    case 2: {
      int first = -1, second = -1;
      for (int i = 0; i < 4; ++i) {
        if (g.degree(ctx.cycle[static_cast<std::size_t>(i)]) != 2) continue;
        (first < 0 ? first : second) = i;
      }
      const bool adjacent = (second - first) == 1 || (first == 0 && second == 3);
      if (adjacent)
        return exact_rule(n - 4, Rule::UniC4Case2a, "girth 4, two adjacent degree-2 cycle vertices");
      return exact_rule(n - 3, Rule::UniC4Case2b, "girth 4, two opposite degree-2 cycle vertices");
    }
    case 3:
      return exact_rule(n - 3, Rule::UniC4Case3, "girth 4, three degree-2 cycle vertices");
    default:
      // four degree-2 cycle vertices would mean the bare C4, handled at n == 4
      throw std::logic_error("predict: unicyclic C4 with every cycle vertex of degree 2 at n >= 5");
  }
}

Prediction predict_cactus(const Graph& g, const FamilyClassification& cls) {
  const int n = g.order();
  if (cls.is_book)
    return exact_rule(n - 2, Rule::CactusBook, "book cactus: complement is K_{n-1} minus a matching plus an isolated vertex");
  for (const C4Context& ctx : c4_contexts(g, cls))
    if (ctx.adjacent_attached_pair)
      return exact_rule(n - 4, Rule::CactusC4Adj, "adjacent C4 vertices both attached outside the cycle");
  return exact_rule(n - 3, Rule::CactusDefault, "cactus with no special C4 attachment");
}

Prediction predict_generic(const Graph& g) {
  const int n = g.order();
  const Graph comp = g.complement();
  Prediction p;
  p.rule = Rule::GenericBounds;
  p.notes = "no family rule applies";
  const KrsBound kb = krs_free_bound(g);
  p.lo = std::max({1, kb.bound, comp.min_degree()});
  // an edgeless complement (complete input) needs all n vertices; with any
  // edge present, everything-but-one-endpoint forces
  p.hi = comp.edge_count() == 0 ? n : n - 1;
  if (is_connected(comp)) p.hi = std::min(p.hi, n - 3);
  if (forbidden_induced_test(comp))
    p.lo = std::max(p.lo, n - 2);
  else
    p.hi = std::min(p.hi, n - 3);
  if (p.lo > p.hi) throw std::logic_error("predict: generic bounds crossed");
  return p;
}

}  // namespace

Prediction predict_complement_zf(const Graph& g) {
  const int n = g.order();
  if (n < 3) throw std::invalid_argument("predict_complement_zf: needs n >= 3");
  const FamilyClassification cls = classify(g);
  if (!cls.connected)
    throw std::invalid_argument(
        "predict_complement_zf: disconnected graph; solve each component exactly and add");

  switch (cls.family) {
    case Family::Tree:
      if (cls.is_star)
        return exact_rule(n - 1, Rule::Star, "star: complement is K_{n-1} plus an isolated vertex");
      return exact_rule(n - 3, Rule::Tree, "tree that is not a star");
    case Family::Unicyclic:
      return predict_unicyclic(g, cls);
    case Family::Cactus:
      return predict_cactus(g, cls);
    case Family::BipartiteK22Free:
      return exact_rule(n - 3, Rule::BipartiteK22Free, "connected K_{2,2}-free bipartite, not a star");
    case Family::Other:
      return predict_generic(g);
  }
  return predict_generic(g);
}

int unicyclic_forest_bound(const UnicyclicDecomposition& dec) {
  int total = dec.girth();
  for (int mi : dec.m) total += mi;
  return total - dec.m_max - 3;
}

int sunlet_prediction(int n) {
  if (n < 3) throw std::invalid_argument("sunlet_prediction: base cycle needs n >= 3");
  return n == 4 ? 2 * n - 4 : 2 * n - 3;
}

namespace {

// C4 with single pendants at two adjacent cycle vertices (n = 6)
bool is_c4_with_adjacent_pendants(const UnicyclicDecomposition& dec) {
  if (dec.girth() != 4) return false;
  int first = -1, second = -1;
  for (int i = 0; i < 4; ++i) {
    if (dec.m[static_cast<std::size_t>(i)] == 0) continue;
    if (dec.m[static_cast<std::size_t>(i)] != 1) return false;
    (first < 0 ? first : second) = i;
  }
  if (first < 0 || second < 0) return false;
  return (second - first) == 1 || (first == 0 && second == 3);
}

}  // namespace

SelfEquality unicyclic_self_equality(const Graph& g) {
  const FamilyClassification cls = classify(g);
  if (cls.family != Family::Unicyclic)
    throw std::invalid_argument("unicyclic_self_equality: graph is not unicyclic");
  const int n = g.order();
  if (n < 4) throw std::invalid_argument("unicyclic_self_equality: needs n >= 4");
  const UnicyclicDecomposition& dec = *cls.unicyclic;

  if (n == 4) {
    // C4 and the triangle with a pendant are the only 4-vertex unicyclic
    // graphs and both qualify
    return {dec.girth() == 4 || dec.girth() == 3, "n4-structural"};
  }
  if (n == 5) {
    // no clean closed form at this order; settle by solving both sides
    const bool eq = zero_forcing_number(g).value() == zero_forcing_number(g.complement()).value();
    return {eq, "n5-exhaustive"};
  }
  if (n == 6 && is_c4_with_adjacent_pendants(dec))
    return {true, "n6-c4-adjacent-pendants"};

  if (!is_connected(g.complement())) return {false, "complement-disconnected"};
  const int zg = zero_forcing_number(g).value();
  if (zg != n - 3) return {false, "z-not-n-minus-3"};
  const Prediction pred = predict_complement_zf(g);
  return {pred.exact() && pred.lo == n - 3, "z-equals-n-minus-3"};
}

}  // namespace zf
