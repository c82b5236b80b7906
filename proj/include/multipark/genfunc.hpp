#pragma once

#include <string>
#include <utility>
#include <vector>

#include "multipark/bijection.hpp"
#include "multipark/laurent.hpp"

namespace multipark {

// Generating function of value sums over all multiparking functions.
LaurentPolynomial P_poly(const ColoredMultigraph& G, Vertex m);

// Complement generating function, computed both as q^|E| P(1/q) and directly
// from the enumerated complement functions; disagreement is a hard failure.
LaurentPolynomial Pbar_poly(const ColoredMultigraph& G, Vertex m);

enum class RedundancyClass { Type1, Type2, Type3, Type4, Type5, NotRedundant };

std::string to_string(RedundancyClass c);

// Classify a non-forest edge against the traversal order of F:
//   Type1 both endpoints roots; Type2 root after non-root; Type3 other
//   endpoint between pre(v) and v; Type4 loop; Type5 parallel to the tree
//   edge with a higher color. Everything else changes the recovered function.
RedundancyClass classify_redundant(const ColoredMultigraph& G, const ColorForest& F,
                                   const VertexRanking& tau, const EdgeRef& e);

// Semantic oracle: redundant iff deleting e leaves the recovered function
// unchanged, with the forest colors reinterpreted in the smaller graph.
bool is_redundant_by_recomputation(const ColoredMultigraph& G, const ColorForest& F,
                                   const VertexRanking& tau, const EdgeRef& e);

struct RedundancyReport {
  // Non-forest edges in lexicographic order with their class.
  std::vector<std::pair<EdgeRef, RedundancyClass>> classes;
  // g[v-1]: redundant edges charged to v, i.e. whose later endpoint is v
  // (loops charged once).
  std::vector<int> g;
};

RedundancyReport redundancy_report(const ColoredMultigraph& G, const ColorForest& F,
                                   const VertexRanking& tau);

// Generating function of the redundancy statistic over all forests.
LaurentPolynomial I_poly(const ColoredMultigraph& G, Vertex m, const VertexRanking& tau);

struct ReciprocityReport {
  LaurentPolynomial qV_I;     // q^|V| * I
  LaurentPolynomial pbar;     // complement polynomial
  LaurentPolynomial qE_Pinv;  // q^|E| * P(1/q)
  bool pass = false;
};

ReciprocityReport reciprocity_check(const ColoredMultigraph& G, Vertex m,
                                    const VertexRanking& tau);

}  // namespace multipark
