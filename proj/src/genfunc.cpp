#include "multipark/genfunc.hpp"

#include <algorithm>
#include <stdexcept>

namespace multipark {

LaurentPolynomial P_poly(const ColoredMultigraph& G, Vertex m) {
  LaurentPolynomial p;
  for (const MultiparkingFunction& f : enumerate_multiparking(G, m))
    p.add_term(static_cast<int>(f.sum()), 1);
  return p;
}

LaurentPolynomial Pbar_poly(const ColoredMultigraph& G, Vertex m) {
  if (!G.loop_free())
    throw std::invalid_argument("complement polynomial requires a loop-free graph");
  const int E = G.edge_count();
  LaurentPolynomial substituted = P_poly(G, m).reciprocal_substitution().shifted(E);
  LaurentPolynomial direct;
  for (const ComplementFunction& h : enumerate_complements(G, m))
    direct.add_term(static_cast<int>(h.sum() - E), 1);
  if (substituted != direct)
    throw std::logic_error("complement polynomial paths disagree: " + substituted.to_string() +
                           " vs " + direct.to_string());
  return substituted;
}

std::string to_string(RedundancyClass c) {
  switch (c) {
    case RedundancyClass::Type1: return "Type1";
    case RedundancyClass::Type2: return "Type2";
    case RedundancyClass::Type3: return "Type3";
    case RedundancyClass::Type4: return "Type4";
    case RedundancyClass::Type5: return "Type5";
    case RedundancyClass::NotRedundant: return "NotRedundant";
  }
  return "?";
}

namespace {

// Traversal-derived context shared by the per-edge classifier.
struct ClassifyContext {
  const ForestTraversal& t;
  std::vector<int> forest_color;  // forest_color[(u-1)*n + (v-1)] or -1

  ClassifyContext(const ColoredMultigraph& G, const ColorForest& F, const ForestTraversal& tr)
      : t(tr), forest_color(static_cast<std::size_t>(G.vertex_count()) * G.vertex_count(), -1) {
    const int n = G.vertex_count();
    for (const EdgeRef& e : F.edges) {
      forest_color[static_cast<std::size_t>(e.u - 1) * n + (e.v - 1)] = e.color;
      forest_color[static_cast<std::size_t>(e.v - 1) * n + (e.u - 1)] = e.color;
    }
  }

  int tree_color_between(Vertex a, Vertex b, int n) const {
    return forest_color[static_cast<std::size_t>(a - 1) * n + (b - 1)];
  }
};

RedundancyClass classify_edge(const ClassifyContext& ctx, int n, const EdgeRef& e) {
  if (e.is_loop()) return RedundancyClass::Type4;
  const auto& t = ctx.t;
  const bool ru = t.roots.contains(e.u);
  const bool rv = t.roots.contains(e.v);
  if (ru && rv) return RedundancyClass::Type1;
  if (ru != rv) {
    const Vertex root = ru ? e.u : e.v;
    const Vertex other = ru ? e.v : e.u;
    if (t.pre[other - 1] == root) {
      // parallel to the tree edge of `other`
      int k = ctx.tree_color_between(other, root, n);
      return e.color > k ? RedundancyClass::Type5 : RedundancyClass::NotRedundant;
    }
    return t.pos[other - 1] < t.pos[root - 1] ? RedundancyClass::Type2
                                              : RedundancyClass::NotRedundant;
  }
  // both endpoints non-roots; let v be the later one in the order
  const Vertex v = t.pos[e.u - 1] > t.pos[e.v - 1] ? e.u : e.v;
  const Vertex w = v == e.u ? e.v : e.u;
  if (t.pre[v - 1] == w) {
    int k = ctx.tree_color_between(v, w, n);
    return e.color > k ? RedundancyClass::Type5 : RedundancyClass::NotRedundant;
  }
  if (t.pos[t.pre[v - 1] - 1] < t.pos[w - 1]) return RedundancyClass::Type3;
  return RedundancyClass::NotRedundant;  // counted in N(v) instead
}

}  // namespace

RedundancyClass classify_redundant(const ColoredMultigraph& G, const ColorForest& F,
                                   const VertexRanking& tau, const EdgeRef& e) {
  if (!G.has_edge(e)) throw std::invalid_argument("edge is not in the graph");
  if (std::find(F.edges.begin(), F.edges.end(), e) != F.edges.end())
    throw std::invalid_argument("edge lies in the forest");
  ForestTraversal t = traverse_forest(G, F, tau);
  ClassifyContext ctx(G, F, t);
  return classify_edge(ctx, G.vertex_count(), e);
}

bool is_redundant_by_recomputation(const ColoredMultigraph& G, const ColorForest& F,
                                   const VertexRanking& tau, const EdgeRef& e) {
  if (!G.has_edge(e)) throw std::invalid_argument("edge is not in the graph");
  if (std::find(F.edges.begin(), F.edges.end(), e) != F.edges.end())
    throw std::invalid_argument("edge lies in the forest");
  MultiparkingFunction before = psi(G, F, tau).f;
  ColoredMultigraph smaller = G.delete_edge(e);
  ColorForest shifted = F;  // forest colors above the deleted color move down
  for (EdgeRef& fe : shifted.edges)
    if (fe.ends() == e.ends() && fe.color > e.color) fe.color -= 1;
  MultiparkingFunction after = psi(smaller, shifted, tau).f;
  return before.values == after.values;
}

RedundancyReport redundancy_report(const ColoredMultigraph& G, const ColorForest& F,
                                   const VertexRanking& tau) {
  const int n = G.vertex_count();
  ForestTraversal t = traverse_forest(G, F, tau);
  ClassifyContext ctx(G, F, t);
  RedundancyReport report;
  report.g.assign(n, 0);
  for (const EdgeRef& e : G.edges()) {
    if (!e.is_loop() && ctx.tree_color_between(e.u, e.v, n) == e.color) continue;  // in F
    RedundancyClass c = classify_edge(ctx, n, e);
    report.classes.emplace_back(e, c);
    if (c != RedundancyClass::NotRedundant) {
      Vertex later = t.pos[e.u - 1] >= t.pos[e.v - 1] ? e.u : e.v;  // loops charge once
      report.g[later - 1] += 1;
    }
  }
  return report;
}

LaurentPolynomial I_poly(const ColoredMultigraph& G, Vertex m, const VertexRanking& tau) {
  if (!G.loop_free())
    throw std::invalid_argument("redundancy polynomial requires a loop-free graph");
  LaurentPolynomial p;
  for (const ColorForest& F : enumerate_color_forests(G, m)) {
    RedundancyReport report = redundancy_report(G, F, tau);
    int total = 0;
    for (int gi : report.g) total += gi;
    p.add_term(total, 1);
  }
  return p;
}

ReciprocityReport reciprocity_check(const ColoredMultigraph& G, Vertex m,
                                    const VertexRanking& tau) {
  ReciprocityReport r;
  r.qV_I = I_poly(G, m, tau).shifted(G.vertex_count());
  r.pbar = Pbar_poly(G, m);
  r.qE_Pinv = P_poly(G, m).reciprocal_substitution().shifted(G.edge_count());
  r.pass = r.qV_I == r.pbar && r.pbar == r.qE_Pinv;
  return r;
}

}  // namespace multipark
