#pragma once

#include <vector>

#include "multipark/multigraph.hpp"
#include "multipark/parking.hpp"

namespace multipark {

// Tie-breaking permutation; rank(v) is the priority of vertex v (lower wins).
class VertexRanking {
 public:
  static VertexRanking identity(int n);
  static VertexRanking reversed(int n);
  static VertexRanking from_images(std::vector<int> images);  // validates

  int size() const { return static_cast<int>(rank_.size()); }
  int rank(Vertex v) const { return rank_[v - 1]; }
  const std::vector<int>& images() const { return rank_; }

 private:
  explicit VertexRanking(std::vector<int> rank) : rank_(std::move(rank)) {}
  std::vector<int> rank_;
};

// Order in which vertices are processed; pi.front() == m always.
struct ProcessOrder {
  std::vector<Vertex> pi;

  int position(Vertex v) const;  // 1-based

  friend bool operator==(const ProcessOrder&, const ProcessOrder&) = default;
};

// Spanning acyclic colored edge set on all n vertices; every component
// (isolated vertices included) must contain a vertex >= m, and the root of a
// component is its least vertex >= m.
struct ColorForest {
  int n = 1;
  Vertex m = 1;
  std::vector<EdgeRef> edges;  // kept sorted

  friend bool operator==(const ColorForest&, const ColorForest&) = default;
};

bool is_valid_forest(const ColoredMultigraph& G, const ColorForest& F);
void validate_forest(const ColoredMultigraph& G, const ColorForest& F);  // throws

struct PhiResult {
  ColorForest forest;
  ProcessOrder order;
};

// Burning pass: starting from m, repeatedly process the frontier vertex of
// least rank; an untouched neighbor w attaches through edge {w,v}_{val(w)}
// when its value falls below mu(w,v), otherwise its value drops by mu(w,v).
// When the frontier empties, restart at the least unprocessed vertex >= m.
// Throws if f is not a multiparking function.
PhiResult phi(const ColoredMultigraph& G, const MultiparkingFunction& f,
              const VertexRanking& tau);

struct PsiResult {
  MultiparkingFunction f;
  ProcessOrder order;
};

// Inverse pass: traverse F from m (frontier vertex of least rank, restart at
// the least unvisited vertex >= m), then read off f(v) as the tree edge color
// plus the number of graph edges from v to vertices placed before pre(v).
PsiResult psi(const ColoredMultigraph& G, const ColorForest& F, const VertexRanking& tau);

// Full traversal data shared by psi, the corollary statistics and the
// redundancy classifier.
struct ForestTraversal {
  ProcessOrder order;
  std::vector<int> pos;         // pos[v-1] = 1-based position of v in the order
  std::vector<Vertex> pre;      // pre[v-1]; 0 for roots
  std::vector<int> tree_color;  // tree_color[v-1] = color of {v, pre(v)}; -1 for roots
  std::vector<int> n_count;     // n_count[v-1] = |N(v)|; 0 for roots
  VertexSet roots;
  int sigma = 0;  // number of forest components
  MultiparkingFunction f;
};

ForestTraversal traverse_forest(const ColoredMultigraph& G, const ColorForest& F,
                                const VertexRanking& tau);

// Every acyclic colored edge subset whose components each reach m, in a fixed
// backtracking order (vertex pairs lexicographic, skip before include,
// colors ascending).
std::vector<ColorForest> enumerate_color_forests(const ColoredMultigraph& G, Vertex m);

struct CorollaryStats {
  long long color_sum = 0;  // sum of forest edge colors
  long long n_sum = 0;      // sum of |N(v)| over non-roots
  long long sigma = 0;      // component count
  long long f_sum = 0;      // sum of the recovered function values
};

// The three traversal statistics plus the recovered value sum; they satisfy
// f_sum = color_sum + n_sum - sigma.
CorollaryStats corollary_stats(const ColoredMultigraph& G, const ColorForest& F,
                               const VertexRanking& tau);

namespace detail {

struct BurnOutcome {
  bool valid = false;
  ColorForest forest;
  ProcessOrder order;
};

// Shared engine behind phi and the burning validity check.
BurnOutcome burn(const ColoredMultigraph& G, const MultiparkingFunction& f,
                 const VertexRanking& tau);

}  // namespace detail

}  // namespace multipark
