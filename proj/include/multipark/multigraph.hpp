#pragma once

#include <bit>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace multipark {

using Vertex = int;  // vertex labels are 1..n throughout

// Subset of the vertex labels 1..64, bitmask-backed.
class VertexSet {
 public:
  constexpr VertexSet() = default;
  explicit constexpr VertexSet(std::uint64_t bits) : bits_(bits) {}

  static constexpr VertexSet full(int n) {
    return VertexSet(n >= 64 ? ~std::uint64_t{0} : ((std::uint64_t{1} << n) - 1));
  }
  static VertexSet of(std::initializer_list<Vertex> vs) {
    VertexSet s;
    for (Vertex v : vs) s.add(v);
    return s;
  }

  constexpr bool contains(Vertex v) const { return (bits_ >> (v - 1)) & 1u; }
  constexpr VertexSet& add(Vertex v) {
    bits_ |= std::uint64_t{1} << (v - 1);
    return *this;
  }
  constexpr VertexSet& remove(Vertex v) {
    bits_ &= ~(std::uint64_t{1} << (v - 1));
    return *this;
  }
  constexpr bool empty() const { return bits_ == 0; }
  int size() const { return std::popcount(bits_); }
  constexpr std::uint64_t bits() const { return bits_; }

  // Least member that is >= m, if any.
  std::optional<Vertex> min_at_least(Vertex m) const {
    std::uint64_t masked = bits_ & ~((std::uint64_t{1} << (m - 1)) - 1);
    if (masked == 0) return std::nullopt;
    return static_cast<Vertex>(std::countr_zero(masked) + 1);
  }

  std::vector<Vertex> elements() const {
    std::vector<Vertex> out;
    for (std::uint64_t b = bits_; b; b &= b - 1)
      out.push_back(static_cast<Vertex>(std::countr_zero(b) + 1));
    return out;
  }

  friend constexpr bool operator==(VertexSet a, VertexSet b) = default;

 private:
  std::uint64_t bits_ = 0;
};

// Edge {u,v}_k: unordered endpoints with color k in 0..mu(u,v)-1.
struct EdgeRef {
  Vertex u = 0;
  Vertex v = 0;
  int color = 0;

  EdgeRef() = default;
  EdgeRef(Vertex a, Vertex b, int c) : u(a < b ? a : b), v(a < b ? b : a), color(c) {}

  bool is_loop() const { return u == v; }
  std::pair<Vertex, Vertex> ends() const { return {u, v}; }

  friend auto operator<=>(const EdgeRef&, const EdgeRef&) = default;
};

std::string to_string(const EdgeRef& e);

// Undirected multigraph on vertices 1..n with loops and parallel edges.
// Parallel edges between i and j carry the canonical colors 0..mu(i,j)-1;
// deleting one shifts the higher colors down, so colors stay dense.
// Values are immutable after construction; every edit returns a new graph.
class ColoredMultigraph {
 public:
  static ColoredMultigraph from_edge_list(int n,
                                          const std::vector<std::pair<Vertex, Vertex>>& pairs);
  static ColoredMultigraph from_multiplicity(int n, std::vector<int> mu);

  int vertex_count() const { return n_; }
  int edge_count() const;  // loops count once
  int mu(Vertex i, Vertex j) const {
    check_vertex(i);
    check_vertex(j);
    return mu_[idx(i, j)];
  }
  int deg(Vertex i) const;  // loops count twice
  int loops_at(Vertex i) const {
    check_vertex(i);
    return mu_[idx(i, i)];
  }
  bool loop_free() const;
  bool has_edge(const EdgeRef& e) const;

  bool connected() const;
  std::vector<std::vector<Vertex>> components() const;  // ordered by least vertex

  // Edges from i to vertices outside I, with multiplicity; loops never count.
  int outdeg(const VertexSet& I, Vertex i) const;
  // Edges from i to other vertices inside I; requires a loop-free graph.
  int indeg(const VertexSet& I, Vertex i) const;

  ColoredMultigraph delete_edge(const EdgeRef& e) const;
  // Merge the endpoints of a non-loop edge into the larger label, drop the
  // contracted edge, turn the surviving parallels into loops, and recompact
  // labels to 1..n-1 preserving relative order.
  ColoredMultigraph contract_edge(const EdgeRef& e) const;
  ColoredMultigraph add_edge(Vertex u, Vertex v) const;
  bool is_bridge(const EdgeRef& e) const;

  std::vector<EdgeRef> edges() const;                         // lex by (u, v, color)
  std::vector<std::pair<Vertex, Vertex>> edge_pairs() const;  // with multiplicity

  // Induced subgraph on the given vertices, relabeled densely to 1..k
  // preserving relative label order.
  ColoredMultigraph induced(std::vector<Vertex> vs) const;

  // Exact (n, mu) serialization, row-major; used as recursion memo key.
  std::string multiplicity_key() const;

  const std::vector<int>& mu_table() const { return mu_; }

  friend bool operator==(const ColoredMultigraph&, const ColoredMultigraph&) = default;

 private:
  ColoredMultigraph(int n, std::vector<int> mu) : n_(n), mu_(std::move(mu)) {}
  std::size_t idx(Vertex i, Vertex j) const {
    return static_cast<std::size_t>(i - 1) * n_ + (j - 1);
  }
  void check_vertex(Vertex v) const;

  int n_ = 1;
  std::vector<int> mu_;
};

}  // namespace multipark
