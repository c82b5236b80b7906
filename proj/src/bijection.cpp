#include "multipark/bijection.hpp"

#include <algorithm>
#include <bit>
#include <climits>
#include <cstdint>
#include <numeric>
#include <stdexcept>

namespace multipark {

VertexRanking VertexRanking::identity(int n) {
  std::vector<int> rank(n);
  std::iota(rank.begin(), rank.end(), 1);
  return VertexRanking(std::move(rank));
}

VertexRanking VertexRanking::reversed(int n) {
  std::vector<int> rank(n);
  for (int v = 1; v <= n; ++v) rank[v - 1] = n + 1 - v;
  return VertexRanking(std::move(rank));
}

VertexRanking VertexRanking::from_images(std::vector<int> images) {
  const int n = static_cast<int>(images.size());
  if (n == 0) throw std::invalid_argument("ranking must not be empty");
  std::vector<char> seen(n + 1, 0);
  for (int r : images) {
    if (r < 1 || r > n || seen[r])
      throw std::invalid_argument("ranking must be a permutation of 1..n");
    seen[r] = 1;
  }
  return VertexRanking(std::move(images));
}

int ProcessOrder::position(Vertex v) const {
  for (std::size_t i = 0; i < pi.size(); ++i)
    if (pi[i] == v) return static_cast<int>(i + 1);
  throw std::invalid_argument("vertex not in the order");
}

namespace detail {

BurnOutcome burn(const ColoredMultigraph& G, const MultiparkingFunction& f,
                 const VertexRanking& tau) {
  const int n = G.vertex_count();
  if (static_cast<int>(f.values.size()) != n)
    throw std::invalid_argument("function length does not match vertex count");
  if (f.m < 1 || f.m > n) throw std::invalid_argument("threshold m out of range");
  if (tau.size() != n) throw std::invalid_argument("ranking size does not match vertex count");
  if (!G.connected()) throw std::invalid_argument("graph must be connected");

  const auto& mu = G.mu_table();
  const std::uint64_t all = VertexSet::full(n).bits();
  const std::uint64_t at_least_m = all & ~((std::uint64_t{1} << (f.m - 1)) - 1);

  std::vector<int> val(f.values);
  std::uint64_t frontier = 0, touched = 0;
  std::vector<EdgeRef> edges;
  std::vector<Vertex> order;
  order.reserve(n);

  if (val[f.m - 1] != -1) return {};  // the first component start must be a root
  frontier = std::uint64_t{1} << (f.m - 1);
  touched = frontier;

  for (int step = 0; step < n; ++step) {
    // frontier vertex of least rank
    int v = -1, best = INT_MAX;
    for (std::uint64_t b = frontier; b; b &= b - 1) {
      int w = std::countr_zero(b);
      if (tau.rank(w + 1) < best) {
        best = tau.rank(w + 1);
        v = w;
      }
    }
    frontier &= ~(std::uint64_t{1} << v);
    order.push_back(v + 1);

    // classify the untouched vertices against the pre-step values
    const std::uint64_t fresh = all & ~touched;
    for (std::uint64_t b = fresh; b; b &= b - 1) {
      int w = std::countr_zero(b);
      int m_wv = mu[static_cast<std::size_t>(w) * n + v];
      if (m_wv == 0) continue;
      if (val[w] >= 0 && val[w] < m_wv) {
        edges.emplace_back(w + 1, v + 1, val[w]);  // color frozen at attach time
        frontier |= std::uint64_t{1} << w;
        touched |= std::uint64_t{1} << w;
      } else if (val[w] >= m_wv) {
        val[w] -= m_wv;
      }
    }

    if (frontier == 0 && step + 1 < n) {
      std::uint64_t unprocessed = all & ~touched;
      std::uint64_t ge = unprocessed & at_least_m;
      if (!ge) return {};  // no restart vertex reaches m
      int u = std::countr_zero(ge);
      if (val[u] != -1) return {};  // restart vertex is not a root
      frontier |= std::uint64_t{1} << u;
      touched |= std::uint64_t{1} << u;
    }
  }

  std::sort(edges.begin(), edges.end());
  return {true, ColorForest{n, f.m, std::move(edges)}, ProcessOrder{std::move(order)}};
}

}  // namespace detail

PhiResult phi(const ColoredMultigraph& G, const MultiparkingFunction& f,
              const VertexRanking& tau) {
  detail::BurnOutcome out = detail::burn(G, f, tau);
  if (!out.valid) throw std::domain_error("not a multiparking function");
  return {std::move(out.forest), std::move(out.order)};
}

namespace {

struct Dsu {
  std::vector<int> parent;
  explicit Dsu(int n) : parent(n + 1) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int v) {
    while (parent[v] != v) v = parent[v] = parent[parent[v]];
    return v;
  }
  bool unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent[a] = b;
    return true;
  }
};

}  // namespace

void validate_forest(const ColoredMultigraph& G, const ColorForest& F) {
  const int n = G.vertex_count();
  if (F.n != n) throw std::domain_error("forest vertex count does not match the graph");
  if (F.m < 1 || F.m > n) throw std::domain_error("forest threshold m out of range");
  Dsu dsu(n);
  std::vector<char> pair_used(static_cast<std::size_t>(n) * n, 0);
  for (const EdgeRef& e : F.edges) {
    if (e.u < 1 || e.v > n) throw std::domain_error("forest edge endpoint out of range");
    if (e.is_loop()) throw std::domain_error("forest contains a loop");
    if (!G.has_edge(e)) throw std::domain_error("forest edge is not an edge of the graph");
    std::size_t p = static_cast<std::size_t>(e.u - 1) * n + (e.v - 1);
    if (pair_used[p]) throw std::domain_error("forest contains parallel edges");
    pair_used[p] = 1;
    if (!dsu.unite(e.u, e.v)) throw std::domain_error("forest contains a cycle");
  }
  std::vector<Vertex> comp_max(n + 1, 0);
  for (Vertex v = 1; v <= n; ++v) comp_max[dsu.find(v)] = std::max(comp_max[dsu.find(v)], v);
  for (Vertex v = 1; v <= n; ++v)
    if (dsu.find(v) == v && comp_max[v] < F.m)
      throw std::domain_error("forest component has no vertex reaching m");
}

bool is_valid_forest(const ColoredMultigraph& G, const ColorForest& F) {
  try {
    validate_forest(G, F);
    return true;
  } catch (const std::domain_error&) {
    return false;
  }
}

ForestTraversal traverse_forest(const ColoredMultigraph& G, const ColorForest& F,
                                const VertexRanking& tau) {
  validate_forest(G, F);
  const int n = G.vertex_count();
  if (tau.size() != n) throw std::invalid_argument("ranking size does not match vertex count");

  std::vector<std::vector<std::pair<Vertex, int>>> adj(n + 1);
  for (const EdgeRef& e : F.edges) {
    adj[e.u].emplace_back(e.v, e.color);
    adj[e.v].emplace_back(e.u, e.color);
  }

  ForestTraversal t;
  t.pos.assign(n, 0);
  t.pre.assign(n, 0);
  t.tree_color.assign(n, -1);
  t.n_count.assign(n, 0);
  t.f = MultiparkingFunction{F.m, std::vector<int>(n, 0)};

  VertexSet visited, frontier;
  t.order.pi.reserve(n);

  auto visit = [&](Vertex v, Vertex from, int color) {
    t.order.pi.push_back(v);
    t.pos[v - 1] = static_cast<int>(t.order.pi.size());
    visited.add(v);
    frontier.remove(v);
    t.pre[v - 1] = from;
    t.tree_color[v - 1] = color;
    if (from == 0) {
      t.roots.add(v);
      ++t.sigma;
    }
    for (const auto& [w, c] : adj[v])
      if (!visited.contains(w)) frontier.add(w);
  };

  visit(F.m, 0, -1);
  while (static_cast<int>(t.order.pi.size()) < n) {
    if (frontier.empty()) {
      // completed components only; restart at the least unvisited vertex >= m
      VertexSet unvisited(VertexSet::full(n).bits() & ~visited.bits());
      auto u = unvisited.min_at_least(F.m);
      if (!u) throw std::logic_error("validated forest lost its restart vertex");
      visit(*u, 0, -1);
      continue;
    }
    int best = INT_MAX;
    Vertex v = 0;
    for (std::uint64_t b = frontier.bits(); b; b &= b - 1) {
      Vertex w = std::countr_zero(b) + 1;
      if (tau.rank(w) < best) {
        best = tau.rank(w);
        v = w;
      }
    }
    Vertex from = 0;
    int color = -1;
    for (const auto& [w, c] : adj[v])
      if (visited.contains(w)) {
        from = w;
        color = c;
        break;  // the visited neighbor is unique in a forest traversal
      }
    visit(v, from, color);
  }

  for (Vertex v = 1; v <= n; ++v) {
    if (t.roots.contains(v)) {
      t.f.values[v - 1] = -1;
      continue;
    }
    const int pre_pos = t.pos[t.pre[v - 1] - 1];
    int count = 0;
    for (Vertex j = 1; j <= n; ++j)
      if (t.pos[j - 1] < pre_pos) count += G.mu(v, j);
    t.n_count[v - 1] = count;
    t.f.values[v - 1] = t.tree_color[v - 1] + count;
  }
  return t;
}

PsiResult psi(const ColoredMultigraph& G, const ColorForest& F, const VertexRanking& tau) {
  ForestTraversal t = traverse_forest(G, F, tau);
  return {std::move(t.f), std::move(t.order)};
}

std::vector<ColorForest> enumerate_color_forests(const ColoredMultigraph& G, Vertex m) {
  const int n = G.vertex_count();
  if (m < 1 || m > n) throw std::invalid_argument("threshold m out of range");
  if (!G.connected()) throw std::invalid_argument("graph must be connected");

  std::vector<std::pair<Vertex, Vertex>> pairs;
  for (Vertex u = 1; u <= n; ++u)
    for (Vertex v = u + 1; v <= n; ++v)
      if (G.mu(u, v) > 0) pairs.emplace_back(u, v);

  std::vector<ColorForest> out;
  std::vector<EdgeRef> edges;

  auto emit_if_valid = [&](Dsu& dsu) {
    std::vector<Vertex> comp_max(n + 1, 0);
    for (Vertex v = 1; v <= n; ++v) comp_max[dsu.find(v)] = std::max(comp_max[dsu.find(v)], v);
    for (Vertex v = 1; v <= n; ++v)
      if (dsu.find(v) == v && comp_max[v] < m) return;
    out.push_back(ColorForest{n, m, edges});
  };

  auto rec = [&](auto&& self, std::size_t idx, Dsu dsu) -> void {
    if (idx == pairs.size()) {
      emit_if_valid(dsu);
      return;
    }
    self(self, idx + 1, dsu);  // skip the pair
    const auto [u, v] = pairs[idx];
    if (dsu.find(u) == dsu.find(v)) return;  // would close a cycle
    Dsu merged = dsu;
    merged.unite(u, v);
    for (int c = 0; c < G.mu(u, v); ++c) {
      edges.emplace_back(u, v, c);
      self(self, idx + 1, merged);
      edges.pop_back();
    }
  };
  rec(rec, 0, Dsu(n));
  return out;
}

CorollaryStats corollary_stats(const ColoredMultigraph& G, const ColorForest& F,
                               const VertexRanking& tau) {
  ForestTraversal t = traverse_forest(G, F, tau);
  CorollaryStats s;
  s.sigma = t.sigma;
  for (Vertex v = 1; v <= G.vertex_count(); ++v) {
    if (!t.roots.contains(v)) {
      s.color_sum += t.tree_color[v - 1];
      s.n_sum += t.n_count[v - 1];
    }
    s.f_sum += t.f.values[v - 1];
  }
  return s;
}

}  // namespace multipark
