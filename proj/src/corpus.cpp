#include "multipark/corpus.hpp"

#include <numeric>
#include <stdexcept>

namespace multipark {

std::vector<ColoredMultigraph> all_connected_multigraphs(int n, int max_mu) {
  if (n < 1) throw std::invalid_argument("vertex count must be positive");
  if (max_mu < 0) throw std::invalid_argument("multiplicity bound must be nonnegative");
  std::vector<std::pair<Vertex, Vertex>> pairs;
  for (Vertex u = 1; u <= n; ++u)
    for (Vertex v = u + 1; v <= n; ++v) pairs.emplace_back(u, v);

  std::vector<ColoredMultigraph> out;
  std::vector<int> counts(pairs.size(), 0);
  while (true) {
    std::vector<int> mu(static_cast<std::size_t>(n) * n, 0);
    for (std::size_t k = 0; k < pairs.size(); ++k) {
      const auto [u, v] = pairs[k];
      mu[static_cast<std::size_t>(u - 1) * n + (v - 1)] = counts[k];
      mu[static_cast<std::size_t>(v - 1) * n + (u - 1)] = counts[k];
    }
    ColoredMultigraph g = ColoredMultigraph::from_multiplicity(n, std::move(mu));
    if (g.connected()) out.push_back(std::move(g));
    // odometer: last pair varies fastest
    int k = static_cast<int>(pairs.size()) - 1;
    while (k >= 0 && counts[k] == max_mu) counts[k--] = 0;
    if (k < 0) break;
    ++counts[k];
  }
  return out;
}

ColoredMultigraph random_connected_multigraph(int n, int max_mu, bool allow_loops,
                                              std::mt19937_64& rng) {
  if (n < 1) throw std::invalid_argument("vertex count must be positive");
  if (max_mu < 1) throw std::invalid_argument("multiplicity bound must be positive");
  std::vector<std::pair<Vertex, Vertex>> edges;
  for (Vertex v = 2; v <= n; ++v) {
    Vertex u = 1 + static_cast<Vertex>(rng() % (v - 1));  // random attachment tree
    edges.emplace_back(u, v);
  }
  ColoredMultigraph g = ColoredMultigraph::from_edge_list(n, edges);
  const int extras = static_cast<int>(rng() % 3);
  for (int k = 0; k < extras; ++k) {
    if (allow_loops && rng() % 4 == 0) {
      Vertex i = 1 + static_cast<Vertex>(rng() % n);
      if (g.loops_at(i) < max_mu) g = g.add_edge(i, i);
      continue;
    }
    Vertex u = 1 + static_cast<Vertex>(rng() % n);
    Vertex v = 1 + static_cast<Vertex>(rng() % (n - 1));
    if (v >= u) ++v;
    if (g.mu(u, v) < max_mu) g = g.add_edge(u, v);
  }
  return g;
}

std::vector<int> random_ranking_images(int n, std::mt19937_64& rng) {
  std::vector<int> images(n);
  std::iota(images.begin(), images.end(), 1);
  for (int i = n - 1; i > 0; --i) {
    int j = static_cast<int>(rng() % (i + 1));
    std::swap(images[i], images[j]);
  }
  return images;
}

}  // namespace multipark
