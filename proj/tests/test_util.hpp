#pragma once

#include <string>
#include <utility>
#include <vector>

#include "multipark/multigraph.hpp"

namespace multipark::testutil {

inline ColoredMultigraph make_graph(int n, std::vector<std::pair<Vertex, Vertex>> pairs) {
  return ColoredMultigraph::from_edge_list(n, pairs);
}

inline ColoredMultigraph triangle() { return make_graph(3, {{1, 2}, {1, 3}, {2, 3}}); }

inline ColoredMultigraph path3() { return make_graph(3, {{1, 2}, {2, 3}}); }

inline ColoredMultigraph double_edge() { return make_graph(2, {{1, 2}, {1, 2}}); }

inline ColoredMultigraph single_vertex() { return make_graph(1, {}); }

inline ColoredMultigraph complete(int n) {
  std::vector<std::pair<Vertex, Vertex>> pairs;
  for (Vertex u = 1; u <= n; ++u)
    for (Vertex v = u + 1; v <= n; ++v) pairs.emplace_back(u, v);
  return make_graph(n, pairs);
}

}  // namespace multipark::testutil
