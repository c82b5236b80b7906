#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <stdexcept>

#include "multipark/corpus.hpp"
#include "multipark/multigraph.hpp"
#include "test_util.hpp"

using namespace multipark;
using namespace multipark::testutil;

TEST_CASE("from_edge_list builds canonical multiplicities") {
  ColoredMultigraph k3 = triangle();
  CHECK(k3.vertex_count() == 3);
  CHECK(k3.mu(1, 2) == 1);
  CHECK(k3.mu(2, 1) == 1);
  CHECK(k3.edge_count() == 3);

  ColoredMultigraph d = double_edge();
  CHECK(d.mu(1, 2) == 2);
  CHECK(d.has_edge(EdgeRef(1, 2, 0)));
  CHECK(d.has_edge(EdgeRef(1, 2, 1)));
  CHECK_FALSE(d.has_edge(EdgeRef(1, 2, 2)));

  ColoredMultigraph one = single_vertex();
  CHECK(one.vertex_count() == 1);
  CHECK(one.edge_count() == 0);
  CHECK(one.connected());
}

TEST_CASE("from_edge_list rejects bad input") {
  CHECK_THROWS_AS(ColoredMultigraph::from_edge_list(0, {}), std::invalid_argument);
  CHECK_THROWS_AS(ColoredMultigraph::from_edge_list(2, {{1, 3}}), std::invalid_argument);
  CHECK_THROWS_AS(ColoredMultigraph::from_edge_list(2, {{0, 1}}), std::invalid_argument);
}

TEST_CASE("degrees count loops twice") {
  ColoredMultigraph g = make_graph(2, {{1, 2}, {1, 1}});
  CHECK(g.deg(1) == 3);
  CHECK(g.deg(2) == 1);
  CHECK(g.loops_at(1) == 1);
  CHECK_FALSE(g.loop_free());
  // handshake: sum of degrees = 2|E|
  CHECK(g.deg(1) + g.deg(2) == 2 * g.edge_count());
}

TEST_CASE("outdeg counts edges leaving I with multiplicity") {
  ColoredMultigraph k3 = triangle();
  CHECK(k3.outdeg(VertexSet::of({1, 2}), 1) == 1);
  CHECK(k3.outdeg(VertexSet::of({1}), 1) == 2);
  CHECK(double_edge().outdeg(VertexSet::of({1}), 1) == 2);
  CHECK_THROWS_AS(k3.outdeg(VertexSet::of({2, 3}), 1), std::invalid_argument);
}

TEST_CASE("indeg counts edges inside I and requires loop-free") {
  ColoredMultigraph k3 = triangle();
  CHECK(k3.indeg(VertexSet::of({1, 2}), 1) == 1);
  CHECK(k3.indeg(VertexSet::of({1}), 1) == 0);
  CHECK(k3.indeg(VertexSet::of({1, 2, 3}), 2) == k3.deg(2));
  CHECK_THROWS_AS(k3.indeg(VertexSet::of({2}), 1), std::invalid_argument);
  ColoredMultigraph loopy = make_graph(2, {{1, 2}, {2, 2}});
  CHECK_THROWS_AS(loopy.indeg(VertexSet::of({1, 2}), 1), std::invalid_argument);
}

TEST_CASE("indeg + outdeg = deg on loop-free graphs") {
  std::mt19937_64 rng(7);
  for (const ColoredMultigraph& g : all_connected_multigraphs(4, 2)) {
    const int n = g.vertex_count();
    for (std::uint64_t bits = 1; bits < (1u << n); ++bits) {
      VertexSet I(bits);
      for (Vertex i = 1; i <= n; ++i)
        if (I.contains(i)) CHECK(g.indeg(I, i) + g.outdeg(I, i) == g.deg(i));
    }
  }
}

TEST_CASE("delete_edge recompacts colors") {
  ColoredMultigraph d = double_edge();
  ColoredMultigraph after0 = d.delete_edge(EdgeRef(1, 2, 0));
  ColoredMultigraph after1 = d.delete_edge(EdgeRef(1, 2, 1));
  CHECK(after0 == after1);
  CHECK(after0.mu(1, 2) == 1);
  CHECK(after0.has_edge(EdgeRef(1, 2, 0)));

  ColoredMultigraph path = triangle().delete_edge(EdgeRef(1, 2, 0));
  CHECK(path.mu(1, 2) == 0);
  CHECK(path.mu(1, 3) == 1);
  CHECK(path.mu(2, 3) == 1);
  CHECK(path.connected());

  CHECK_THROWS_AS(d.delete_edge(EdgeRef(1, 2, 2)), std::invalid_argument);
}

TEST_CASE("delete then re-add restores multiplicities") {
  ColoredMultigraph g = make_graph(3, {{1, 2}, {1, 2}, {2, 3}, {3, 3}});
  CHECK(g.delete_edge(EdgeRef(1, 2, 1)).add_edge(1, 2) == g);
  CHECK(g.delete_edge(EdgeRef(3, 3, 0)).add_edge(3, 3) == g);
}

TEST_CASE("contract_edge merges into the larger label and recompacts") {
  ColoredMultigraph k3c = triangle().contract_edge(EdgeRef(1, 2, 0));
  CHECK(k3c.vertex_count() == 2);
  CHECK(k3c.mu(1, 2) == 2);
  CHECK(k3c.loop_free());

  ColoredMultigraph dc = double_edge().contract_edge(EdgeRef(1, 2, 0));
  CHECK(dc.vertex_count() == 1);
  CHECK(dc.loops_at(1) == 1);

  ColoredMultigraph pc = path3().contract_edge(EdgeRef(1, 2, 0));
  CHECK(pc.vertex_count() == 2);
  CHECK(pc.mu(1, 2) == 1);
  CHECK(pc.edge_count() == 1);

  CHECK_THROWS_AS(make_graph(1, {{1, 1}}).contract_edge(EdgeRef(1, 1, 0)),
                  std::invalid_argument);
}

TEST_CASE("contraction drops one vertex and one edge") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 30; ++trial) {
    ColoredMultigraph g = random_connected_multigraph(5, 2, true, rng);
    for (const EdgeRef& e : g.edges()) {
      if (e.is_loop()) continue;
      ColoredMultigraph c = g.contract_edge(e);
      CHECK(c.vertex_count() == g.vertex_count() - 1);
      CHECK(c.edge_count() == g.edge_count() - 1);
    }
  }
}

TEST_CASE("loops and bridges") {
  CHECK(EdgeRef(1, 1, 0).is_loop());
  CHECK(path3().is_bridge(EdgeRef(2, 3, 0)));
  CHECK_FALSE(double_edge().is_bridge(EdgeRef(1, 2, 0)));
  CHECK_FALSE(triangle().is_bridge(EdgeRef(1, 2, 0)));
  CHECK_FALSE(make_graph(1, {{1, 1}}).is_bridge(EdgeRef(1, 1, 0)));
  CHECK_THROWS_AS(path3().is_bridge(EdgeRef(1, 3, 0)), std::invalid_argument);
}

TEST_CASE("components partition the graph") {
  ColoredMultigraph g = make_graph(5, {{1, 2}, {4, 5}});
  auto comps = g.components();
  REQUIRE(comps.size() == 3);
  CHECK(comps[0] == std::vector<Vertex>{1, 2});
  CHECK(comps[1] == std::vector<Vertex>{3});
  CHECK(comps[2] == std::vector<Vertex>{4, 5});
  CHECK_FALSE(g.connected());
}

TEST_CASE("deleting a non-bridge non-loop keeps components") {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 30; ++trial) {
    ColoredMultigraph g = random_connected_multigraph(6, 2, true, rng);
    for (const EdgeRef& e : g.edges()) {
      if (e.is_loop() || g.is_bridge(e)) continue;
      CHECK(g.delete_edge(e).components() == g.components());
    }
  }
}

TEST_CASE("induced subgraph relabels densely") {
  ColoredMultigraph g = make_graph(4, {{1, 2}, {2, 4}, {2, 4}, {3, 4}});
  ColoredMultigraph sub = g.induced({2, 4});
  CHECK(sub.vertex_count() == 2);
  CHECK(sub.mu(1, 2) == 2);
}

TEST_CASE("multiplicity keys separate distinct graphs") {
  CHECK(triangle().multiplicity_key() != path3().multiplicity_key());
  CHECK(triangle().multiplicity_key() == complete(3).multiplicity_key());
}

TEST_CASE("vertex sets") {
  VertexSet s = VertexSet::of({2, 5});
  CHECK(s.contains(2));
  CHECK_FALSE(s.contains(3));
  CHECK(s.size() == 2);
  CHECK(s.min_at_least(3) == 5);
  CHECK_FALSE(s.min_at_least(6).has_value());
  CHECK(s.elements() == std::vector<Vertex>{2, 5});
}
