#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <sstream>

#include "qgz/catalog.hpp"
#include "qgz/errors.hpp"
#include "qgz/graph.hpp"

using qgz::Graph;

TEST_CASE("from_edge_list basic construction") {
  Graph g = Graph::from_edge_list({{0, 1}});
  CHECK(g.vertex_count() == 2);
  CHECK(g.edge_count() == 1);
  CHECK(g.degree(0) == 1);
  CHECK(g.degree(1) == 1);

  Graph k23 = Graph::from_edge_list(
      {{0, 2}, {0, 3}, {0, 4}, {1, 2}, {1, 3}, {1, 4}});
  CHECK(k23.vertex_count() == 5);
  CHECK(k23.edge_count() == 6);
}

TEST_CASE("from_edge_list validation") {
  CHECK_THROWS_AS(Graph::from_edge_list({{0, 1}, {0, 1}}),
                  qgz::DuplicateEdgeError);
  CHECK_THROWS_AS(Graph::from_edge_list({{0, 1}, {1, 0}}),
                  qgz::DuplicateEdgeError);
  CHECK_THROWS_AS(Graph::from_edge_list({{1, 1}}), qgz::SelfLoopError);
  CHECK_THROWS_AS(Graph::from_edge_list({}), qgz::EmptyGraphError);
  CHECK_THROWS_AS(Graph::from_edge_list({{0, 1}, {2, 3}}),
                  qgz::DisconnectedError);
  // error messages name the offending element
  try {
    Graph::from_edge_list({{0, 1}, {2, 3}});
  } catch (const qgz::DisconnectedError& e) {
    CHECK(std::string(e.what()).find('2') != std::string::npos);
  }
}

TEST_CASE("betti number") {
  CHECK(Graph::star(5).betti_number() == 0);
  CHECK(Graph::complete_bipartite(2, 3).betti_number() == 2);
  CHECK(Graph::cycle(3).betti_number() == 1);
}

TEST_CASE("bipartiteness") {
  CHECK(Graph::complete_bipartite(2, 3).is_bipartite());
  CHECK_FALSE(Graph::cycle(3).is_bipartite());
  CHECK(Graph::from_edge_list({{0, 1}}).is_bipartite());
  CHECK(Graph::cycle(4).is_bipartite());
}

TEST_CASE("complete_bipartite families") {
  Graph k23 = Graph::complete_bipartite(2, 3);
  CHECK(k23.vertex_count() == 5);
  CHECK(k23.edge_count() == 6);
  for (const auto& [u, v] : k23.edges()) {
    CHECK(u < 2);
    CHECK(v >= 2);  // orientation first part -> second part
  }

  Graph k15 = Graph::complete_bipartite(1, 5);
  CHECK(k15.vertex_count() == 6);
  CHECK(k15.edge_count() == 5);

  Graph k11 = Graph::complete_bipartite(1, 1);
  CHECK(k11.vertex_count() == 2);
  CHECK(k11.edge_count() == 1);
}

TEST_CASE("star family") {
  Graph s5 = Graph::star(5);
  CHECK(s5.vertex_count() == 6);
  CHECK(s5.edge_count() == 5);
  CHECK(s5.degree(0) == 5);

  CHECK(Graph::star(1).vertex_count() == 2);

  Graph s2 = Graph::star(2);  // path on 3 vertices
  CHECK(s2.vertex_count() == 3);
  CHECK(s2.edge_count() == 2);
}

TEST_CASE("handshake identity on random graphs") {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 50; ++trial) {
    std::uniform_int_distribution<int> nv(2, 12);
    Graph g = qgz::random_connected_graph(rng, nv(rng));
    int degree_sum = 0;
    for (int v = 0; v < g.vertex_count(); ++v) degree_sum += g.degree(v);
    CHECK(degree_sum == 2 * g.edge_count());
  }
}

TEST_CASE("random trees have betti 0") {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 50; ++trial) {
    std::uniform_int_distribution<int> nv(2, 15);
    Graph t = qgz::random_tree(rng, nv(rng));
    CHECK(t.betti_number() == 0);
    CHECK(t.is_bipartite());
  }
}

TEST_CASE("edge-list text format") {
  std::istringstream in(
      "# a star on three edges\n"
      "\n"
      "0 1\n"
      "  0 2\n"
      "0 3\n");
  Graph g = Graph::parse_edge_list(in);
  CHECK(g.vertex_count() == 4);
  CHECK(g.edge_count() == 3);

  std::istringstream bad("0 x\n");
  CHECK_THROWS_AS(Graph::parse_edge_list(bad), qgz::GraphError);
  CHECK_THROWS_AS(Graph::load_edge_list("/nonexistent/file.edges"),
                  qgz::GraphError);
}

TEST_CASE("exhaustive catalog sanity") {
  auto g3 = qgz::all_connected_graphs(3);
  CHECK(g3.size() == 4);  // three 2-paths and the triangle
  auto g4 = qgz::all_connected_graphs(4);
  CHECK(g4.size() == 38);
  for (const Graph& g : g4) {
    CHECK(g.vertex_count() == 4);
    CHECK(g.betti_number() >= 0);
  }
}
