#include <algorithm>
#include <numeric>
#include <sstream>
#include <vector>

#include "assoc/flipgraph.hpp"
#include "assoc/rng.hpp"
#include "doctest.h"
#include "error_kind.hpp"

using namespace assoc;
using testing::error_kind;

namespace {

Graph relabel(const Graph& g, const std::vector<Vertex>& perm) {
  std::vector<Edge> e;
  for (auto [u, v] : g.edges()) e.push_back({perm[u], perm[v]});
  return Graph::from_edges(g.vertex_count(), e);
}

std::vector<Vertex> shuffled(std::size_t n, std::uint64_t seed) {
  std::vector<Vertex> p(n);
  std::iota(p.begin(), p.end(), 0);
  Rng rng(seed);
  for (std::size_t i = n; i > 1; --i) std::swap(p[i - 1], p[rng.below(i)]);
  return p;
}

std::size_t symmetric_difference(const Triangulation& a, const Triangulation& b) {
  std::vector<Diagonal> out;
  std::set_symmetric_difference(a.diagonals().begin(), a.diagonals().end(), b.diagonals().begin(),
                                b.diagonals().end(), std::back_inserter(out));
  return out.size();
}

}  // namespace

TEST_CASE("graph construction validates input") {
  const std::vector<Edge> loop = {{0, 0}};
  const std::vector<Edge> dup = {{0, 1}, {1, 0}};
  const std::vector<Edge> far = {{0, 5}};
  CHECK(error_kind([&] { Graph::from_edges(3, loop); }) == ErrorKind::invalid_input);
  CHECK(error_kind([&] { Graph::from_edges(3, dup); }) == ErrorKind::invalid_input);
  CHECK(error_kind([&] { Graph::from_edges(3, far); }) == ErrorKind::invalid_input);
  CHECK(error_kind([] { Graph::from_adjacency({{1}, {}}); }) == ErrorKind::invalid_input);
  const Graph g = Graph::from_adjacency({{2, 1}, {0}, {0}});
  CHECK(g.neighbors(0)[0] == 1);
  CHECK(g.edge_count() == 2);
  CHECK_FALSE(g.regular_degree());
}

TEST_CASE("standard graphs") {
  CHECK(validate_regular(cycle_graph(5), 2));
  CHECK_FALSE(validate_regular(complete_graph(2), 3));
  CHECK(validate_regular(petersen_graph(), 3));
  CHECK(petersen_graph().edge_count() == 15);
  CHECK_FALSE(has_triangle(petersen_graph()));
  CHECK(has_triangle(complete_graph(3)));
  CHECK(path_graph(4).edge_count() == 3);
  CHECK(is_connected(path_graph(4)));
  CHECK_FALSE(is_connected(Graph::from_edges(3, std::vector<Edge>{{0, 1}})));
}

TEST_CASE("random regular graphs are simple, regular and seed determined") {
  for (std::uint64_t seed = 1; seed <= 10; ++seed) {
    const Graph g = random_regular_graph(20, 3, seed);
    CHECK(validate_regular(g, 3));
    CHECK(g.vertex_count() == 20);
    CHECK(g == random_regular_graph(20, 3, seed));
  }
  CHECK_FALSE(random_regular_graph(20, 3, 1) == random_regular_graph(20, 3, 2));
  CHECK(error_kind([] { random_regular_graph(5, 3, 1); }) == ErrorKind::invalid_input);
}

TEST_CASE("edge list export") {
  std::ostringstream out;
  write_edge_list(out, cycle_graph(3));
  CHECK(out.str() == "# vertices=3 degree=2\n0 1\n0 2\n1 2\n");
}

TEST_CASE("small flip graphs") {
  const Associahedron a4 = build_associahedron(4);
  CHECK(a4.graph().vertex_count() == 2);
  CHECK(a4.graph().edge_count() == 1);

  const Associahedron a5 = build_associahedron(5);
  CHECK(validate_regular(a5.graph(), 2));
  CHECK(is_isomorphic(a5.graph(), cycle_graph(5)));

  const Associahedron a6 = build_associahedron(6);
  CHECK(a6.graph().vertex_count() == 14);
  CHECK(validate_regular(a6.graph(), 3));
  CHECK(a6.graph().edge_count() == 21);

  CHECK(validate_regular(build_associahedron(7).graph(), 4));
  CHECK(error_kind([] { build_associahedron(3); }) == ErrorKind::out_of_range);
}

TEST_CASE("flip graph invariants") {
  for (int n = 4; n <= 11; ++n) {
    const Associahedron a = build_associahedron(n);
    const Graph& g = a.graph();
    CHECK(g.vertex_count() == catalan(n - 2));
    CHECK(g.regular_degree() == n - 3);
    CHECK(is_connected(g));
    for (Vertex v = 0; v < g.vertex_count(); ++v) CHECK(a.index_of(a.vertex(v)) == v);
  }
}

TEST_CASE("edges are exactly the pairs differing in one diagonal") {
  for (int n = 5; n <= 8; ++n) {
    const Associahedron a = build_associahedron(n);
    const auto all = a.vertices();
    std::size_t pairs = 0;
    for (Vertex u = 0; u < all.size(); ++u) {
      for (Vertex v = u + 1; v < all.size(); ++v) {
        const bool adjacent = symmetric_difference(all[u], all[v]) == 2;
        pairs += adjacent;
        CHECK(a.graph().has_edge(u, v) == adjacent);
      }
    }
    CHECK(pairs == a.graph().edge_count());
  }
}

TEST_CASE("serial and parallel builders agree") {
  for (int n = 4; n <= 11; ++n) {
    CHECK(build_associahedron(n).graph() == build_associahedron_serial(n).graph());
  }
}

TEST_CASE("index_of rejects foreign triangulations") {
  const Associahedron a = build_associahedron(6);
  CHECK_FALSE(a.index_of(Triangulation::parse(7, "1-3,1-4,1-5,1-6")));
}

TEST_CASE("box products") {
  const Graph k2 = complete_graph(2);
  CHECK(is_isomorphic(box_product(k2, k2), cycle_graph(4)));
  const Graph prism = box_product(cycle_graph(5), k2);
  CHECK(prism.vertex_count() == 10);
  CHECK(validate_regular(prism, 3));
  CHECK(prism.has_edge(0 * 2 + 0, 0 * 2 + 1));
  CHECK(prism.has_edge(0 * 2 + 1, 1 * 2 + 1));
  CHECK_FALSE(prism.has_edge(0, 3));
  Limits lim;
  lim.product_max_vertices = 9;
  CHECK(error_kind([&] { box_product(cycle_graph(5), k2, lim); }) == ErrorKind::capacity);
}

TEST_CASE("induced subgraphs") {
  const Graph p = petersen_graph();
  std::vector<Vertex> all(10);
  std::iota(all.begin(), all.end(), 0);
  CHECK(induced_subgraph(p, all).graph == p);

  const std::vector<Vertex> one = {7};
  const InducedSubgraph s1 = induced_subgraph(p, one);
  CHECK(s1.graph.vertex_count() == 1);
  CHECK(s1.graph.edge_count() == 0);

  const std::vector<Vertex> outer = {4, 2, 0, 1, 3};
  const InducedSubgraph s = induced_subgraph(p, outer);
  CHECK(s.original == std::vector<Vertex>{0, 1, 2, 3, 4});
  for (Vertex u = 0; u < 5; ++u) {
    for (Vertex v = 0; v < 5; ++v) CHECK(s.graph.has_edge(u, v) == p.has_edge(u, v));
  }
  const std::vector<Vertex> bad = {0, 10};
  CHECK(error_kind([&] { induced_subgraph(p, bad); }) == ErrorKind::invalid_input);
}

TEST_CASE("diagonal slices") {
  const InducedSubgraph s = diagonal_slice(6, {1, 3});
  CHECK(s.graph.vertex_count() == 5);
  CHECK(is_isomorphic(s.graph, cycle_graph(5)));

  const Graph a4 = build_associahedron(4).graph();
  const Graph a6 = build_associahedron(6).graph();
  CHECK(is_isomorphic(diagonal_slice(8, {1, 4}).graph, box_product(a4, a6)));
  CHECK(error_kind([] { diagonal_slice(6, {1, 2}); }) == ErrorKind::invalid_input);
}

TEST_CASE("every slice along (1, k) is a product of smaller flip graphs") {
  for (int n = 5; n <= 9; ++n) {
    const Associahedron a = build_associahedron(n);
    for (int k = 3; k <= n - 1; ++k) {
      const Graph left = k == 3 ? Graph::from_edges(1, {}) : build_associahedron(k).graph();
      const int rest = n - k + 2;
      const Graph right = rest == 3 ? Graph::from_edges(1, {}) : build_associahedron(rest).graph();
      CHECK(is_isomorphic(diagonal_slice(a, {1, k}).graph, box_product(left, right)));
    }
  }
}

TEST_CASE("isomorphism test") {
  CHECK(is_isomorphic(cycle_graph(5), build_associahedron(5).graph()));
  CHECK_FALSE(is_isomorphic(cycle_graph(5), path_graph(5)));
  CHECK_FALSE(is_isomorphic(cycle_graph(5), cycle_graph(6)));

  // Pairs that colour refinement cannot separate.
  const std::vector<Edge> two_triangles = {{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}};
  CHECK_FALSE(is_isomorphic(cycle_graph(6), Graph::from_edges(6, two_triangles)));
  CHECK_FALSE(is_isomorphic(petersen_graph(), box_product(cycle_graph(5), complete_graph(2))));

  const Graph a7 = build_associahedron(7).graph();
  CHECK(is_isomorphic(a7, relabel(a7, shuffled(a7.vertex_count(), 9))));
  const Graph p = petersen_graph();
  CHECK(is_isomorphic(p, relabel(p, shuffled(10, 4))));

  Limits lim;
  lim.isomorphism_max_vertices = 10;
  CHECK(error_kind([&] { is_isomorphic(a7, a7, lim); }) == ErrorKind::capacity);
}
