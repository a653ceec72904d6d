#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "assoc/error.hpp"
#include "assoc/flipgraph.hpp"
#include "assoc/graph.hpp"
#include "assoc/triangulation.hpp"

namespace assoc {

/// Pentagons through t: sum over dual-tree nodes of C(d_v, 2), which equals
/// n - 6 + (number of ears).
std::int64_t pentagon_count_vertex_formula(const Triangulation& t);

/// Brute force: distinct 5-cycles of g through v.
std::int64_t pentagon_count_vertex_oracle(const Graph& g, Vertex v, const Limits& limits = {});

/// Pentagons through the flip edge t--t2: sides of the flip quadrilateral that
/// are diagonals rather than polygon sides.
std::int64_t pentagon_count_edge(const Triangulation& t, const Triangulation& t2);

/// Brute force: distinct 5-cycles of g through the edge uv.
std::int64_t pentagon_count_edge_oracle(const Graph& g, Vertex u, Vertex v,
                                        const Limits& limits = {});

/// Total number of 5-cycles in g.
std::int64_t count_five_cycles(const Graph& g, const Limits& limits = {});

struct HexagonCount {
  std::int64_t p4 = 0;
  std::int64_t star = 0;
  std::int64_t total() const noexcept { return p4 + star; }
};

/// Connected 4-node subtrees of the dual tree: paths P4 and stars K_{1,3}.
HexagonCount hexagon_count_vertex_formula(const Triangulation& t);

/// Counts triples of diagonals of t whose removal leaves a hexagonal face, by
/// checking that exactly C_4 = 14 triangulations keep the other n - 6.
std::int64_t hexagon_count_vertex_oracle(std::span<const Triangulation> all,
                                         const Triangulation& t);
std::int64_t hexagon_count_vertex_oracle(int n, const Triangulation& t,
                                         const Limits& limits = {});

/// Exact number of hexagonal sub-flip-graphs through the edge t--t2: the flip
/// quadrilateral extended by two triangles of the common dissection, either
/// one on each of two sides or a chain of two on one side.
std::int64_t hexagon_count_edge(const Triangulation& t, const Triangulation& t2);

/// Independent count for hexagon_count_edge by enumeration.
std::int64_t hexagon_count_edge_oracle(std::span<const Triangulation> all,
                                       const Triangulation& t, const Triangulation& t2);

struct VertexCensus {
  Vertex vertex = 0;
  int ears = 0;
  std::int64_t pentagon_formula = 0;
  std::optional<std::int64_t> pentagon_oracle;
  HexagonCount hexagon;
  std::optional<std::int64_t> hexagon_oracle;
};

struct EdgeCensus {
  Vertex u = 0;
  Vertex v = 0;
  std::int64_t pentagons = 0;
  std::optional<std::int64_t> pentagon_oracle;
  std::int64_t hexagons = 0;
  std::optional<std::int64_t> hexagon_oracle;
};

struct CensusReport {
  int n = 0;
  std::vector<VertexCensus> per_vertex;
  std::vector<EdgeCensus> per_edge;

  std::int64_t min_pentagon_vertex = 0;
  std::int64_t max_pentagon_edge = 0;
  std::int64_t min_pentagon_edge = 0;
  std::int64_t min_hexagon_vertex = 0;
  std::int64_t min_hexagon_edge = 0;
  std::int64_t max_hexagon_edge = 0;

  /// True when every oracle that was run agrees with its formula.
  bool consistent() const noexcept;
};

/// Per-vertex and per-edge counts over the whole flip graph. Oracles are
/// optional because they dominate the cost.
CensusReport run_census(const Associahedron& a, bool with_oracle,
                        const Limits& limits = {});

}  // namespace assoc
