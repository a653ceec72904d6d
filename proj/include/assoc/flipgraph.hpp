#pragma once

#include <optional>
#include <span>
#include <unordered_map>
#include <vector>

#include "assoc/error.hpp"
#include "assoc/graph.hpp"
#include "assoc/triangulation.hpp"

namespace assoc {

/// The flip graph of the n-gon together with its vertex labels. Vertex k is
/// the k-th triangulation of enumerate_triangulations(n).
class Associahedron {
 public:
  Associahedron(int n, std::vector<Triangulation> vertices, Graph graph);

  int n() const noexcept { return n_; }
  const Graph& graph() const noexcept { return graph_; }
  std::span<const Triangulation> vertices() const noexcept { return vertices_; }
  const Triangulation& vertex(Vertex v) const { return vertices_.at(v); }

  /// Index of t, or nullopt if t is not a triangulation of this n-gon.
  std::optional<Vertex> index_of(const Triangulation& t) const;

 private:
  int n_;
  std::vector<Triangulation> vertices_;
  Graph graph_;
  std::unordered_map<DiagonalMask, Vertex, DiagonalMaskHash> index_;
};

Associahedron build_associahedron(int n, const Limits& limits = {});

/// Same graph, built with the serial neighbour-table kernel.
Associahedron build_associahedron_serial(int n, const Limits& limits = {});

/// Cartesian product; vertex (a, b) has index a * |H| + b.
Graph box_product(const Graph& g, const Graph& h, const Limits& limits = {});

struct InducedSubgraph {
  Graph graph;
  /// original[k] is the host vertex that became vertex k.
  std::vector<Vertex> original;
};

/// `keep` may be in any order; the result keeps it sorted ascending.
InducedSubgraph induced_subgraph(const Graph& g, std::span<const Vertex> keep);

/// Subgraph of the flip graph induced by the triangulations containing d.
InducedSubgraph diagonal_slice(const Associahedron& a, Diagonal d);
InducedSubgraph diagonal_slice(int n, Diagonal d, const Limits& limits = {});

/// Exact isomorphism test for small graphs: colour refinement followed by
/// backtracking over refined classes.
bool is_isomorphic(const Graph& g, const Graph& h, const Limits& limits = {});

}  // namespace assoc
