#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <utility>
#include <vector>

namespace assoc {

using Vertex = std::uint32_t;
using Edge = std::pair<Vertex, Vertex>;

/// Simple undirected graph in compressed adjacency form. Neighbour lists are
/// sorted, symmetric and loop-free. Immutable once built.
class Graph {
 public:
  Graph() = default;

  /// Each undirected edge listed once in either orientation. Loops, duplicates
  /// and out-of-range endpoints are rejected with an invalid-input error.
  static Graph from_edges(std::size_t vertex_count, std::span<const Edge> edges);

  /// Takes per-vertex neighbour lists that are already symmetric; sorts them
  /// and validates.
  static Graph from_adjacency(std::vector<std::vector<Vertex>> adjacency);

  std::size_t vertex_count() const noexcept { return offsets_.empty() ? 0 : offsets_.size() - 1; }
  std::size_t edge_count() const noexcept { return targets_.size() / 2; }

  std::span<const Vertex> neighbors(Vertex v) const noexcept {
    return {targets_.data() + offsets_[v], targets_.data() + offsets_[v + 1]};
  }
  std::size_t degree(Vertex v) const noexcept { return offsets_[v + 1] - offsets_[v]; }
  bool has_edge(Vertex u, Vertex v) const noexcept;

  /// Set when every vertex has the same degree.
  std::optional<int> regular_degree() const noexcept { return degree_; }

  std::span<const std::size_t> offsets() const noexcept { return offsets_; }
  std::span<const Vertex> targets() const noexcept { return targets_; }

  /// Undirected edges with u < v, sorted.
  std::vector<Edge> edges() const;

  bool operator==(const Graph& other) const {
    return offsets_ == other.offsets_ && targets_ == other.targets_;
  }

 private:
  void finalize();

  std::vector<std::size_t> offsets_{0};
  std::vector<Vertex> targets_;
  std::optional<int> degree_;
};

// Standard small graphs used as test subjects and as patterns K.
Graph cycle_graph(std::size_t m);
Graph path_graph(std::size_t m);
Graph complete_graph(std::size_t m);
Graph petersen_graph();

/// Uniform-ish random simple d-regular graph by the pairing model with
/// rejection; fully determined by the seed.
Graph random_regular_graph(std::size_t vertex_count, int degree, std::uint64_t seed);

bool validate_regular(const Graph& g, int d) noexcept;
bool is_connected(const Graph& g);
bool has_triangle(const Graph& g);

/// "# vertices=<N> degree=<d>" header, then one "u v" line per edge, u < v.
void write_edge_list(std::ostream& out, const Graph& g);

}  // namespace assoc
