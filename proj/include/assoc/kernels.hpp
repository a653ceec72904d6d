#pragma once

#include <cstddef>
#include <span>

#include "assoc/graph.hpp"
#include "assoc/triangulation.hpp"

// Data-parallel inner loops. Each kernel has an OpenMP version at namespace
// scope and a plain loop under `serial` that the tests and the benchmark
// compare against. Reductions are blocked so results do not depend on the
// thread count.
namespace assoc::kernels {

inline constexpr std::size_t kReductionBlock = 4096;

/// y = A x for the adjacency matrix of g.
void adjacency_matvec(const Graph& g, std::span<const double> x, std::span<double> y);

/// y = shift * x - A x.
void shifted_matvec(const Graph& g, double shift, std::span<const double> x,
                    std::span<double> y);

double dot(std::span<const double> a, std::span<const double> b);

/// Sum over undirected edges of (x_u + x_v)^2 (sign = +1) or (x_u - x_v)^2
/// (sign = -1).
double edge_square_sum(const Graph& g, std::span<const double> x, int sign);

/// For each triangulation, the index of its flip across each of its n-3
/// diagonals, row-major. `index_of` must map every neighbour.
template <class IndexOf>
void flip_neighbor_table(std::span<const Triangulation> vertices, const IndexOf& index_of,
                         std::span<Vertex> out);

namespace serial {

void adjacency_matvec(const Graph& g, std::span<const double> x, std::span<double> y);
void shifted_matvec(const Graph& g, double shift, std::span<const double> x,
                    std::span<double> y);
double dot(std::span<const double> a, std::span<const double> b);
double edge_square_sum(const Graph& g, std::span<const double> x, int sign);

template <class IndexOf>
void flip_neighbor_table(std::span<const Triangulation> vertices, const IndexOf& index_of,
                         std::span<Vertex> out) {
  for (std::size_t v = 0; v < vertices.size(); ++v) {
    const auto diags = vertices[v].diagonals();
    for (std::size_t k = 0; k < diags.size(); ++k) {
      out[v * diags.size() + k] = index_of(flip(vertices[v], diags[k]).result);
    }
  }
}

}  // namespace serial

template <class IndexOf>
void flip_neighbor_table(std::span<const Triangulation> vertices, const IndexOf& index_of,
                         std::span<Vertex> out) {
  const std::ptrdiff_t count = static_cast<std::ptrdiff_t>(vertices.size());
#pragma omp parallel for schedule(static)
  for (std::ptrdiff_t v = 0; v < count; ++v) {
    const auto diags = vertices[v].diagonals();
    for (std::size_t k = 0; k < diags.size(); ++k) {
      out[v * diags.size() + k] = index_of(flip(vertices[v], diags[k]).result);
    }
  }
}

}  // namespace assoc::kernels
