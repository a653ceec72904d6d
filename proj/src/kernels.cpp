#include "assoc/kernels.hpp"

#include <algorithm>
#include <vector>

namespace assoc::kernels {

namespace serial {

void adjacency_matvec(const Graph& g, std::span<const double> x, std::span<double> y) {
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    double s = 0.0;
    for (Vertex w : g.neighbors(v)) s += x[w];
    y[v] = s;
  }
}

void shifted_matvec(const Graph& g, double shift, std::span<const double> x,
                    std::span<double> y) {
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    double s = 0.0;
    for (Vertex w : g.neighbors(v)) s += x[w];
    y[v] = shift * x[v] - s;
  }
}

double dot(std::span<const double> a, std::span<const double> b) {
  // Same blocking as the parallel version so both agree bit for bit.
  double total = 0.0;
  for (std::size_t start = 0; start < a.size(); start += kReductionBlock) {
    const std::size_t end = std::min(a.size(), start + kReductionBlock);
    double s = 0.0;
    for (std::size_t k = start; k < end; ++k) s += a[k] * b[k];
    total += s;
  }
  return total;
}

double edge_square_sum(const Graph& g, std::span<const double> x, int sign) {
  const std::size_t n = g.vertex_count();
  double total = 0.0;
  for (std::size_t start = 0; start < n; start += kReductionBlock) {
    const std::size_t end = std::min(n, start + kReductionBlock);
    double s = 0.0;
    for (std::size_t u = start; u < end; ++u) {
      for (Vertex v : g.neighbors(static_cast<Vertex>(u))) {
        if (v <= u) continue;
        const double t = x[u] + sign * x[v];
        s += t * t;
      }
    }
    total += s;
  }
  return total;
}

}  // namespace serial

void adjacency_matvec(const Graph& g, std::span<const double> x, std::span<double> y) {
  const std::ptrdiff_t n = static_cast<std::ptrdiff_t>(g.vertex_count());
  const auto offsets = g.offsets();
  const auto targets = g.targets();
#pragma omp parallel for schedule(static)
  for (std::ptrdiff_t v = 0; v < n; ++v) {
    double s = 0.0;
    for (std::size_t k = offsets[v]; k < offsets[v + 1]; ++k) s += x[targets[k]];
    y[v] = s;
  }
}

void shifted_matvec(const Graph& g, double shift, std::span<const double> x,
                    std::span<double> y) {
  const std::ptrdiff_t n = static_cast<std::ptrdiff_t>(g.vertex_count());
  const auto offsets = g.offsets();
  const auto targets = g.targets();
#pragma omp parallel for schedule(static)
  for (std::ptrdiff_t v = 0; v < n; ++v) {
    double s = 0.0;
    for (std::size_t k = offsets[v]; k < offsets[v + 1]; ++k) s += x[targets[k]];
    y[v] = shift * x[v] - s;
  }
}

double dot(std::span<const double> a, std::span<const double> b) {
  const std::size_t blocks = (a.size() + kReductionBlock - 1) / kReductionBlock;
  std::vector<double> partial(blocks, 0.0);
#pragma omp parallel for schedule(static)
  for (std::ptrdiff_t blk = 0; blk < static_cast<std::ptrdiff_t>(blocks); ++blk) {
    const std::size_t start = blk * kReductionBlock;
    const std::size_t end = std::min(a.size(), start + kReductionBlock);
    double s = 0.0;
    for (std::size_t k = start; k < end; ++k) s += a[k] * b[k];
    partial[blk] = s;
  }
  double total = 0.0;
  for (double p : partial) total += p;
  return total;
}

double edge_square_sum(const Graph& g, std::span<const double> x, int sign) {
  const std::size_t n = g.vertex_count();
  const std::size_t blocks = (n + kReductionBlock - 1) / kReductionBlock;
  std::vector<double> partial(blocks, 0.0);
#pragma omp parallel for schedule(static)
  for (std::ptrdiff_t blk = 0; blk < static_cast<std::ptrdiff_t>(blocks); ++blk) {
    const std::size_t start = blk * kReductionBlock;
    const std::size_t end = std::min(n, start + kReductionBlock);
    double s = 0.0;
    for (std::size_t u = start; u < end; ++u) {
      for (Vertex v : g.neighbors(static_cast<Vertex>(u))) {
        if (v <= u) continue;
        const double t = x[u] + sign * x[v];
        s += t * t;
      }
    }
    partial[blk] = s;
  }
  double total = 0.0;
  for (double p : partial) total += p;
  return total;
}

}  // namespace assoc::kernels
