#include "assoc/spectra.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "assoc/kernels.hpp"

namespace assoc {

const char* to_string(Method m) noexcept {
  return m == Method::dense ? "dense" : "iterative";
}

double Spectrum::trace() const {
  double s = 0.0;
  for (double v : eigenvalues) s += v;
  return s;
}

double Spectrum::sum_of_squares() const {
  double s = 0.0;
  for (double v : eigenvalues) s += v * v;
  return s;
}

namespace {

Eigen::MatrixXd dense_adjacency(const Graph& g, const Limits& limits) {
  const std::size_t n = g.vertex_count();
  if (n > limits.dense_max_vertices) {
    throw_capacity("dense eigensolver limited to " + std::to_string(limits.dense_max_vertices) +
                   " vertices, graph has " + std::to_string(n));
  }
  if (n == 0) throw_invalid("empty graph has no spectrum");
  Eigen::MatrixXd a = Eigen::MatrixXd::Zero(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(n));
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v : g.neighbors(u)) a(u, v) = 1.0;
  }
  return a;
}

bool use_dense(const Graph& g, const SolverOptions& opts) {
  switch (opts.solver) {
    case SolverChoice::dense: return true;
    case SolverChoice::iterative: return false;
    case SolverChoice::automatic: return g.vertex_count() <= opts.auto_dense_max;
  }
  return true;
}

int require_regular(const Graph& g) {
  auto d = g.regular_degree();
  if (!d) throw_invalid("iterative eigensolver needs a regular graph");
  return *d;
}

SpectralResult from_dense(const Graph& g, const EigenPairs& pairs, std::size_t index,
                          double tol) {
  SpectralResult r;
  r.value = pairs.values[index];
  r.vector = pairs.vectors[index];
  r.residual = eigen_residual(g, r.vector, r.value);
  r.method = Method::dense;
  r.iterations = 0;
  r.tolerance = tol;
  return r;
}

}  // namespace

double eigen_residual(const Graph& g, std::span<const double> x, double lambda) {
  std::vector<double> ax(x.size());
  kernels::adjacency_matvec(g, x, ax);
  for (std::size_t k = 0; k < ax.size(); ++k) ax[k] -= lambda * x[k];
  return std::sqrt(kernels::dot(ax, ax));
}

Spectrum dense_spectrum(const Graph& g, const Limits& limits) {
  Eigen::MatrixXd a = dense_adjacency(g, limits);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(a, Eigen::EigenvaluesOnly);
  Spectrum s;
  s.eigenvalues.assign(es.eigenvalues().data(), es.eigenvalues().data() + es.eigenvalues().size());
  std::reverse(s.eigenvalues.begin(), s.eigenvalues.end());
  return s;
}

EigenPairs dense_eigenpairs(const Graph& g, const Limits& limits) {
  Eigen::MatrixXd a = dense_adjacency(g, limits);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(a);
  const Eigen::Index n = a.rows();
  EigenPairs out;
  out.values.resize(n);
  out.vectors.resize(n);
  for (Eigen::Index k = 0; k < n; ++k) {
    const Eigen::Index src = n - 1 - k;
    out.values[k] = es.eigenvalues()[src];
    out.vectors[k].assign(es.eigenvectors().col(src).data(),
                          es.eigenvectors().col(src).data() + n);
  }
  return out;
}

SpectralResult lambda_min(const Graph& g, const SolverOptions& opts) {
  const std::size_t n = g.vertex_count();
  if (n == 0) throw_invalid("empty graph has no spectrum");
  if (n == 1) {
    SpectralResult r;
    r.vector = {1.0};
    r.tolerance = opts.tolerance;
    return r;
  }
  if (use_dense(g, opts)) {
    EigenPairs pairs = dense_eigenpairs(g, opts.limits);
    return from_dense(g, pairs, n - 1, opts.tolerance);
  }
  const int d = require_regular(g);
  LinearOperator op = [&g, d](std::span<const double> x, std::span<double> y) {
    kernels::shifted_matvec(g, static_cast<double>(d), x, y);
  };
  LanczosResult lr;
  try {
    lr = lanczos_largest(op, n, {}, opts);
  } catch (const ConvergenceError& e) {
    const double estimate = static_cast<double>(d) - e.estimate();
    throw ConvergenceError("lambda_min not converged after " + std::to_string(e.iterations()) +
                               " operator applications, best estimate " + std::to_string(estimate),
                           estimate, e.residual(), e.iterations());
  }
  SpectralResult r;
  r.value = static_cast<double>(d) - lr.value;
  r.vector = std::move(lr.vector);
  r.residual = eigen_residual(g, r.vector, r.value);
  r.method = Method::iterative;
  r.iterations = lr.applications;
  r.tolerance = opts.tolerance;
  return r;
}

SpectralResult lambda_2(const Graph& g, const SolverOptions& opts) {
  const std::size_t n = g.vertex_count();
  if (n == 0) throw_invalid("empty graph has no spectrum");
  if (n == 1) throw_invalid("second eigenvalue is undefined for a single vertex");
  if (use_dense(g, opts)) {
    EigenPairs pairs = dense_eigenpairs(g, opts.limits);
    return from_dense(g, pairs, 1, opts.tolerance);
  }
  require_regular(g);
  if (!is_connected(g)) throw_invalid("iterative second eigenvalue needs a connected graph");
  std::vector<std::vector<double>> perron{std::vector<double>(n, 1.0 / std::sqrt(static_cast<double>(n)))};
  LinearOperator op = [&g](std::span<const double> x, std::span<double> y) {
    kernels::adjacency_matvec(g, x, y);
  };
  LanczosResult lr = lanczos_largest(op, n, perron, opts);
  SpectralResult r;
  r.value = lr.value;
  r.vector = std::move(lr.vector);
  r.residual = eigen_residual(g, r.vector, r.value);
  r.method = Method::iterative;
  r.iterations = lr.applications;
  r.tolerance = opts.tolerance;
  return r;
}

Spectrum cycle_spectrum(int m) {
  if (m < 3) throw_invalid("cycle length must be at least 3");
  Spectrum s;
  for (int j = 0; j < m; ++j) {
    s.eigenvalues.push_back(2.0 * std::cos(2.0 * std::numbers::pi * j / m));
  }
  std::sort(s.eigenvalues.begin(), s.eigenvalues.end(), std::greater<>());
  return s;
}

QuadraticFormCheck quadratic_form_check(const Graph& k, std::span<const double> x,
                                        double lambda_min_k) {
  auto degree = k.regular_degree();
  if (!degree) throw_invalid("pattern graph must be regular");
  if (x.size() != k.vertex_count()) {
    throw_invalid("vector has " + std::to_string(x.size()) + " entries, graph has " +
                  std::to_string(k.vertex_count()) + " vertices");
  }
  QuadraticFormCheck out;
  out.lhs = kernels::edge_square_sum(k, x, +1);
  out.rhs = (*degree + lambda_min_k) * kernels::dot(x, x);
  return out;
}

QuadraticFormCheck quadratic_form_check(const Graph& k, std::span<const double> x) {
  if (x.size() != k.vertex_count()) {
    throw_invalid("vector has " + std::to_string(x.size()) + " entries, graph has " +
                  std::to_string(k.vertex_count()) + " vertices");
  }
  return quadratic_form_check(k, x, lambda_min(k).value);
}

}  // namespace assoc
