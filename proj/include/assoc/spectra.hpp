#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <vector>

#include "assoc/error.hpp"
#include "assoc/graph.hpp"

namespace assoc {

enum class Method { dense, iterative };
enum class SolverChoice { automatic, dense, iterative };

const char* to_string(Method m) noexcept;

struct SpectralResult {
  double value = 0.0;
  /// ||A x - value x|| for the returned unit vector x.
  double residual = 0.0;
  Method method = Method::dense;
  int iterations = 0;
  double tolerance = 0.0;
  std::vector<double> vector;
};

/// Eigenvalues sorted descending, repeated by multiplicity.
struct Spectrum {
  std::vector<double> eigenvalues;

  double max() const { return eigenvalues.front(); }
  double min() const { return eigenvalues.back(); }
  double trace() const;
  double sum_of_squares() const;
};

struct SolverOptions {
  SolverChoice solver = SolverChoice::automatic;
  double tolerance = 1e-9;
  std::uint64_t seed = 20210101;
  /// Cap on operator applications for the iterative path.
  int max_iterations = 50000;
  /// Krylov basis size before a thick restart.
  int basis_size = 80;
  /// Ritz vectors kept across a restart.
  int keep = 30;
  /// Automatic mode runs dense up to this many vertices.
  std::size_t auto_dense_max = 2000;
  Limits limits{};
};

Spectrum dense_spectrum(const Graph& g, const Limits& limits = {});

/// Dense eigenpairs: values descending, vectors[k] is the unit eigenvector of
/// values[k].
struct EigenPairs {
  std::vector<double> values;
  std::vector<std::vector<double>> vectors;
};
EigenPairs dense_eigenpairs(const Graph& g, const Limits& limits = {});

/// Smallest adjacency eigenvalue. The iterative path runs Lanczos on d I - A
/// and needs a regular graph.
SpectralResult lambda_min(const Graph& g, const SolverOptions& opts = {});

/// Second-largest adjacency eigenvalue. The iterative path works on the
/// orthogonal complement of the constant vector and needs a connected
/// regular graph.
SpectralResult lambda_2(const Graph& g, const SolverOptions& opts = {});

/// {2 cos(2 pi j / m)}, descending.
Spectrum cycle_spectrum(int m);

struct QuadraticFormCheck {
  double lhs = 0.0;  ///< sum over edges of (x_i + x_j)^2
  double rhs = 0.0;  ///< (k + lambda_min(K)) * sum x^2
  bool holds() const noexcept { return lhs >= rhs - 1e-9; }
};

/// Evaluates both sides of sum_{ij in E} (x_i + x_j)^2 >= (k + lambda_min) |x|^2
/// for a k-regular K.
QuadraticFormCheck quadratic_form_check(const Graph& k, std::span<const double> x);
QuadraticFormCheck quadratic_form_check(const Graph& k, std::span<const double> x,
                                        double lambda_min_k);

/// Smallest eigenvalue of a box product from those of its factors.
inline double box_spectrum_min(double a, double b) noexcept { return a + b; }

/// Residual ||A x - lambda x|| of a candidate eigenpair.
double eigen_residual(const Graph& g, std::span<const double> x, double lambda);

// Largest eigenvalue of a symmetric operator by thick-restart Lanczos with
// full reorthogonalization. `deflate` holds orthonormal vectors the search
// is kept orthogonal to.
struct LanczosResult {
  double value = 0.0;
  std::vector<double> vector;
  double residual_estimate = 0.0;
  int applications = 0;
};

using LinearOperator = std::function<void(std::span<const double>, std::span<double>)>;

LanczosResult lanczos_largest(const LinearOperator& op, std::size_t dim,
                              std::span<const std::vector<double>> deflate,
                              const SolverOptions& opts);

}  // namespace assoc
