#include <Eigen/Dense>
#include <algorithm>
#include <cmath>

#include "assoc/rng.hpp"
#include "assoc/spectra.hpp"

namespace assoc {

namespace {

void project_out(std::span<const std::vector<double>> deflate, Eigen::Ref<Eigen::VectorXd> w) {
  for (int pass = 0; pass < 2; ++pass) {
    for (const auto& u : deflate) {
      Eigen::Map<const Eigen::VectorXd> uu(u.data(), static_cast<Eigen::Index>(u.size()));
      w -= uu.dot(w) * uu;
    }
  }
}

}  // namespace

LanczosResult lanczos_largest(const LinearOperator& op, std::size_t dim,
                              std::span<const std::vector<double>> deflate,
                              const SolverOptions& opts) {
  if (dim <= deflate.size()) throw_invalid("operator has no room outside the deflated space");
  const Eigen::Index n = static_cast<Eigen::Index>(dim);
  const int effective = static_cast<int>(dim - deflate.size());
  const int m = std::max(1, std::min(opts.basis_size, effective));
  const int keep = std::max(1, std::min(opts.keep, m - 1));

  Eigen::MatrixXd basis(n, m + 1);
  Eigen::MatrixXd projected = Eigen::MatrixXd::Zero(m, m);
  Eigen::VectorXd w(n);

  auto apply = [&](const Eigen::VectorXd& in, Eigen::VectorXd& out) {
    op(std::span<const double>(in.data(), dim), std::span<double>(out.data(), dim));
  };

  Rng rng(opts.seed);
  {
    Eigen::VectorXd start(n);
    for (Eigen::Index k = 0; k < n; ++k) start[k] = rng.symmetric();
    project_out(deflate, start);
    basis.col(0) = start / start.norm();
  }

  LanczosResult best;
  int applications = 0;
  int filled = 0;  // columns of `basis` already carrying an orthonormal frame
  double last_beta = 0.0;

  for (;;) {
    bool exhausted = false;
    int size = m;
    for (int j = filled; j < m; ++j) {
      if (applications >= opts.max_iterations && j > 0) {
        size = j;
        break;
      }
      Eigen::VectorXd col = basis.col(j);
      apply(col, w);
      ++applications;
      project_out(deflate, w);
      Eigen::VectorXd h = basis.leftCols(j + 1).transpose() * w;
      w -= basis.leftCols(j + 1) * h;
      Eigen::VectorXd h2 = basis.leftCols(j + 1).transpose() * w;
      w -= basis.leftCols(j + 1) * h2;
      h += h2;
      projected.block(0, j, j + 1, 1) = h;
      projected.block(j, 0, 1, j + 1) = h.transpose();
      last_beta = w.norm();
      const double scale = std::max(1.0, projected.topLeftCorner(j + 1, j + 1).cwiseAbs().maxCoeff());
      if (last_beta <= 1e-13 * scale) {
        exhausted = true;
        size = j + 1;
        break;
      }
      basis.col(j + 1) = w / last_beta;
      if (j + 1 < m) {
        projected(j + 1, j) = last_beta;
        projected(j, j + 1) = last_beta;
      }
    }

    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> small(projected.topLeftCorner(size, size));
    const Eigen::VectorXd& theta = small.eigenvalues();
    const Eigen::MatrixXd& y = small.eigenvectors();
    const double ritz = theta[size - 1];
    const double estimate = exhausted ? 0.0 : std::abs(last_beta * y(size - 1, size - 1));

    best.value = ritz;
    best.residual_estimate = estimate;
    best.applications = applications;

    if (estimate <= 0.5 * opts.tolerance && applications < opts.max_iterations) {
      Eigen::VectorXd x = basis.leftCols(size) * y.col(size - 1);
      project_out(deflate, x);
      x /= x.norm();
      Eigen::VectorXd bx(n);
      apply(x, bx);
      ++applications;
      const double rayleigh = x.dot(bx);
      const double residual = (bx - rayleigh * x).norm();
      if (residual <= opts.tolerance) {
        best.value = rayleigh;
        best.vector.assign(x.data(), x.data() + n);
        best.residual_estimate = residual;
        best.applications = applications;
        return best;
      }
      // the estimate was optimistic; start over from the current Ritz vector
      basis.col(0) = x;
      projected.setZero();
      filled = 0;
      continue;
    }

    if (applications >= opts.max_iterations) {
      throw ConvergenceError("Lanczos did not reach residual " + std::to_string(opts.tolerance) +
                                 " within " + std::to_string(opts.max_iterations) +
                                 " operator applications",
                             ritz, estimate, applications);
    }

    // thick restart: keep the largest Ritz vectors and the residual direction
    const int kept = std::min(keep, size - 1);
    Eigen::MatrixXd ritz_vectors = basis.leftCols(size) * y.rightCols(kept);
    Eigen::VectorXd residual_dir = basis.col(size);
    basis.leftCols(kept) = ritz_vectors;
    basis.col(kept) = residual_dir;
    projected.setZero();
    for (int k = 0; k < kept; ++k) projected(k, k) = theta[size - kept + k];
    filled = kept;
  }
}

}  // namespace assoc
