#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>
#include <vector>

#include "assoc/flipgraph.hpp"
#include "assoc/rng.hpp"
#include "assoc/spectra.hpp"
#include "doctest.h"
#include "error_kind.hpp"

using namespace assoc;
using testing::error_kind;
using std::numbers::pi;

namespace {

void check_multiset(std::vector<double> got, std::vector<double> want, double tol) {
  REQUIRE(got.size() == want.size());
  std::sort(got.begin(), got.end());
  std::sort(want.begin(), want.end());
  for (std::size_t i = 0; i < got.size(); ++i) CHECK(std::abs(got[i] - want[i]) <= tol);
}

std::vector<double> closed_cycle(int m) {
  std::vector<double> v;
  for (int j = 0; j < m; ++j) v.push_back(2.0 * std::cos(2.0 * pi * j / m));
  return v;
}

SolverOptions with(SolverChoice s) {
  SolverOptions o;
  o.solver = s;
  return o;
}

std::vector<double> random_vector(std::size_t n, Rng& rng) {
  std::vector<double> x(n);
  for (double& v : x) v = rng.symmetric();
  return x;
}

Graph disjoint_union(const Graph& a, const Graph& b) {
  std::vector<Edge> e = a.edges();
  const Vertex off = static_cast<Vertex>(a.vertex_count());
  for (auto [u, v] : b.edges()) e.push_back({u + off, v + off});
  return Graph::from_edges(a.vertex_count() + b.vertex_count(), e);
}

}  // namespace

// tr(A^k) for k = 0..kmax, counted as closed walks with integer arithmetic.
std::vector<std::int64_t> closed_walks(const Graph& g, int kmax) {
  const std::size_t n = g.vertex_count();
  std::vector<std::int64_t> out(kmax + 1, 0);
  out[0] = static_cast<std::int64_t>(n);
  for (Vertex s = 0; s < n; ++s) {
    std::vector<std::int64_t> walks(n, 0), next(n);
    walks[s] = 1;
    for (int k = 1; k <= kmax; ++k) {
      std::fill(next.begin(), next.end(), 0);
      for (Vertex v = 0; v < n; ++v) {
        for (Vertex w : g.neighbors(v)) next[w] += walks[v];
      }
      walks.swap(next);
      out[k] += walks[s];
    }
  }
  return out;
}

double power_sum(const std::vector<double>& xs, int k) {
  double s = 0.0;
  for (double x : xs) s += std::pow(x, k);
  return s;
}

TEST_CASE("spectrum of the three-dimensional flip graph") {
  const double s2 = std::sqrt(2.0), s3 = std::sqrt(3.0);
  // Fourteen values whose first fourteen power sums equal the closed-walk
  // counts, which determines the spectrum.
  const std::vector<double> want = {3,      2,      2,      s3,  0,   0,       s2 - 1,
                                    s2 - 1, s2 - 1, -1,     -s3, -1 - s2, -1 - s2, -1 - s2};
  const Graph g = build_associahedron(6).graph();
  const auto walks = closed_walks(g, 14);
  for (int k = 1; k <= 14; ++k) {
    CAPTURE(k);
    CHECK(power_sum(want, k) == doctest::Approx(static_cast<double>(walks[k])).epsilon(1e-12).scale(1.0));
  }
  CHECK(walks[1] == 0);
  CHECK(walks[2] == 42);
  check_multiset(dense_spectrum(g).eigenvalues, want, 1e-9);
}

TEST_CASE("the multiset with 1 - sqrt 2 in place of sqrt 2 - 1 is not a graph spectrum") {
  const double s2 = std::sqrt(2.0), s3 = std::sqrt(3.0);
  const std::vector<double> misprint = {3,      2,      2,      s3,  0,   0,       1 - s2,
                                        1 - s2, 1 - s2, -1,     -s3, -1 - s2, -1 - s2, -1 - s2};
  // An adjacency matrix has zero trace; this multiset sums to 6 - 6 sqrt 2.
  CHECK(power_sum(misprint, 1) == doctest::Approx(6 - 6 * s2));
  CHECK(std::abs(power_sum(misprint, 1)) > 2.0);
}

TEST_CASE("closed-form spectra") {
  check_multiset(dense_spectrum(complete_graph(2)).eigenvalues, {1, -1}, 1e-12);
  for (int m = 3; m <= 12; ++m) {
    check_multiset(dense_spectrum(cycle_graph(m)).eigenvalues, closed_cycle(m), 1e-10);
    check_multiset(cycle_spectrum(m).eigenvalues, closed_cycle(m), 1e-12);
  }
  check_multiset(cycle_spectrum(3).eigenvalues, {2, -1, -1}, 1e-12);
  CHECK(2.0 + cycle_spectrum(5).min() == doctest::Approx(4 * std::pow(std::sin(pi / 10), 2)));
  CHECK(cycle_spectrum(5).min() == doctest::Approx(-1.61803).epsilon(1e-5));
  CHECK(2.0 + cycle_spectrum(7).min() == doctest::Approx(0.198062).epsilon(1e-5));
  check_multiset(dense_spectrum(petersen_graph()).eigenvalues, {3, 1, 1, 1, 1, 1, -2, -2, -2, -2},
                 1e-10);
  std::vector<double> k7(7, -1.0);
  k7[0] = 6.0;
  check_multiset(dense_spectrum(complete_graph(7)).eigenvalues, k7, 1e-10);
  CHECK(error_kind([] { cycle_spectrum(2); }) == ErrorKind::invalid_input);
}

TEST_CASE("spectrum moments") {
  for (int n = 5; n <= 8; ++n) {
    const Graph g = build_associahedron(n).graph();
    const Spectrum s = dense_spectrum(g);
    CHECK(s.eigenvalues.size() == g.vertex_count());
    CHECK(std::is_sorted(s.eigenvalues.rbegin(), s.eigenvalues.rend()));
    CHECK(std::abs(s.trace()) < 1e-9);
    CHECK(s.sum_of_squares() == doctest::Approx(2.0 * g.edge_count()).epsilon(1e-12));
    CHECK(s.max() == doctest::Approx(n - 3));
  }
}

TEST_CASE("box product spectrum is the sumset of the factors") {
  const Graph g = cycle_graph(5), h = petersen_graph();
  const Spectrum a = dense_spectrum(g), b = dense_spectrum(h);
  std::vector<double> sums;
  for (double x : a.eigenvalues) {
    for (double y : b.eigenvalues) sums.push_back(x + y);
  }
  const Spectrum p = dense_spectrum(box_product(g, h));
  check_multiset(p.eigenvalues, sums, 1e-9);
  CHECK(p.min() == doctest::Approx(box_spectrum_min(a.min(), b.min())));
}

TEST_CASE("reference eigenvalues of small flip graphs") {
  CHECK(lambda_min(build_associahedron(5).graph()).value == doctest::Approx(-1.618).epsilon(1e-3));
  CHECK(lambda_min(build_associahedron(8).graph()).value == doctest::Approx(-3.912).epsilon(1e-3));
  CHECK(lambda_2(build_associahedron(6).graph()).value == doctest::Approx(2.0).epsilon(1e-9));
  CHECK(lambda_2(cycle_graph(5)).value == doctest::Approx(2.0 * std::cos(2.0 * pi / 5)));
  CHECK(lambda_2(cycle_graph(5)).value == doctest::Approx(0.618).epsilon(1e-3));
}

TEST_CASE("iterative and dense solvers agree") {
  for (int n = 6; n <= 10; ++n) {
    CAPTURE(n);
    const Graph g = build_associahedron(n).graph();
    const SpectralResult dm = lambda_min(g, with(SolverChoice::dense));
    const SpectralResult im = lambda_min(g, with(SolverChoice::iterative));
    const SpectralResult d2 = lambda_2(g, with(SolverChoice::dense));
    const SpectralResult i2 = lambda_2(g, with(SolverChoice::iterative));
    CHECK(dm.method == Method::dense);
    CHECK(im.method == Method::iterative);
    CHECK(std::abs(dm.value - im.value) < 1e-8);
    CHECK(std::abs(d2.value - i2.value) < 1e-8);
    for (const SpectralResult* r : {&dm, &im, &d2, &i2}) {
      CHECK(r->residual <= 1e-8);
      CHECK(eigen_residual(g, r->vector, r->value) == doctest::Approx(r->residual).epsilon(1e-3).scale(1e-12));
    }
    // lambda_2 eigenvectors are orthogonal to the constant vector.
    CHECK(std::abs(std::accumulate(i2.vector.begin(), i2.vector.end(), 0.0)) < 1e-8);
  }
}

TEST_CASE("automatic mode picks by size and the iterative path is reproducible") {
  const Graph small = build_associahedron(8).graph();
  CHECK(lambda_min(small).method == Method::dense);
  const Graph big = build_associahedron(11).graph();
  const SpectralResult a = lambda_min(big);
  const SpectralResult b = lambda_min(big);
  CHECK(a.method == Method::iterative);
  CHECK(a.value == b.value);
  CHECK(a.iterations == b.iterations);
  CHECK(a.value == doctest::Approx(-6.157).epsilon(1e-3));
}

TEST_CASE("dense eigenpairs") {
  const Graph g = petersen_graph();
  const EigenPairs p = dense_eigenpairs(g);
  REQUIRE(p.values.size() == 10);
  for (std::size_t k = 0; k < 10; ++k) CHECK(eigen_residual(g, p.vectors[k], p.values[k]) < 1e-10);
}

TEST_CASE("quadratic form examples") {
  const Graph c5 = cycle_graph(5);
  const std::vector<double> ones(5, 1.0);
  const QuadraticFormCheck q = quadratic_form_check(c5, ones);
  CHECK(q.lhs == doctest::Approx(20.0));
  CHECK(q.rhs == doctest::Approx((2.0 - 2.0 * std::cos(pi / 5)) * 5).epsilon(1e-12));
  CHECK(q.rhs == doctest::Approx(1.9098).epsilon(1e-4));

  const QuadraticFormCheck z = quadratic_form_check(c5, std::vector<double>(5, 0.0));
  CHECK(z.lhs == 0.0);
  CHECK(z.rhs == 0.0);

  const EigenPairs p = dense_eigenpairs(c5);
  const QuadraticFormCheck eq = quadratic_form_check(c5, p.vectors.back());
  CHECK(eq.lhs == doctest::Approx(eq.rhs).epsilon(1e-12));
  CHECK(eq.holds());

  CHECK(error_kind([&] { quadratic_form_check(c5, std::vector<double>(4, 1.0)); }) ==
        ErrorKind::invalid_input);
  CHECK(error_kind([] { quadratic_form_check(path_graph(4), std::vector<double>(4, 1.0)); }) ==
        ErrorKind::invalid_input);
}

TEST_CASE("quadratic form inequality on random vectors") {
  const std::vector<Graph> graphs = {cycle_graph(5), cycle_graph(7), petersen_graph(),
                                     build_associahedron(6).graph()};
  Rng rng(2024);
  for (const Graph& k : graphs) {
    const double lm = dense_spectrum(k).min();
    for (int trial = 0; trial < 1000; ++trial) {
      const auto x = random_vector(k.vertex_count(), rng);
      const QuadraticFormCheck q = quadratic_form_check(k, x, lm);
      CHECK(q.holds());
    }
  }
}

TEST_CASE("induced subgraphs interlace the host spectrum") {
  const Graph g = build_associahedron(8).graph();
  const Spectrum host = dense_spectrum(g);
  const std::size_t n = g.vertex_count();
  Rng rng(11);
  for (int trial = 0; trial < 40; ++trial) {
    std::vector<Vertex> all(n);
    std::iota(all.begin(), all.end(), 0);
    for (std::size_t i = n; i > 1; --i) std::swap(all[i - 1], all[rng.below(i)]);
    const std::size_t m = 2 + rng.below(n - 2);
    all.resize(m);
    const Spectrum sub = dense_spectrum(induced_subgraph(g, all).graph);
    CHECK(sub.min() >= host.min() - 1e-9);
    for (std::size_t i = 0; i < m; ++i) {
      CHECK(sub.eigenvalues[i] <= host.eigenvalues[i] + 1e-9);
      CHECK(sub.eigenvalues[i] >= host.eigenvalues[i + n - m] - 1e-9);
    }
  }
}

TEST_CASE("lanczos on an explicit diagonal operator") {
  const std::size_t dim = 500;
  LinearOperator op = [](std::span<const double> x, std::span<double> y) {
    for (std::size_t i = 0; i < x.size(); ++i) y[i] = static_cast<double>(i + 1) * x[i];
  };
  SolverOptions o;
  const LanczosResult r = lanczos_largest(op, dim, {}, o);
  CHECK(r.value == doctest::Approx(500.0).epsilon(1e-10));

  std::vector<std::vector<double>> top(1, std::vector<double>(dim, 0.0));
  top[0][dim - 1] = 1.0;
  const LanczosResult r2 = lanczos_largest(op, dim, top, o);
  CHECK(r2.value == doctest::Approx(499.0).epsilon(1e-10));
  CHECK(std::abs(r2.vector[dim - 1]) < 1e-8);
}

TEST_CASE("degenerate and invalid inputs") {
  const Graph one = Graph::from_edges(1, {});
  CHECK(lambda_min(one).value == 0.0);
  CHECK(error_kind([&] { lambda_2(one); }) == ErrorKind::invalid_input);
  CHECK(error_kind([] { lambda_min(Graph{}); }) == ErrorKind::invalid_input);

  const Graph two_pentagons = disjoint_union(cycle_graph(5), cycle_graph(5));
  CHECK(error_kind([&] { lambda_2(two_pentagons, with(SolverChoice::iterative)); }) ==
        ErrorKind::invalid_input);
  CHECK(lambda_2(two_pentagons, with(SolverChoice::dense)).value == doctest::Approx(2.0));

  CHECK(error_kind([] { lambda_min(path_graph(6), with(SolverChoice::iterative)); }) ==
        ErrorKind::invalid_input);
  CHECK(lambda_min(path_graph(6)).value == doctest::Approx(-2.0 * std::cos(pi / 7)));

  SolverOptions tight = with(SolverChoice::dense);
  tight.limits.dense_max_vertices = 10;
  CHECK(error_kind([&] { lambda_min(build_associahedron(6).graph(), tight); }) == ErrorKind::capacity);
}

TEST_CASE("convergence failure carries the best estimate") {
  SolverOptions o = with(SolverChoice::iterative);
  o.max_iterations = 20;
  o.basis_size = 10;
  o.keep = 4;
  const Graph g = build_associahedron(10).graph();
  try {
    lambda_min(g, o);
    FAIL("expected a convergence error");
  } catch (const ConvergenceError& e) {
    CHECK(e.kind() == ErrorKind::convergence);
    CHECK(std::isfinite(e.estimate()));
    CHECK(e.estimate() >= -7.0);
    CHECK(e.estimate() <= 0.0);
    CHECK(e.residual() > o.tolerance);
    CHECK(e.iterations() <= 20);
  }
}
