#include <algorithm>
#include <cmath>
#include <numeric>
#include <vector>

#include "assoc/rng.hpp"
#include "assoc/walk.hpp"
#include "doctest.h"
#include "error_kind.hpp"

using namespace assoc;
using testing::error_kind;

namespace {

// Direct summation over ordered pairs (v, w) with w a neighbour of v.
TestFunctionReport by_summation(const Graph& g, const std::vector<double>& f) {
  const double n = static_cast<double>(g.vertex_count());
  double step = 0.0, mean = 0.0, sq = 0.0;
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    for (Vertex w : g.neighbors(v)) step += (f[v] - f[w]) * (f[v] - f[w]) / g.degree(v);
    mean += f[v];
    sq += f[v] * f[v];
  }
  TestFunctionReport r;
  r.dirichlet = step / n;
  r.variance = sq / n - (mean / n) * (mean / n);
  r.quotient = r.dirichlet / r.variance;
  r.gap_upper = r.quotient / 2;
  return r;
}

double spectral_gap(const Graph& g) {
  return 1.0 - lambda_2(g).value / *g.regular_degree();
}

// Sizes of the components left when node c is removed from the dual tree.
std::vector<int> components_without(const DualTree& t, int c) {
  std::vector<std::vector<int>> adj(t.node_count());
  for (auto [a, b] : t.edges) {
    adj[a].push_back(b);
    adj[b].push_back(a);
  }
  std::vector<int> seen(t.node_count(), 0), sizes;
  seen[c] = 1;
  for (int s = 0; s < t.node_count(); ++s) {
    if (seen[s]) continue;
    int size = 0;
    std::vector<int> stack = {s};
    seen[s] = 1;
    while (!stack.empty()) {
      const int u = stack.back();
      stack.pop_back();
      ++size;
      for (int w : adj[u]) {
        if (!seen[w]) {
          seen[w] = 1;
          stack.push_back(w);
        }
      }
    }
    sizes.push_back(size);
  }
  return sizes;
}

}  // namespace

TEST_CASE("zero steps stays at the start") {
  WalkConfig cfg;
  cfg.steps = 0;
  cfg.start = 3;
  const WalkSummary s = simulate_walk(cycle_graph(5), cfg);
  CHECK(s.start == 3);
  CHECK(s.final_vertex == 3);
  CHECK(std::accumulate(s.visits.begin(), s.visits.end(), std::uint64_t{0}) == 0);
}

TEST_CASE("walks are seed determined") {
  const Graph g = build_associahedron(7).graph();
  WalkConfig cfg;
  cfg.steps = 5000;
  cfg.seed = 17;
  const WalkSummary a = simulate_walk(g, cfg);
  const WalkSummary b = simulate_walk(g, cfg);
  CHECK(a.start == b.start);
  CHECK(a.final_vertex == b.final_vertex);
  CHECK(a.visits == b.visits);
  cfg.seed = 18;
  CHECK(simulate_walk(g, cfg).visits != a.visits);
  CHECK(std::accumulate(a.visits.begin(), a.visits.end(), std::uint64_t{0}) == 5000);
}

TEST_CASE("one-step walks move to a neighbour") {
  const Graph g = petersen_graph();
  for (std::uint64_t seed = 1; seed <= 50; ++seed) {
    WalkConfig cfg;
    cfg.steps = 1;
    cfg.seed = seed;
    cfg.start = 0;
    CHECK(g.has_edge(0, simulate_walk(g, cfg).final_vertex));
  }
}

TEST_CASE("walk on a pentagon approaches uniform") {
  WalkConfig cfg;
  cfg.steps = 100000;
  cfg.seed = 5;
  CHECK(simulate_walk(cycle_graph(5), cfg).tv_from_uniform() < 0.05);
}

TEST_CASE("walk frequencies on the three-dimensional flip graph") {
  const Graph g = build_associahedron(6).graph();
  WalkConfig cfg;
  cfg.steps = 1000000;
  cfg.seed = 20210101;
  const WalkSummary s = simulate_walk(g, cfg);
  const double p = 1.0 / 14.0;
  const double sigma = std::sqrt(p * (1 - p) / cfg.steps);
  const auto freq = s.empirical_distribution();
  REQUIRE(freq.size() == 14);
  for (double f : freq) CHECK(std::abs(f - p) <= 3 * sigma);

  // Successive positions are correlated, so the binomial sigma is too small.
  // The exact asymptotic variance of the visit fraction of v is
  // sum over non-trivial eigenpairs of u_j(v)^2 / N * (1 + mu_j) / (1 - mu_j),
  // with mu_j the transition-matrix eigenvalues.
  const EigenPairs e = dense_eigenpairs(g);
  for (Vertex v = 0; v < 14; ++v) {
    double var = 0.0;
    for (std::size_t j = 1; j < 14; ++j) {
      const double mu = e.values[j] / 3.0;
      var += e.vectors[j][v] * e.vectors[j][v] / 14.0 * (1 + mu) / (1 - mu);
    }
    CHECK(var > p * (1 - p));
    CHECK(std::abs(freq[v] - p) <= 3 * std::sqrt(var / cfg.steps));
  }
}

TEST_CASE("walk input errors") {
  const std::vector<Edge> split = {{0, 1}, {2, 3}};
  const Graph g = Graph::from_edges(4, split);
  CHECK(error_kind([&] { simulate_walk(g, WalkConfig{10, 1, std::nullopt}); }) == ErrorKind::invalid_input);
  CHECK(error_kind([] { simulate_walk(cycle_graph(5), WalkConfig{10, 1, Vertex{5}}); }) ==
        ErrorKind::invalid_input);
}

TEST_CASE("dirichlet quotient of an indicator on the pentagon") {
  std::vector<double> f(5, 0.0);
  f[0] = 1.0;
  const TestFunctionReport r = dirichlet_quotient(cycle_graph(5), f);
  // Two of the ten ordered steps cross the indicator: dirichlet = 2/5.
  CHECK(r.dirichlet == doctest::Approx(0.4));
  CHECK(r.variance == doctest::Approx(0.16));
  CHECK(r.quotient == doctest::Approx(2.5));
  CHECK(r.gap_upper == doctest::Approx(1.25));
  const TestFunctionReport o = by_summation(cycle_graph(5), f);
  CHECK(r.dirichlet == doctest::Approx(o.dirichlet));
}

TEST_CASE("dirichlet quotient matches direct summation") {
  const Graph g = build_associahedron(8).graph();
  Rng rng(3);
  for (int trial = 0; trial < 20; ++trial) {
    std::vector<double> f(g.vertex_count());
    for (double& x : f) x = rng.symmetric() * 10;
    const TestFunctionReport r = dirichlet_quotient(g, f);
    const TestFunctionReport o = by_summation(g, f);
    CHECK(r.dirichlet == doctest::Approx(o.dirichlet).epsilon(1e-12));
    CHECK(r.variance == doctest::Approx(o.variance).epsilon(1e-12));
    CHECK(r.quotient == doctest::Approx(o.quotient).epsilon(1e-12));
  }
}

TEST_CASE("eigenvector test function attains the gap") {
  const Graph g = build_associahedron(6).graph();
  const SpectralResult l2 = lambda_2(g);
  const TestFunctionReport r = dirichlet_quotient(g, l2.vector);
  CHECK(std::abs(r.quotient - 2.0 * (1.0 - l2.value / 3.0)) < 1e-8);
  CHECK(std::abs(r.gap_upper - spectral_gap(g)) < 1e-8);
}

TEST_CASE("every test function bounds the gap from above") {
  for (int n = 5; n <= 9; ++n) {
    const Graph g = build_associahedron(n).graph();
    const double gap = spectral_gap(g);
    Rng rng(n);
    for (int trial = 0; trial < 50; ++trial) {
      std::vector<double> f(g.vertex_count());
      for (double& x : f) x = rng.symmetric();
      CHECK(dirichlet_quotient(g, f).gap_upper >= gap - 1e-12);
    }
  }
  const Graph p = petersen_graph();
  std::vector<double> f(10, 0.0);
  f[2] = 1.0;
  CHECK(dirichlet_quotient(p, f).gap_upper >= spectral_gap(p) - 1e-12);
}

TEST_CASE("dirichlet quotient errors") {
  CHECK(error_kind([] { dirichlet_quotient(cycle_graph(5), std::vector<double>(5, 2.0)); }) ==
        ErrorKind::invalid_input);
  CHECK(error_kind([] { dirichlet_quotient(cycle_graph(5), std::vector<double>(4, 2.0)); }) ==
        ErrorKind::invalid_input);
  CHECK(error_kind([] { dirichlet_quotient(path_graph(5), std::vector<double>{1, 2, 3, 4, 5}); }) ==
        ErrorKind::invalid_input);
}

TEST_CASE("centroid triangle") {
  const Triangulation star = Triangulation::parse(6, "1-3,3-5,1-5");
  const DualTree st = dual_tree(star);
  CHECK(st.triangles[centroid_triangle(star)] == std::array<int, 3>{1, 3, 5});

  for (int n = 4; n <= 10; ++n) {
    for (const auto& t : enumerate_triangulations(n)) {
      const DualTree d = dual_tree(t);
      const int c = centroid_triangle(t);
      REQUIRE(c >= 0);
      REQUIRE(c < d.node_count());
      for (int size : components_without(d, c)) CHECK(2 * size <= n - 2);
      // No earlier triangle in the sorted list is also a centroid.
      for (int k = 0; k < d.node_count(); ++k) {
        if (d.triangles[k] >= d.triangles[c]) continue;
        bool centroid = true;
        for (int size : components_without(d, k)) centroid &= 2 * size <= n - 2;
        CHECK_FALSE(centroid);
      }
    }
  }
}

TEST_CASE("aldous test function") {
  for (int n = 6; n <= 10; ++n) {
    CAPTURE(n);
    const Associahedron a = build_associahedron(n);
    const auto f = aldous_test_function(a);
    REQUIRE(f.size() == a.graph().vertex_count());
    CHECK(f == aldous_test_function(n));
    for (double x : f) {
      CHECK(x >= 0);
      CHECK(x <= n / 2);
    }
    CHECK(*std::max_element(f.begin(), f.end()) > *std::min_element(f.begin(), f.end()));
    const TestFunctionReport r = dirichlet_quotient(a.graph(), f);
    CHECK(r.quotient >= spectral_gap(a.graph()) - 1e-8);
    CHECK(r.gap_upper >= spectral_gap(a.graph()) - 1e-8);
  }
  CHECK(error_kind([] { aldous_test_function(5); }) == ErrorKind::invalid_input);
}

TEST_CASE("aldous function with a plugged-in rule") {
  const Associahedron a = build_associahedron(7);
  const auto first = aldous_test_function(a, [](const Triangulation&) { return 0; });
  CHECK(first.size() == 42);
}

TEST_CASE("gap scan") {
  const auto rows = gap_scan(5, 9);
  REQUIRE(rows.size() == 5);
  CHECK(rows[0].n == 5);
  CHECK_FALSE(rows[0].aldous_quotient.has_value());
  CHECK(rows[1].lambda_2 == doctest::Approx(2.0));
  CHECK(rows[1].scaled_gap == doctest::Approx(std::sqrt(6.0)));
  for (const GapRow& r : rows) {
    CHECK(r.scaled_gap == doctest::Approx((r.n - 3 - r.lambda_2) * std::sqrt(r.n)));
    if (r.aldous_quotient) CHECK(*r.aldous_quotient >= 1.0 - r.lambda_2 / (r.n - 3) - 1e-8);
  }
  CHECK(error_kind([] { gap_scan(4, 6); }) == ErrorKind::invalid_input);
}
