#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "assoc/flipgraph.hpp"
#include "assoc/graph.hpp"
#include "assoc/spectra.hpp"

namespace assoc {

struct WalkConfig {
  std::uint64_t steps = 0;
  std::uint64_t seed = 1;
  /// nullopt: draw the start uniformly.
  std::optional<Vertex> start;
};

struct WalkSummary {
  Vertex start = 0;
  Vertex final_vertex = 0;
  std::uint64_t steps = 0;
  /// Visits per vertex over positions 1..steps (the start is not counted).
  std::vector<std::uint64_t> visits;
  std::uint64_t returns_to_start = 0;

  std::vector<double> empirical_distribution() const;
  /// Total-variation distance of the empirical distribution from uniform.
  double tv_from_uniform() const;
};

/// Simple random walk: each step moves to a uniformly chosen neighbour.
WalkSummary simulate_walk(const Graph& g, const WalkConfig& cfg);

struct TestFunctionReport {
  /// E[(f(X1) - f(X0))^2] with X0 uniform and X1 a uniform neighbour.
  double dirichlet = 0.0;
  double variance = 0.0;
  double quotient = 0.0;
  /// Upper bound on the spectral gap 1 - lambda_2 / d, equal to quotient / 2.
  double gap_upper = 0.0;
};

TestFunctionReport dirichlet_quotient(const Graph& g, std::span<const double> f);

/// Picks the central triangle of a triangulation: one index into
/// dual_tree(t).triangles.
using CentralTriangleRule = std::function<int(const Triangulation&)>;

/// Dual-tree centroid (every component left after deleting it has at most
/// (n - 2)/2 nodes), ties broken by the lexicographically smallest triple.
int centroid_triangle(const Triangulation& t);

/// f(t) = cyclic distance from the central triangle of t to polygon vertex
/// floor(n/4), minimized over the triangle's three corners.
std::vector<double> aldous_test_function(const Associahedron& a,
                                         const CentralTriangleRule& rule = centroid_triangle);
std::vector<double> aldous_test_function(int n, const Limits& limits = {});

struct GapRow {
  int n = 0;
  double lambda_2 = 0.0;
  /// (n - 3 - lambda_2) * sqrt(n)
  double scaled_gap = 0.0;
  /// Exact Dirichlet quotient of the Aldous test function (n >= 6).
  std::optional<double> aldous_quotient;
};

std::vector<GapRow> gap_scan(int n_first, int n_last, const SolverOptions& opts = {});

}  // namespace assoc
