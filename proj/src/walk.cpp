#include "assoc/walk.hpp"

#include <algorithm>
#include <cmath>

#include "assoc/kernels.hpp"
#include "assoc/rng.hpp"

namespace assoc {

std::vector<double> WalkSummary::empirical_distribution() const {
  std::vector<double> p(visits.size(), 0.0);
  if (steps == 0) return p;
  for (std::size_t v = 0; v < visits.size(); ++v) {
    p[v] = static_cast<double>(visits[v]) / static_cast<double>(steps);
  }
  return p;
}

double WalkSummary::tv_from_uniform() const {
  const auto p = empirical_distribution();
  const double u = 1.0 / static_cast<double>(p.size());
  double tv = 0.0;
  for (double x : p) tv += std::abs(x - u);
  return 0.5 * tv;
}

WalkSummary simulate_walk(const Graph& g, const WalkConfig& cfg) {
  const std::size_t n = g.vertex_count();
  if (n == 0) throw_invalid("cannot walk on an empty graph");
  if (!is_connected(g)) throw_invalid("random walk needs a connected graph");
  if (cfg.start && *cfg.start >= n) throw_invalid("start vertex out of range");
  Rng rng(cfg.seed);
  WalkSummary s;
  s.steps = cfg.steps;
  s.start = cfg.start ? *cfg.start : static_cast<Vertex>(rng.below(n));
  s.visits.assign(n, 0);
  Vertex at = s.start;
  for (std::uint64_t step = 0; step < cfg.steps; ++step) {
    auto nb = g.neighbors(at);
    if (nb.empty()) break;
    at = nb[rng.below(nb.size())];
    ++s.visits[at];
    if (at == s.start) ++s.returns_to_start;
  }
  s.final_vertex = at;
  return s;
}

TestFunctionReport dirichlet_quotient(const Graph& g, std::span<const double> f) {
  auto d = g.regular_degree();
  if (!d || *d == 0) throw_invalid("Dirichlet quotient needs a regular graph of positive degree");
  const std::size_t n = g.vertex_count();
  if (f.size() != n) throw_invalid("test function has the wrong length");

  double mean = 0.0;
  for (double x : f) mean += x;
  mean /= static_cast<double>(n);
  double variance = 0.0;
  for (double x : f) variance += (x - mean) * (x - mean);
  variance /= static_cast<double>(n);
  if (!(variance > 1e-14 * std::max(1.0, mean * mean))) {
    throw_invalid("test function is constant");
  }

  TestFunctionReport r;
  // each undirected edge appears twice among the n*d directed steps
  r.dirichlet = 2.0 * kernels::edge_square_sum(g, f, -1) / (static_cast<double>(n) * *d);
  r.variance = variance;
  r.quotient = r.dirichlet / r.variance;
  r.gap_upper = 0.5 * r.quotient;
  return r;
}

int centroid_triangle(const Triangulation& t) {
  DualTree tree = dual_tree(t);
  const int nodes = tree.node_count();
  std::vector<std::vector<int>> adj(nodes);
  for (auto [a, b] : tree.edges) {
    adj[a].push_back(b);
    adj[b].push_back(a);
  }
  // subtree sizes from root 0 give every component size after a deletion
  std::vector<int> parent(nodes, -1);
  std::vector<int> order;
  order.reserve(nodes);
  order.push_back(0);
  parent[0] = 0;
  for (std::size_t k = 0; k < order.size(); ++k) {
    for (int w : adj[order[k]]) {
      if (parent[w] < 0) {
        parent[w] = order[k];
        order.push_back(w);
      }
    }
  }
  std::vector<int> size(nodes, 1);
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    if (*it != 0) size[parent[*it]] += size[*it];
  }
  int best = -1;
  for (int v = 0; v < nodes; ++v) {
    int largest = nodes - size[v];
    for (int w : adj[v]) {
      if (parent[w] == v) largest = std::max(largest, size[w]);
    }
    if (2 * largest <= nodes) {
      // triangles are sorted, so the first hit is the smallest triple
      best = v;
      break;
    }
  }
  return best;
}

std::vector<double> aldous_test_function(const Associahedron& a, const CentralTriangleRule& rule) {
  const int n = a.n();
  if (n < 6) throw_invalid("the Aldous test function needs n >= 6");
  const int p = n / 4;
  const auto verts = a.vertices();
  std::vector<double> f(verts.size());
  for (std::size_t v = 0; v < verts.size(); ++v) {
    DualTree tree = dual_tree(verts[v]);
    const auto& tri = tree.triangles.at(rule(verts[v]));
    int dist = n;
    for (int corner : tri) {
      const int gap = std::abs(corner - p);
      dist = std::min(dist, std::min(gap, n - gap));
    }
    f[v] = dist;
  }
  return f;
}

std::vector<double> aldous_test_function(int n, const Limits& limits) {
  return aldous_test_function(build_associahedron(n, limits));
}

std::vector<GapRow> gap_scan(int n_first, int n_last, const SolverOptions& opts) {
  if (n_first < 5 || n_last < n_first) throw_invalid("gap scan needs 5 <= first <= last");
  std::vector<GapRow> rows;
  for (int n = n_first; n <= n_last; ++n) {
    Associahedron a = build_associahedron(n, opts.limits);
    GapRow row;
    row.n = n;
    row.lambda_2 = lambda_2(a.graph(), opts).value;
    row.scaled_gap = (n - 3 - row.lambda_2) * std::sqrt(static_cast<double>(n));
    if (n >= 6) {
      auto f = aldous_test_function(a);
      row.aldous_quotient = dirichlet_quotient(a.graph(), f).quotient;
    }
    rows.push_back(row);
  }
  return rows;
}

}  // namespace assoc
