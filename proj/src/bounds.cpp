#include "assoc/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <set>

namespace assoc {

namespace reference {

double lambda_min(int n) {
  if (n < kFirstN || n > kLastN) throw_range("no reference lambda_min for n = " + std::to_string(n));
  return kLambdaMin[n - kFirstN];
}

double lambda_2(int n) {
  if (n < kFirstN || n > kLastN) throw_range("no reference lambda_2 for n = " + std::to_string(n));
  return kLambda2[n - kFirstN];
}

}  // namespace reference

namespace {

constexpr double kSlack = 1e-9;

/// BFS order of the pattern; anchor[i] is an earlier neighbour of order[i], or
/// -1 when order[i] starts a new component.
struct PatternPlan {
  std::vector<Vertex> order;
  std::vector<int> anchor;
  /// For each position, earlier positions adjacent to it.
  std::vector<std::vector<int>> back_edges;
};

PatternPlan plan_pattern(const Graph& k) {
  PatternPlan plan;
  const std::size_t n = k.vertex_count();
  std::vector<int> position(n, -1);
  for (Vertex root = 0; root < n; ++root) {
    if (position[root] >= 0) continue;
    std::size_t head = plan.order.size();
    position[root] = static_cast<int>(plan.order.size());
    plan.order.push_back(root);
    plan.anchor.push_back(-1);
    while (head < plan.order.size()) {
      Vertex u = plan.order[head++];
      for (Vertex w : k.neighbors(u)) {
        if (position[w] >= 0) continue;
        position[w] = static_cast<int>(plan.order.size());
        plan.order.push_back(w);
        plan.anchor.push_back(position[u]);
      }
    }
  }
  plan.back_edges.resize(n);
  for (std::size_t p = 0; p < n; ++p) {
    for (Vertex w : k.neighbors(plan.order[p])) {
      if (position[w] < static_cast<int>(p)) plan.back_edges[p].push_back(position[w]);
    }
  }
  return plan;
}

/// Enumerates injective edge-preserving maps of the pattern into `host`,
/// calling visit(image) with image[p] = host vertex of position p.
template <class Visit>
void for_each_embedding(const Graph& host, const PatternPlan& plan, Vertex root_image,
                        Visit&& visit) {
  const std::size_t n = plan.order.size();
  std::vector<Vertex> image(n);
  std::vector<char> used(host.vertex_count(), 0);

  auto recurse = [&](auto&& self, std::size_t p) -> void {
    if (p == n) {
      visit(std::span<const Vertex>(image));
      return;
    }
    auto try_vertex = [&](Vertex cand) {
      if (used[cand]) return;
      for (int q : plan.back_edges[p]) {
        if (!host.has_edge(cand, image[q])) return;
      }
      image[p] = cand;
      used[cand] = 1;
      self(self, p + 1);
      used[cand] = 0;
    };
    if (plan.anchor[p] >= 0) {
      for (Vertex cand : host.neighbors(image[plan.anchor[p]])) try_vertex(cand);
    } else {
      for (Vertex cand = 0; cand < host.vertex_count(); ++cand) try_vertex(cand);
    }
  };

  if (n == 0) return;
  image[0] = root_image;
  used[root_image] = 1;
  recurse(recurse, 1);
}

/// Slot-to-edge index: edge_of[offsets[u] + j] is the index in Graph::edges()
/// of the edge between u and its j-th neighbour.
std::vector<std::size_t> edge_slots(const Graph& g) {
  std::vector<std::size_t> slot(g.targets().size());
  std::size_t next = 0;
  const auto offsets = g.offsets();
  for (Vertex u = 0; u < g.vertex_count(); ++u) {
    for (std::size_t s = offsets[u]; s < offsets[u + 1]; ++s) {
      Vertex v = g.targets()[s];
      if (u < v) slot[s] = next++;
    }
  }
  for (Vertex u = 0; u < g.vertex_count(); ++u) {
    for (std::size_t s = offsets[u]; s < offsets[u + 1]; ++s) {
      Vertex v = g.targets()[s];
      if (u > v) {
        auto nb = g.neighbors(v);
        std::size_t pos = std::lower_bound(nb.begin(), nb.end(), u) - nb.begin();
        slot[s] = slot[offsets[v] + pos];
      }
    }
  }
  return slot;
}

std::size_t edge_index(const Graph& g, const std::vector<std::size_t>& slots, Vertex u, Vertex v) {
  auto nb = g.neighbors(u);
  std::size_t pos = std::lower_bound(nb.begin(), nb.end(), v) - nb.begin();
  return slots[g.offsets()[u] + pos];
}

void finish_stats(CollectionStats& s) {
  s.m = s.per_vertex.empty() ? 0 : *std::min_element(s.per_vertex.begin(), s.per_vertex.end());
  s.t = s.per_edge.empty() ? 0 : *std::max_element(s.per_edge.begin(), s.per_edge.end());
}

double cycle_constant(int r) {
  const double s = std::sin(std::numbers::pi / (4.0 * r + 2.0));
  return 4.0 * s * s;
}

double log_catalan(int m) {
  return std::lgamma(2.0 * m + 1.0) - 2.0 * std::lgamma(m + 1.0) - std::log(m + 1.0);
}

std::vector<double> default_table() {
  std::vector<double> t{-1.0};  // A_4 is a single edge
  t.insert(t.end(), reference::kLambdaMin.begin(), reference::kLambdaMin.end());
  return t;
}

}  // namespace

std::int64_t automorphism_count(const Graph& k) {
  if (k.vertex_count() == 0) return 1;
  PatternPlan plan = plan_pattern(k);
  std::int64_t count = 0;
  for (Vertex root = 0; root < k.vertex_count(); ++root) {
    for_each_embedding(k, plan, root, [&](std::span<const Vertex>) { ++count; });
  }
  return count;
}

CollectionStats collection_stats(const Graph& g, const Graph& k, const Limits& limits) {
  if (g.vertex_count() > limits.oracle_max_vertices) {
    throw_capacity("subgraph search limited to " + std::to_string(limits.oracle_max_vertices) +
                   " host vertices");
  }
  if (k.vertex_count() == 0) throw_invalid("empty pattern");
  const PatternPlan plan = plan_pattern(k);
  const auto slots = edge_slots(g);
  const auto pattern_edges = k.edges();
  std::vector<std::pair<int, int>> edge_positions;
  {
    std::vector<int> position(k.vertex_count());
    for (std::size_t p = 0; p < plan.order.size(); ++p) position[plan.order[p]] = static_cast<int>(p);
    for (auto [a, b] : pattern_edges) edge_positions.emplace_back(position[a], position[b]);
  }

  CollectionStats stats;
  stats.per_vertex.assign(g.vertex_count(), 0);
  stats.per_edge.assign(g.edge_count(), 0);
  std::int64_t embeddings = 0;

#pragma omp parallel
  {
    std::vector<std::int64_t> local_vertex(g.vertex_count(), 0);
    std::vector<std::int64_t> local_edge(g.edge_count(), 0);
    std::int64_t local_count = 0;
#pragma omp for schedule(dynamic, 8)
    for (std::ptrdiff_t root = 0; root < static_cast<std::ptrdiff_t>(g.vertex_count()); ++root) {
      for_each_embedding(g, plan, static_cast<Vertex>(root), [&](std::span<const Vertex> image) {
        ++local_count;
        for (Vertex v : image) ++local_vertex[v];
        for (auto [p, q] : edge_positions) ++local_edge[edge_index(g, slots, image[p], image[q])];
      });
    }
#pragma omp critical
    {
      embeddings += local_count;
      for (std::size_t v = 0; v < local_vertex.size(); ++v) stats.per_vertex[v] += local_vertex[v];
      for (std::size_t e = 0; e < local_edge.size(); ++e) stats.per_edge[e] += local_edge[e];
    }
  }

  stats.automorphisms = automorphism_count(k);
  stats.copy_count = embeddings / stats.automorphisms;
  for (auto& c : stats.per_vertex) c /= stats.automorphisms;
  for (auto& c : stats.per_edge) c /= stats.automorphisms;
  finish_stats(stats);
  return stats;
}

CollectionStats collection_stats_from_copies(const Graph& g, const Graph& k,
                                             std::span<const std::vector<Vertex>> copies) {
  const auto slots = edge_slots(g);
  const auto pattern_edges = k.edges();
  CollectionStats stats;
  stats.per_vertex.assign(g.vertex_count(), 0);
  stats.per_edge.assign(g.edge_count(), 0);
  std::set<std::vector<std::size_t>> seen;
  for (const auto& copy : copies) {
    if (copy.size() != k.vertex_count()) throw_invalid("copy has the wrong number of vertices");
    std::vector<Vertex> sorted = copy;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
      throw_invalid("copy is not injective");
    }
    std::vector<std::size_t> key;
    for (auto [a, b] : pattern_edges) {
      if (copy[a] >= g.vertex_count() || copy[b] >= g.vertex_count() || !g.has_edge(copy[a], copy[b])) {
        throw_invalid("copy maps a pattern edge onto a non-edge");
      }
      key.push_back(edge_index(g, slots, copy[a], copy[b]));
    }
    std::sort(key.begin(), key.end());
    key.insert(key.begin(), sorted.begin(), sorted.end());
    if (!seen.insert(key).second) throw_invalid("the same subgraph is listed twice");
    for (Vertex v : copy) ++stats.per_vertex[v];
    for (auto [a, b] : pattern_edges) ++stats.per_edge[edge_index(g, slots, copy[a], copy[b])];
  }
  stats.copy_count = static_cast<std::int64_t>(copies.size());
  stats.automorphisms = automorphism_count(k);
  finish_stats(stats);
  return stats;
}

double theorem_bound(int d, int k, double lambda_min_k, std::int64_t m, std::int64_t t) {
  if (t < 1) throw_invalid("t must be at least 1");
  if (m < 0) throw_invalid("m must be non-negative");
  if (k < 1 || d < k) throw_invalid("need d >= k >= 1");
  return -d + (k + lambda_min_k) * static_cast<double>(m) / static_cast<double>(t);
}

double odd_cycle_bound(int d, int r, std::int64_t m, std::int64_t t) {
  if (r < 1) throw_invalid("r must be at least 1");
  if (t < 1) throw_invalid("t must be at least 1");
  if (m < 0) throw_invalid("m must be non-negative");
  return -d + cycle_constant(r) * static_cast<double>(m) / static_cast<double>(t);
}

double assoc_lower_bound(int n) {
  if (n < 5) throw_invalid("the pentagon bound needs n >= 5");
  const double s5 = std::sqrt(5.0);
  return -(5.0 + s5) / 8.0 * (n - 3) - (3.0 - s5) / 8.0;
}

double assoc_upper_bound(int n, std::span<const double> table) {
  if (n < 4) throw_invalid("the flip graph needs n >= 4");
  std::vector<double> ub = table.empty() ? default_table()
                                         : std::vector<double>(table.begin(), table.end());
  const int known = static_cast<int>(ub.size()) + 3;  // largest n covered
  if (n <= known) return ub[n - 4];
  for (int m = known + 1; m <= n; ++m) {
    double best = 0.0;
    for (int k = 4; k <= m - 2; ++k) best = std::min(best, ub[k - 4] + ub[m - k + 2 - 4]);
    ub.push_back(best);
  }
  return ub[n - 4];
}

double fixed_split_upper_bound(int n) {
  if (n < 12 || n % 10 != 2) throw_invalid("the fixed split applies to n = 2 mod 10, n >= 12");
  return reference::kLimitUpper * (n - 2);
}

std::array<double, 10> upper_bound_offsets(std::span<const double> table) {
  std::array<double, 10> c{};
  for (int n = 13; n <= 22; ++n) {
    c[n % 10] = assoc_upper_bound(n, table) - reference::kLimitUpper * n;
  }
  return c;
}

double assoc_hexagon_lower_bound(int n) {
  if (n < 6) throw_invalid("the hexagon bound needs n >= 6");
  return -(n - 3) + (2.0 - std::sqrt(2.0)) * (n - 5) / 14.0;
}

double chromatic_lower_bound(int n, double lambda_min) {
  if (lambda_min >= 0.0) throw_invalid("lambda_min must be negative");
  return 1.0 + (n - 3) / std::abs(lambda_min);
}

MixingBounds mixing_bounds(int n, double lambda_2, double eps) {
  if (!(eps > 0.0 && eps < 1.0)) throw_invalid("eps must lie in (0, 1)");
  if (n < 4) throw_invalid("the flip graph needs n >= 4");
  const double d = n - 3;
  const double gap = d - lambda_2;
  if (!(gap > 0.0)) throw_invalid("lambda_2 must be below the degree n - 3");
  MixingBounds b;
  b.upper = d / gap * (log_catalan(n - 2) - std::log(eps));
  b.lower = lambda_2 / (2.0 * gap);
  return b;
}

LimitBracket limit_bracket(std::span<const double> table) {
  LimitBracket out;
  out.lower = -(5.0 + std::sqrt(5.0)) / 8.0;
  std::vector<double> t = table.empty() ? default_table()
                                        : std::vector<double>(table.begin(), table.end());
  out.empirical_upper = 0.0;
  for (int n = 5; n <= static_cast<int>(t.size()) + 3; ++n) {
    out.ratios.push_back(t[n - 4] / (n - 3));
    // lambda_min(A_{m+2}) is subadditive in m, so the limit is at most every
    // lambda_min(A_n) / (n - 2).
    const double fekete = t[n - 4] / (n - 2);
    if (fekete < out.empirical_upper) {
      out.empirical_upper = fekete;
      out.empirical_argmin = n;
    }
  }
  return out;
}

BoundReport lower_bound_report(std::string name, double bound, std::optional<double> exact) {
  BoundReport r;
  r.bound_name = std::move(name);
  r.bound_value = bound;
  r.exact_value = exact;
  r.satisfied = !exact || bound <= *exact + kSlack;
  return r;
}

BoundReport upper_bound_report(std::string name, double bound, std::optional<double> exact) {
  BoundReport r;
  r.bound_name = std::move(name);
  r.bound_value = bound;
  r.exact_value = exact;
  r.satisfied = !exact || *exact <= bound + kSlack;
  return r;
}

}  // namespace assoc
