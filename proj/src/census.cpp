#include "assoc/census.hpp"

#include <algorithm>
#include <string>

namespace assoc {

namespace {

void check_oracle_size(const Graph& g, const Limits& limits) {
  if (g.vertex_count() > limits.oracle_max_vertices) {
    throw_capacity("cycle oracle limited to " + std::to_string(limits.oracle_max_vertices) +
                   " vertices");
  }
}

/// The diagonal of t that t2 does not have; throws unless t, t2 are adjacent.
Diagonal flipped_diagonal(const Triangulation& t, const Triangulation& t2) {
  if (t.n() != t2.n()) throw_invalid("triangulations of different polygons");
  auto common = common_diagonals(t, t2);
  if (static_cast<int>(common.size()) != t.n() - 4) {
    throw_invalid("triangulations " + t.code() + " and " + t2.code() + " are not adjacent");
  }
  for (Diagonal d : t.diagonals()) {
    if (!t2.contains(d)) return d;
  }
  throw_invalid("triangulations are equal");
}

bool contains_all(const DiagonalMask& outer, const DiagonalMask& inner) {
  return (outer.lo & inner.lo) == inner.lo && (outer.hi & inner.hi) == inner.hi;
}

std::int64_t count_containing(std::span<const Triangulation> all, const DiagonalMask& kept) {
  std::int64_t c = 0;
  for (const auto& s : all) {
    if (contains_all(s.mask(), kept)) ++c;
  }
  return c;
}

constexpr std::int64_t kHexagonTriangulations = 14;  // Catalan number C_4

}  // namespace

std::int64_t pentagon_count_vertex_formula(const Triangulation& t) {
  std::int64_t total = 0;
  for (int d : dual_tree(t).degrees) total += static_cast<std::int64_t>(d) * (d - 1) / 2;
  return total;
}

std::int64_t pentagon_count_vertex_oracle(const Graph& g, Vertex v, const Limits& limits) {
  check_oracle_size(g, limits);
  if (v >= g.vertex_count()) throw_invalid("vertex out of range");
  // closed walks v a b c e v on five distinct vertices; each cycle seen twice
  std::int64_t walks = 0;
  for (Vertex a : g.neighbors(v)) {
    for (Vertex b : g.neighbors(a)) {
      if (b == v) continue;
      for (Vertex c : g.neighbors(b)) {
        if (c == v || c == a) continue;
        for (Vertex e : g.neighbors(c)) {
          if (e == v || e == a || e == b) continue;
          if (g.has_edge(e, v)) ++walks;
        }
      }
    }
  }
  return walks / 2;
}

std::int64_t pentagon_count_edge(const Triangulation& t, const Triangulation& t2) {
  Diagonal d = flipped_diagonal(t, t2);
  auto q = flip_quadrilateral(t, d);
  std::int64_t count = 0;
  for (int k = 0; k < 4; ++k) {
    if (!is_polygon_side(t.n(), q[k], q[(k + 1) % 4])) ++count;
  }
  return count;
}

std::int64_t pentagon_count_edge_oracle(const Graph& g, Vertex u, Vertex v,
                                        const Limits& limits) {
  check_oracle_size(g, limits);
  if (!g.has_edge(u, v)) throw_invalid("vertices are not adjacent");
  // paths v a b c back to u on distinct vertices; orientation fixed by u -> v
  std::int64_t count = 0;
  for (Vertex a : g.neighbors(v)) {
    if (a == u) continue;
    for (Vertex b : g.neighbors(a)) {
      if (b == u || b == v) continue;
      for (Vertex c : g.neighbors(b)) {
        if (c == u || c == v || c == a) continue;
        if (g.has_edge(c, u)) ++count;
      }
    }
  }
  return count;
}

std::int64_t count_five_cycles(const Graph& g, const Limits& limits) {
  check_oracle_size(g, limits);
  // smallest vertex s first, direction fixed by requiring a < e
  std::int64_t count = 0;
  for (Vertex s = 0; s < g.vertex_count(); ++s) {
    for (Vertex a : g.neighbors(s)) {
      if (a <= s) continue;
      for (Vertex b : g.neighbors(a)) {
        if (b <= s) continue;
        for (Vertex c : g.neighbors(b)) {
          if (c <= s || c == a) continue;
          for (Vertex e : g.neighbors(c)) {
            if (e <= a || e == b) continue;
            if (g.has_edge(e, s)) ++count;
          }
        }
      }
    }
  }
  return count;
}

HexagonCount hexagon_count_vertex_formula(const Triangulation& t) {
  DualTree tree = dual_tree(t);
  HexagonCount out;
  for (auto [x, y] : tree.edges) {
    out.p4 += static_cast<std::int64_t>(tree.degrees[x] - 1) * (tree.degrees[y] - 1);
  }
  for (int d : tree.degrees) {
    out.star += static_cast<std::int64_t>(d) * (d - 1) * (d - 2) / 6;
  }
  return out;
}

std::int64_t hexagon_count_vertex_oracle(std::span<const Triangulation> all,
                                         const Triangulation& t) {
  const auto diags = t.diagonals();
  const std::size_t m = diags.size();
  std::int64_t count = 0;
  for (std::size_t a = 0; a < m; ++a) {
    for (std::size_t b = a + 1; b < m; ++b) {
      for (std::size_t c = b + 1; c < m; ++c) {
        DiagonalMask kept;
        for (std::size_t k = 0; k < m; ++k) {
          if (k != a && k != b && k != c) kept.set(diags[k]);
        }
        if (count_containing(all, kept) == kHexagonTriangulations) ++count;
      }
    }
  }
  return count;
}

std::int64_t hexagon_count_vertex_oracle(int n, const Triangulation& t, const Limits& limits) {
  if (t.n() != n) throw_invalid("triangulation is not of the " + std::to_string(n) + "-gon");
  auto all = enumerate_triangulations(n, limits);
  if (all.size() > limits.oracle_max_vertices) {
    throw_capacity("hexagon oracle limited to " + std::to_string(limits.oracle_max_vertices) +
                   " triangulations");
  }
  return hexagon_count_vertex_oracle(all, t);
}

std::int64_t hexagon_count_edge(const Triangulation& t, const Triangulation& t2) {
  flipped_diagonal(t, t2);
  auto common = common_diagonals(t, t2);
  Dissection dis = dissect(t.n(), common);
  int quad = -1;
  for (std::size_t f = 0; f < dis.faces.size(); ++f) {
    if (dis.faces[f].size() == 4) quad = static_cast<int>(f);
  }
  std::int64_t count = 0;
  const std::int64_t dq = dis.degrees[quad];
  count += dq * (dq - 1) / 2;
  for (auto [x, y] : dis.adjacency) {
    if (x == quad) count += dis.degrees[y] - 1;
    if (y == quad) count += dis.degrees[x] - 1;
  }
  return count;
}

std::int64_t hexagon_count_edge_oracle(std::span<const Triangulation> all,
                                       const Triangulation& t, const Triangulation& t2) {
  flipped_diagonal(t, t2);
  auto common = common_diagonals(t, t2);
  const std::size_t m = common.size();
  std::int64_t count = 0;
  for (std::size_t a = 0; a < m; ++a) {
    for (std::size_t b = a + 1; b < m; ++b) {
      DiagonalMask kept;
      for (std::size_t k = 0; k < m; ++k) {
        if (k != a && k != b) kept.set(common[k]);
      }
      if (count_containing(all, kept) == kHexagonTriangulations) ++count;
    }
  }
  return count;
}

bool CensusReport::consistent() const noexcept {
  for (const auto& v : per_vertex) {
    if (v.pentagon_oracle && *v.pentagon_oracle != v.pentagon_formula) return false;
    if (v.hexagon_oracle && *v.hexagon_oracle != v.hexagon.total()) return false;
  }
  for (const auto& e : per_edge) {
    if (e.pentagon_oracle && *e.pentagon_oracle != e.pentagons) return false;
    if (e.hexagon_oracle && *e.hexagon_oracle != e.hexagons) return false;
  }
  return true;
}

CensusReport run_census(const Associahedron& a, bool with_oracle, const Limits& limits) {
  const Graph& g = a.graph();
  if (with_oracle) check_oracle_size(g, limits);
  CensusReport report;
  report.n = a.n();
  const auto verts = a.vertices();
  const std::ptrdiff_t nv = static_cast<std::ptrdiff_t>(g.vertex_count());
  report.per_vertex.resize(nv);

#pragma omp parallel for schedule(dynamic, 16)
  for (std::ptrdiff_t v = 0; v < nv; ++v) {
    VertexCensus& c = report.per_vertex[v];
    c.vertex = static_cast<Vertex>(v);
    c.ears = ear_count(verts[v]);
    c.pentagon_formula = pentagon_count_vertex_formula(verts[v]);
    c.hexagon = hexagon_count_vertex_formula(verts[v]);
    if (with_oracle) {
      c.pentagon_oracle = pentagon_count_vertex_oracle(g, c.vertex, limits);
      c.hexagon_oracle = hexagon_count_vertex_oracle(verts, verts[v]);
    }
  }

  const auto edges = g.edges();
  const std::ptrdiff_t ne = static_cast<std::ptrdiff_t>(edges.size());
  report.per_edge.resize(ne);
#pragma omp parallel for schedule(dynamic, 16)
  for (std::ptrdiff_t k = 0; k < ne; ++k) {
    auto [u, v] = edges[k];
    EdgeCensus& c = report.per_edge[k];
    c.u = u;
    c.v = v;
    c.pentagons = pentagon_count_edge(verts[u], verts[v]);
    c.hexagons = hexagon_count_edge(verts[u], verts[v]);
    if (with_oracle) {
      c.pentagon_oracle = pentagon_count_edge_oracle(g, u, v, limits);
      c.hexagon_oracle = hexagon_count_edge_oracle(verts, verts[u], verts[v]);
    }
  }

  if (!report.per_vertex.empty()) {
    auto by = [](auto field) { return [field](const auto& x, const auto& y) { return field(x) < field(y); }; };
    auto pv = [](const VertexCensus& c) { return c.pentagon_formula; };
    auto hv = [](const VertexCensus& c) { return c.hexagon.total(); };
    report.min_pentagon_vertex = pv(*std::min_element(report.per_vertex.begin(), report.per_vertex.end(), by(pv)));
    report.min_hexagon_vertex = hv(*std::min_element(report.per_vertex.begin(), report.per_vertex.end(), by(hv)));
  }
  if (!report.per_edge.empty()) {
    auto pe = [](const EdgeCensus& c) { return c.pentagons; };
    auto he = [](const EdgeCensus& c) { return c.hexagons; };
    auto [pmin, pmax] = std::minmax_element(report.per_edge.begin(), report.per_edge.end(),
                                            [&](const auto& x, const auto& y) { return pe(x) < pe(y); });
    auto [hmin, hmax] = std::minmax_element(report.per_edge.begin(), report.per_edge.end(),
                                            [&](const auto& x, const auto& y) { return he(x) < he(y); });
    report.min_pentagon_edge = pmin->pentagons;
    report.max_pentagon_edge = pmax->pentagons;
    report.min_hexagon_edge = hmin->hexagons;
    report.max_hexagon_edge = hmax->hexagons;
  }
  return report;
}

}  // namespace assoc
