#include "assoc/graph.hpp"

#include <algorithm>
#include <numeric>
#include <ostream>
#include <queue>
#include <string>

#include "assoc/error.hpp"
#include "assoc/rng.hpp"

namespace assoc {

Graph Graph::from_edges(std::size_t vertex_count, std::span<const Edge> edges) {
  std::vector<std::vector<Vertex>> adj(vertex_count);
  for (auto [u, v] : edges) {
    if (u >= vertex_count || v >= vertex_count) throw_invalid("edge endpoint out of range");
    if (u == v) throw_invalid("loop at vertex " + std::to_string(u));
    adj[u].push_back(v);
    adj[v].push_back(u);
  }
  return from_adjacency(std::move(adj));
}

Graph Graph::from_adjacency(std::vector<std::vector<Vertex>> adjacency) {
  Graph g;
  const std::size_t n = adjacency.size();
  g.offsets_.assign(n + 1, 0);
  for (std::size_t v = 0; v < n; ++v) {
    auto& list = adjacency[v];
    std::sort(list.begin(), list.end());
    if (std::adjacent_find(list.begin(), list.end()) != list.end()) {
      throw_invalid("duplicate edge at vertex " + std::to_string(v));
    }
    for (Vertex w : list) {
      if (w >= n) throw_invalid("neighbour index out of range");
      if (w == v) throw_invalid("loop at vertex " + std::to_string(v));
    }
    g.offsets_[v + 1] = g.offsets_[v] + list.size();
  }
  g.targets_.reserve(g.offsets_[n]);
  for (auto& list : adjacency) g.targets_.insert(g.targets_.end(), list.begin(), list.end());
  for (std::size_t v = 0; v < n; ++v) {
    for (Vertex w : g.neighbors(static_cast<Vertex>(v))) {
      if (!g.has_edge(w, static_cast<Vertex>(v))) throw_invalid("adjacency is not symmetric");
    }
  }
  g.finalize();
  return g;
}

void Graph::finalize() {
  degree_.reset();
  const std::size_t n = vertex_count();
  if (n == 0) return;
  const std::size_t d0 = degree(0);
  for (std::size_t v = 1; v < n; ++v) {
    if (degree(static_cast<Vertex>(v)) != d0) return;
  }
  degree_ = static_cast<int>(d0);
}

bool Graph::has_edge(Vertex u, Vertex v) const noexcept {
  if (u >= vertex_count()) return false;
  auto nb = neighbors(u);
  return std::binary_search(nb.begin(), nb.end(), v);
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(edge_count());
  for (Vertex u = 0; u < vertex_count(); ++u) {
    for (Vertex v : neighbors(u)) {
      if (u < v) out.emplace_back(u, v);
    }
  }
  return out;
}

Graph cycle_graph(std::size_t m) {
  if (m < 3) throw_invalid("a cycle needs at least 3 vertices");
  std::vector<Edge> e;
  for (std::size_t k = 0; k < m; ++k) e.emplace_back(k, (k + 1) % m);
  return Graph::from_edges(m, e);
}

Graph path_graph(std::size_t m) {
  std::vector<Edge> e;
  for (std::size_t k = 0; k + 1 < m; ++k) e.emplace_back(k, k + 1);
  return Graph::from_edges(m, e);
}

Graph complete_graph(std::size_t m) {
  std::vector<Edge> e;
  for (std::size_t a = 0; a < m; ++a) {
    for (std::size_t b = a + 1; b < m; ++b) e.emplace_back(a, b);
  }
  return Graph::from_edges(m, e);
}

Graph petersen_graph() {
  std::vector<Edge> e;
  for (Vertex k = 0; k < 5; ++k) {
    e.emplace_back(k, (k + 1) % 5);          // outer 5-cycle
    e.emplace_back(5 + k, 5 + (k + 2) % 5);  // inner pentagram
    e.emplace_back(k, 5 + k);                // spokes
  }
  return Graph::from_edges(10, e);
}

Graph random_regular_graph(std::size_t vertex_count, int degree, std::uint64_t seed) {
  if (degree < 0 || static_cast<std::size_t>(degree) >= vertex_count ||
      (vertex_count * degree) % 2 != 0) {
    throw_invalid("no simple " + std::to_string(degree) + "-regular graph on " +
                  std::to_string(vertex_count) + " vertices");
  }
  Rng rng(seed);
  std::vector<Vertex> points;
  for (Vertex v = 0; v < vertex_count; ++v) {
    for (int k = 0; k < degree; ++k) points.push_back(v);
  }
  for (int attempt = 0; attempt < 100000; ++attempt) {
    for (std::size_t k = points.size(); k > 1; --k) {
      std::swap(points[k - 1], points[rng.below(k)]);
    }
    std::vector<Edge> edges;
    bool ok = true;
    for (std::size_t k = 0; k < points.size() && ok; k += 2) {
      Vertex a = std::min(points[k], points[k + 1]);
      Vertex b = std::max(points[k], points[k + 1]);
      if (a == b) ok = false;
      edges.emplace_back(a, b);
    }
    if (!ok) continue;
    std::sort(edges.begin(), edges.end());
    if (std::adjacent_find(edges.begin(), edges.end()) != edges.end()) continue;
    return Graph::from_edges(vertex_count, edges);
  }
  throw_capacity("pairing model did not produce a simple graph");
}

bool validate_regular(const Graph& g, int d) noexcept {
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    if (static_cast<int>(g.degree(v)) != d) return false;
  }
  return true;
}

bool is_connected(const Graph& g) {
  const std::size_t n = g.vertex_count();
  if (n == 0) return true;
  std::vector<char> seen(n, 0);
  std::queue<Vertex> q;
  q.push(0);
  seen[0] = 1;
  std::size_t reached = 1;
  while (!q.empty()) {
    Vertex u = q.front();
    q.pop();
    for (Vertex w : g.neighbors(u)) {
      if (!seen[w]) {
        seen[w] = 1;
        ++reached;
        q.push(w);
      }
    }
  }
  return reached == n;
}

bool has_triangle(const Graph& g) {
  for (Vertex u = 0; u < g.vertex_count(); ++u) {
    auto nu = g.neighbors(u);
    for (Vertex v : nu) {
      if (v <= u) continue;
      auto nv = g.neighbors(v);
      // sorted lists: any common neighbour closes a triangle
      auto a = nu.begin();
      auto b = nv.begin();
      while (a != nu.end() && b != nv.end()) {
        if (*a == *b) return true;
        if (*a < *b) ++a; else ++b;
      }
    }
  }
  return false;
}

void write_edge_list(std::ostream& out, const Graph& g) {
  out << "# vertices=" << g.vertex_count() << " degree=";
  if (auto d = g.regular_degree()) out << *d; else out << "irregular";
  out << '\n';
  for (auto [u, v] : g.edges()) out << u << ' ' << v << '\n';
}

}  // namespace assoc
