#include "assoc/flipgraph.hpp"

#include <algorithm>
#include <string>

#include "assoc/kernels.hpp"

namespace assoc {

Associahedron::Associahedron(int n, std::vector<Triangulation> vertices, Graph graph)
    : n_(n), vertices_(std::move(vertices)), graph_(std::move(graph)) {
  index_.reserve(vertices_.size());
  for (Vertex v = 0; v < vertices_.size(); ++v) index_.emplace(vertices_[v].mask(), v);
}

std::optional<Vertex> Associahedron::index_of(const Triangulation& t) const {
  if (t.n() != n_) return std::nullopt;
  auto it = index_.find(t.mask());
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

namespace {

template <class TableKernel>
Associahedron build_with(int n, const Limits& limits, TableKernel kernel) {
  std::vector<Triangulation> vertices = enumerate_triangulations(n, limits);
  std::unordered_map<DiagonalMask, Vertex, DiagonalMaskHash> index;
  index.reserve(vertices.size());
  for (Vertex v = 0; v < vertices.size(); ++v) index.emplace(vertices[v].mask(), v);

  const std::size_t degree = static_cast<std::size_t>(n - 3);
  std::vector<Vertex> table(vertices.size() * degree);
  auto index_of = [&index](const Triangulation& t) { return index.at(t.mask()); };
  kernel(std::span<const Triangulation>(vertices), index_of, std::span<Vertex>(table));

  std::vector<std::vector<Vertex>> adj(vertices.size());
  for (std::size_t v = 0; v < vertices.size(); ++v) {
    adj[v].assign(table.begin() + v * degree, table.begin() + (v + 1) * degree);
  }
  Graph g = Graph::from_adjacency(std::move(adj));
  return Associahedron(n, std::move(vertices), std::move(g));
}

}  // namespace

Associahedron build_associahedron(int n, const Limits& limits) {
  return build_with(n, limits, [](auto verts, const auto& idx, auto out) {
    kernels::flip_neighbor_table(verts, idx, out);
  });
}

Associahedron build_associahedron_serial(int n, const Limits& limits) {
  return build_with(n, limits, [](auto verts, const auto& idx, auto out) {
    kernels::serial::flip_neighbor_table(verts, idx, out);
  });
}

Graph box_product(const Graph& g, const Graph& h, const Limits& limits) {
  const std::size_t ng = g.vertex_count();
  const std::size_t nh = h.vertex_count();
  if (nh != 0 && ng > limits.product_max_vertices / nh) {
    throw_capacity("box product of " + std::to_string(ng) + " x " + std::to_string(nh) +
                   " vertices exceeds " + std::to_string(limits.product_max_vertices));
  }
  std::vector<std::vector<Vertex>> adj(ng * nh);
  for (Vertex a = 0; a < ng; ++a) {
    for (Vertex b = 0; b < nh; ++b) {
      auto& list = adj[a * nh + b];
      list.reserve(g.degree(a) + h.degree(b));
      for (Vertex a2 : g.neighbors(a)) list.push_back(static_cast<Vertex>(a2 * nh + b));
      for (Vertex b2 : h.neighbors(b)) list.push_back(static_cast<Vertex>(a * nh + b2));
    }
  }
  return Graph::from_adjacency(std::move(adj));
}

InducedSubgraph induced_subgraph(const Graph& g, std::span<const Vertex> keep) {
  InducedSubgraph out;
  out.original.assign(keep.begin(), keep.end());
  std::sort(out.original.begin(), out.original.end());
  if (std::adjacent_find(out.original.begin(), out.original.end()) != out.original.end()) {
    throw_invalid("repeated vertex in induced subgraph selection");
  }
  constexpr Vertex kAbsent = ~Vertex{0};
  std::vector<Vertex> remap(g.vertex_count(), kAbsent);
  for (Vertex k = 0; k < out.original.size(); ++k) {
    if (out.original[k] >= g.vertex_count()) {
      throw_invalid("vertex " + std::to_string(out.original[k]) + " out of range");
    }
    remap[out.original[k]] = k;
  }
  std::vector<std::vector<Vertex>> adj(out.original.size());
  for (Vertex k = 0; k < out.original.size(); ++k) {
    for (Vertex w : g.neighbors(out.original[k])) {
      if (remap[w] != kAbsent) adj[k].push_back(remap[w]);
    }
  }
  out.graph = Graph::from_adjacency(std::move(adj));
  return out;
}

InducedSubgraph diagonal_slice(const Associahedron& a, Diagonal d) {
  if (!is_valid_diagonal(a.n(), d)) {
    throw_invalid("(" + std::to_string(d.i) + "," + std::to_string(d.j) +
                  ") is not a diagonal of the " + std::to_string(a.n()) + "-gon");
  }
  std::vector<Vertex> keep;
  for (Vertex v = 0; v < a.vertices().size(); ++v) {
    if (a.vertex(v).contains(d)) keep.push_back(v);
  }
  return induced_subgraph(a.graph(), keep);
}

InducedSubgraph diagonal_slice(int n, Diagonal d, const Limits& limits) {
  if (!is_valid_diagonal(n, d)) {
    throw_invalid("(" + std::to_string(d.i) + "," + std::to_string(d.j) +
                  ") is not a diagonal of the " + std::to_string(n) + "-gon");
  }
  return diagonal_slice(build_associahedron(n, limits), d);
}

}  // namespace assoc
