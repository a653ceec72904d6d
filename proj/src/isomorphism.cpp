#include <algorithm>
#include <map>
#include <queue>
#include <string>

#include "assoc/flipgraph.hpp"

namespace assoc {

namespace {

// Colour refinement on the disjoint union so that colours are comparable
// across the two graphs. Returns one colour per union vertex.
std::vector<int> refine_colors(const Graph& g, const Graph& h) {
  const std::size_t ng = g.vertex_count();
  const std::size_t total = ng + h.vertex_count();
  auto nbrs = [&](std::size_t v) {
    return v < ng ? g.neighbors(static_cast<Vertex>(v))
                  : h.neighbors(static_cast<Vertex>(v - ng));
  };
  auto offset = [&](std::size_t v) { return v < ng ? 0 : ng; };

  std::vector<int> color(total);
  for (std::size_t v = 0; v < total; ++v) color[v] = static_cast<int>(nbrs(v).size());
  std::size_t classes = 0;
  for (;;) {
    std::map<std::vector<int>, int> ids;
    std::vector<int> next(total);
    for (std::size_t v = 0; v < total; ++v) {
      std::vector<int> sig;
      sig.reserve(nbrs(v).size() + 1);
      for (Vertex w : nbrs(v)) sig.push_back(color[w + offset(v)]);
      std::sort(sig.begin(), sig.end());
      sig.push_back(color[v]);
      next[v] = ids.emplace(std::move(sig), static_cast<int>(ids.size())).first->second;
    }
    // the map assigns ids in first-seen order; renumber canonically
    std::vector<int> rank(ids.size());
    int r = 0;
    for (auto& [sig, id] : ids) rank[id] = r++;
    for (auto& c : next) c = rank[c];
    color = std::move(next);
    if (ids.size() == classes) break;
    classes = ids.size();
  }
  return color;
}

class Matcher {
 public:
  Matcher(const Graph& g, const Graph& h, std::vector<int> color)
      : g_(g), h_(h), color_(std::move(color)), n_(g.vertex_count()) {
    forward_.assign(n_, kUnmapped);
    backward_.assign(n_, kUnmapped);
    build_order();
  }

  bool run() { return extend(0); }

 private:
  static constexpr Vertex kUnmapped = ~Vertex{0};

  int g_color(Vertex v) const { return color_[v]; }
  int h_color(Vertex v) const { return color_[n_ + v]; }

  void build_order() {
    std::vector<std::size_t> class_size;
    for (int c : color_) {
      if (static_cast<std::size_t>(c) >= class_size.size()) class_size.resize(c + 1, 0);
      ++class_size[c];
    }
    std::vector<char> seen(n_, 0);
    parent_.assign(n_, kUnmapped);
    for (;;) {
      // root each component at its rarest-colour vertex
      Vertex root = kUnmapped;
      for (Vertex v = 0; v < n_; ++v) {
        if (!seen[v] && (root == kUnmapped ||
                         class_size[g_color(v)] < class_size[g_color(root)])) {
          root = v;
        }
      }
      if (root == kUnmapped) break;
      std::queue<Vertex> q;
      q.push(root);
      seen[root] = 1;
      while (!q.empty()) {
        Vertex u = q.front();
        q.pop();
        order_.push_back(u);
        for (Vertex w : g_.neighbors(u)) {
          if (!seen[w]) {
            seen[w] = 1;
            parent_[w] = u;
            q.push(w);
          }
        }
      }
    }
  }

  bool consistent(Vertex v, Vertex cand) const {
    if (backward_[cand] != kUnmapped || g_color(v) != h_color(cand)) return false;
    std::size_t mapped_g = 0;
    for (Vertex u : g_.neighbors(v)) {
      if (forward_[u] == kUnmapped) continue;
      ++mapped_g;
      if (!h_.has_edge(cand, forward_[u])) return false;
    }
    std::size_t mapped_h = 0;
    for (Vertex w : h_.neighbors(cand)) {
      if (backward_[w] != kUnmapped) ++mapped_h;
    }
    return mapped_g == mapped_h;
  }

  bool try_candidate(std::size_t depth, Vertex v, Vertex cand) {
    if (!consistent(v, cand)) return false;
    forward_[v] = cand;
    backward_[cand] = v;
    if (extend(depth + 1)) return true;
    forward_[v] = kUnmapped;
    backward_[cand] = kUnmapped;
    return false;
  }

  bool extend(std::size_t depth) {
    if (depth == n_) return true;
    const Vertex v = order_[depth];
    if (parent_[v] != kUnmapped) {
      for (Vertex cand : h_.neighbors(forward_[parent_[v]])) {
        if (try_candidate(depth, v, cand)) return true;
      }
      return false;
    }
    for (Vertex cand = 0; cand < n_; ++cand) {
      if (try_candidate(depth, v, cand)) return true;
    }
    return false;
  }

  const Graph& g_;
  const Graph& h_;
  std::vector<int> color_;
  std::size_t n_;
  std::vector<Vertex> order_;
  std::vector<Vertex> parent_;
  std::vector<Vertex> forward_;
  std::vector<Vertex> backward_;
};

}  // namespace

bool is_isomorphic(const Graph& g, const Graph& h, const Limits& limits) {
  const std::size_t cap = limits.isomorphism_max_vertices;
  if (g.vertex_count() > cap || h.vertex_count() > cap) {
    throw_capacity("isomorphism test limited to " + std::to_string(cap) + " vertices");
  }
  if (g.vertex_count() != h.vertex_count() || g.edge_count() != h.edge_count()) return false;
  std::vector<int> color = refine_colors(g, h);
  const std::size_t n = g.vertex_count();
  std::vector<int> cg(color.begin(), color.begin() + n);
  std::vector<int> ch(color.begin() + n, color.end());
  std::sort(cg.begin(), cg.end());
  std::sort(ch.begin(), ch.end());
  if (cg != ch) return false;
  return Matcher(g, h, std::move(color)).run();
}

}  // namespace assoc
