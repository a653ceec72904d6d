#include "assoc/triangulation.hpp"

#include <algorithm>
#include <charconv>
#include <iterator>
#include <map>

namespace assoc {

Triangulation make_unchecked(int n, std::vector<Diagonal> sorted);

namespace {

int mask_index(Diagonal d) noexcept {
  return (d.j - 1) * (d.j - 2) / 2 + (d.i - 1);
}

void check_n(int n, const Limits& limits) {
  if (n < 4) throw_range("polygon size " + std::to_string(n) + " is below 4");
  const int cap = std::min(limits.max_n, kHardMaxN);
  if (n > cap) {
    throw_capacity("polygon size " + std::to_string(n) + " exceeds the configured maximum " +
                   std::to_string(cap));
  }
}

using DiagonalLists = std::vector<std::vector<Diagonal>>;

const DiagonalLists& sub_enumeration(int a, int b,
                                     std::map<std::pair<int, int>, DiagonalLists>& memo) {
  auto key = std::make_pair(a, b);
  if (auto it = memo.find(key); it != memo.end()) return it->second;
  DiagonalLists out;
  if (b - a <= 1) {
    out.emplace_back();
  } else {
    for (int k = a + 1; k < b; ++k) {
      const DiagonalLists& left = sub_enumeration(a, k, memo);
      const DiagonalLists& right = sub_enumeration(k, b, memo);
      for (const auto& l : left) {
        for (const auto& r : right) {
          std::vector<Diagonal> diags;
          diags.reserve(l.size() + r.size() + 2);
          diags.insert(diags.end(), l.begin(), l.end());
          diags.insert(diags.end(), r.begin(), r.end());
          if (k - a >= 2) diags.push_back({a, k});
          if (b - k >= 2) diags.push_back({k, b});
          out.push_back(std::move(diags));
        }
      }
    }
  }
  return memo.emplace(key, std::move(out)).first->second;
}

}  // namespace

bool is_valid_diagonal(int n, Diagonal d) noexcept {
  return n >= 4 && n <= kHardMaxN && 1 <= d.i && d.i < d.j && d.j <= n &&
         d.j - d.i >= 2 && !(d.i == 1 && d.j == n);
}

Diagonal make_diagonal(int n, int a, int b) {
  Diagonal d{std::min(a, b), std::max(a, b)};
  if (!is_valid_diagonal(n, d)) {
    throw_invalid("(" + std::to_string(a) + "," + std::to_string(b) +
                  ") is not a diagonal of the " + std::to_string(n) + "-gon");
  }
  return d;
}

bool is_polygon_side(int n, int a, int b) noexcept {
  if (a > b) std::swap(a, b);
  return (b - a == 1) || (a == 1 && b == n);
}

bool crosses(Diagonal a, Diagonal b) noexcept {
  return (a.i < b.i && b.i < a.j && a.j < b.j) ||
         (b.i < a.i && a.i < b.j && b.j < a.j);
}

bool crosses(int n, Diagonal a, Diagonal b) {
  if (!is_valid_diagonal(n, a) || !is_valid_diagonal(n, b)) {
    throw_invalid("diagonals are not both valid for n = " + std::to_string(n));
  }
  return crosses(a, b);
}

void DiagonalMask::set(Diagonal d) noexcept {
  int idx = mask_index(d);
  if (idx < 64) {
    lo |= std::uint64_t{1} << idx;
  } else {
    hi |= std::uint64_t{1} << (idx - 64);
  }
}

bool DiagonalMask::test(Diagonal d) const noexcept {
  int idx = mask_index(d);
  return idx < 64 ? ((lo >> idx) & 1U) != 0 : ((hi >> (idx - 64)) & 1U) != 0;
}

std::size_t DiagonalMaskHash::operator()(const DiagonalMask& m) const noexcept {
  std::uint64_t h = m.lo * 0x9E3779B97F4A7C15ULL;
  h ^= (m.hi + 0x632BE59BD9B4E019ULL + (h << 6) + (h >> 2));
  return static_cast<std::size_t>(h ^ (h >> 31));
}

Triangulation make_unchecked(int n, std::vector<Diagonal> sorted) {
  return Triangulation(Triangulation::Unchecked{}, n, std::move(sorted));
}

Triangulation::Triangulation(int n, std::vector<Diagonal> diagonals) : n_(n) {
  if (n < 4 || n > kHardMaxN) {
    throw_range("polygon size " + std::to_string(n) + " outside [4, " +
                std::to_string(kHardMaxN) + "]");
  }
  if (static_cast<int>(diagonals.size()) != n - 3) {
    throw_invalid("a triangulation of the " + std::to_string(n) + "-gon needs " +
                  std::to_string(n - 3) + " diagonals, got " +
                  std::to_string(diagonals.size()));
  }
  for (auto& d : diagonals) d = make_diagonal(n, d.i, d.j);
  std::sort(diagonals.begin(), diagonals.end());
  for (std::size_t a = 0; a < diagonals.size(); ++a) {
    if (a + 1 < diagonals.size() && diagonals[a] == diagonals[a + 1]) {
      throw_invalid("duplicate diagonal");
    }
    for (std::size_t b = a + 1; b < diagonals.size(); ++b) {
      if (crosses(diagonals[a], diagonals[b])) {
        throw_invalid("diagonals " + std::to_string(diagonals[a].i) + "-" +
                      std::to_string(diagonals[a].j) + " and " +
                      std::to_string(diagonals[b].i) + "-" +
                      std::to_string(diagonals[b].j) + " cross");
      }
    }
  }
  diagonals_ = std::move(diagonals);
}

bool Triangulation::contains(Diagonal d) const noexcept {
  return std::binary_search(diagonals_.begin(), diagonals_.end(), d);
}

DiagonalMask Triangulation::mask() const noexcept {
  DiagonalMask m;
  for (Diagonal d : diagonals_) m.set(d);
  return m;
}

std::string Triangulation::code() const {
  std::string out;
  for (std::size_t k = 0; k < diagonals_.size(); ++k) {
    if (k) out.push_back(',');
    out += std::to_string(diagonals_[k].i);
    out.push_back('-');
    out += std::to_string(diagonals_[k].j);
  }
  return out;
}

Triangulation Triangulation::parse(int n, std::string_view code) {
  std::vector<Diagonal> diags;
  while (!code.empty()) {
    auto comma = code.find(',');
    std::string_view item = code.substr(0, comma);
    code = comma == std::string_view::npos ? std::string_view{} : code.substr(comma + 1);
    auto dash = item.find('-');
    if (dash == std::string_view::npos) throw_invalid("malformed diagonal '" + std::string(item) + "'");
    int a = 0;
    int b = 0;
    auto r1 = std::from_chars(item.data(), item.data() + dash, a);
    auto r2 = std::from_chars(item.data() + dash + 1, item.data() + item.size(), b);
    if (r1.ec != std::errc{} || r2.ec != std::errc{} ||
        r2.ptr != item.data() + item.size() || r1.ptr != item.data() + dash) {
      throw_invalid("malformed diagonal '" + std::string(item) + "'");
    }
    diags.push_back({a, b});
  }
  return Triangulation(n, std::move(diags));
}

std::uint64_t catalan(int m) {
  std::uint64_t c = 1;
  for (int k = 0; k < m; ++k) c = c * 2 * (2 * k + 1) / (k + 2);
  return c;
}

std::vector<Triangulation> enumerate_triangulations(int n, const Limits& limits) {
  check_n(n, limits);
  std::map<std::pair<int, int>, DiagonalLists> memo;
  const DiagonalLists& lists = sub_enumeration(1, n, memo);
  std::vector<Triangulation> out;
  out.reserve(lists.size());
  for (const auto& l : lists) {
    std::vector<Diagonal> sorted = l;
    std::sort(sorted.begin(), sorted.end());
    out.push_back(make_unchecked(n, std::move(sorted)));
  }
  return out;
}

std::array<int, 4> flip_quadrilateral(const Triangulation& t, Diagonal d) {
  if (!t.contains(d)) {
    throw Error(ErrorKind::not_present, "diagonal " + std::to_string(d.i) + "-" +
                                            std::to_string(d.j) +
                                            " is not in the triangulation");
  }
  const int n = t.n();
  const DiagonalMask m = t.mask();
  auto edge = [&](int a, int b) {
    if (a > b) std::swap(a, b);
    return is_polygon_side(n, a, b) || m.test({a, b});
  };
  int inside = 0;
  for (int c = d.i + 1; c < d.j; ++c) {
    if (edge(d.i, c) && edge(c, d.j)) {
      inside = c;
      break;
    }
  }
  int outside = 0;
  for (int c = d.j + 1; c <= n + d.i - 1 && outside == 0; ++c) {
    int label = c > n ? c - n : c;
    if (edge(d.i, label) && edge(label, d.j)) outside = label;
  }
  return {d.i, inside, d.j, outside};
}

FlipResult flip(const Triangulation& t, Diagonal d) {
  auto q = flip_quadrilateral(t, d);
  Diagonal repl{std::min(q[1], q[3]), std::max(q[1], q[3])};
  std::vector<Diagonal> diags;
  diags.reserve(t.diagonals().size());
  for (Diagonal e : t.diagonals()) {
    if (e != d) diags.push_back(e);
  }
  diags.insert(std::lower_bound(diags.begin(), diags.end(), repl), repl);
  return {repl, make_unchecked(t.n(), std::move(diags))};
}

std::vector<Triangulation> neighbors(const Triangulation& t) {
  std::vector<Triangulation> out;
  out.reserve(t.diagonals().size());
  for (Diagonal d : t.diagonals()) out.push_back(flip(t, d).result);
  return out;
}

Dissection dissect(int n, std::span<const Diagonal> diagonals) {
  for (Diagonal d : diagonals) {
    if (!is_valid_diagonal(n, d)) throw_invalid("diagonal outside the polygon");
  }
  for (std::size_t a = 0; a < diagonals.size(); ++a) {
    for (std::size_t b = a + 1; b < diagonals.size(); ++b) {
      if (crosses(diagonals[a], diagonals[b])) throw_invalid("crossing diagonals");
    }
  }

  Dissection out;
  std::vector<std::vector<int>> pending;
  std::vector<int> whole(n);
  for (int v = 0; v < n; ++v) whole[v] = v + 1;
  pending.push_back(std::move(whole));

  while (!pending.empty()) {
    std::vector<int> face = std::move(pending.back());
    pending.pop_back();
    const int size = static_cast<int>(face.size());
    bool split = false;
    for (Diagonal d : diagonals) {
      auto pi = std::find(face.begin(), face.end(), d.i);
      auto pj = std::find(face.begin(), face.end(), d.j);
      if (pi == face.end() || pj == face.end()) continue;
      int a = static_cast<int>(pi - face.begin());
      int b = static_cast<int>(pj - face.begin());
      // consecutive on the face boundary: it is a side of this face
      if (b - a == 1 || (a == 0 && b == size - 1)) continue;
      std::vector<int> inner(face.begin() + a, face.begin() + b + 1);
      std::vector<int> outer(face.begin(), face.begin() + a + 1);
      outer.insert(outer.end(), face.begin() + b, face.end());
      pending.push_back(std::move(outer));
      pending.push_back(std::move(inner));
      split = true;
      break;
    }
    if (!split) out.faces.push_back(std::move(face));
  }
  std::sort(out.faces.begin(), out.faces.end());

  const int f = static_cast<int>(out.faces.size());
  out.degrees.assign(f, 0);
  for (int a = 0; a < f; ++a) {
    for (int b = a + 1; b < f; ++b) {
      int shared = 0;
      for (int v : out.faces[a]) {
        if (std::binary_search(out.faces[b].begin(), out.faces[b].end(), v)) ++shared;
      }
      if (shared == 2) {
        out.adjacency.emplace_back(a, b);
        ++out.degrees[a];
        ++out.degrees[b];
      }
    }
  }
  return out;
}

int DualTree::degree_count(int j) const noexcept {
  return static_cast<int>(std::count(degrees.begin(), degrees.end(), j));
}

DualTree dual_tree(const Triangulation& t) {
  Dissection dis = dissect(t.n(), t.diagonals());
  DualTree tree;
  tree.triangles.reserve(dis.faces.size());
  for (const auto& f : dis.faces) tree.triangles.push_back({f[0], f[1], f[2]});
  tree.edges = std::move(dis.adjacency);
  tree.degrees = std::move(dis.degrees);
  return tree;
}

int ear_count(const Triangulation& t) { return dual_tree(t).degree_count(1); }

std::vector<Diagonal> common_diagonals(const Triangulation& a, const Triangulation& b) {
  std::vector<Diagonal> out;
  std::set_intersection(a.diagonals().begin(), a.diagonals().end(),
                        b.diagonals().begin(), b.diagonals().end(),
                        std::back_inserter(out));
  return out;
}

}  // namespace assoc
