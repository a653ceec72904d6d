#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "assoc/error.hpp"

namespace assoc {

/// A chord (i, j) of the convex n-gon with vertices labelled 1..n clockwise.
/// Always stored with i < j.
struct Diagonal {
  int i = 0;
  int j = 0;

  auto operator<=>(const Diagonal&) const = default;
};

bool is_valid_diagonal(int n, Diagonal d) noexcept;

/// Normalizes the endpoint order and validates against the n-gon.
Diagonal make_diagonal(int n, int a, int b);

/// True iff the two chords are sides of the polygon or diagonals of it.
bool is_polygon_side(int n, int a, int b) noexcept;

/// Strict interleaving test. Shared endpoints never cross.
bool crosses(Diagonal a, Diagonal b) noexcept;

/// Checked variant: both chords must be diagonals of the same n-gon.
bool crosses(int n, Diagonal a, Diagonal b);

/// 128-bit membership mask over the chords of an n-gon (n <= kHardMaxN).
struct DiagonalMask {
  std::uint64_t lo = 0;
  std::uint64_t hi = 0;

  void set(Diagonal d) noexcept;
  bool test(Diagonal d) const noexcept;
  bool operator==(const DiagonalMask&) const = default;
};

struct DiagonalMaskHash {
  std::size_t operator()(const DiagonalMask& m) const noexcept;
};

/// A maximal non-crossing set of n - 3 diagonals. Immutable; the sorted
/// diagonal list is the canonical code.
class Triangulation {
 public:
  Triangulation() = default;

  /// Validates count, range and pairwise non-crossing; sorts the input.
  Triangulation(int n, std::vector<Diagonal> diagonals);

  int n() const noexcept { return n_; }
  std::span<const Diagonal> diagonals() const noexcept { return diagonals_; }
  bool contains(Diagonal d) const noexcept;
  DiagonalMask mask() const noexcept;

  /// "1-3,1-4,1-5"
  std::string code() const;
  static Triangulation parse(int n, std::string_view code);

  bool operator==(const Triangulation& other) const = default;
  auto operator<=>(const Triangulation& other) const = default;

 private:
  struct Unchecked {};
  Triangulation(Unchecked, int n, std::vector<Diagonal> sorted)
      : n_(n), diagonals_(std::move(sorted)) {}
  friend Triangulation make_unchecked(int n, std::vector<Diagonal> sorted);

  int n_ = 0;
  std::vector<Diagonal> diagonals_;
};

/// All triangulations of the n-gon, C_{n-2} of them, in a fixed order obtained
/// by choosing the apex of the triangle on side (1, n) and recursing.
std::vector<Triangulation> enumerate_triangulations(int n,
                                                    const Limits& limits = {});

std::uint64_t catalan(int m);

struct FlipResult {
  Diagonal replacement;
  Triangulation result;
};

/// Replaces d by the other diagonal of the quadrilateral formed by the two
/// triangles on either side of d. Throws not-present if d is not in t.
FlipResult flip(const Triangulation& t, Diagonal d);

/// The quadrilateral a, c1, b, c2 around diagonal (a, b), in cyclic order.
std::array<int, 4> flip_quadrilateral(const Triangulation& t, Diagonal d);

/// One neighbour per diagonal, in diagonal order.
std::vector<Triangulation> neighbors(const Triangulation& t);

/// Faces of the convex n-gon cut by non-crossing diagonals. Each face is its
/// ascending vertex list; adjacency joins faces sharing a diagonal.
struct Dissection {
  std::vector<std::vector<int>> faces;
  std::vector<std::pair<int, int>> adjacency;
  std::vector<int> degrees;
};

Dissection dissect(int n, std::span<const Diagonal> diagonals);

struct DualTree {
  std::vector<std::array<int, 3>> triangles;
  std::vector<std::pair<int, int>> edges;
  std::vector<int> degrees;

  int node_count() const noexcept { return static_cast<int>(triangles.size()); }
  /// Number of nodes of degree exactly j.
  int degree_count(int j) const noexcept;
};

DualTree dual_tree(const Triangulation& t);

/// Number of ears, i.e. leaves of the dual tree.
int ear_count(const Triangulation& t);

/// Diagonals present in both triangulations.
std::vector<Diagonal> common_diagonals(const Triangulation& a,
                                       const Triangulation& b);

}  // namespace assoc
