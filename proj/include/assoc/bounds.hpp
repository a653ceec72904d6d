#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "assoc/error.hpp"
#include "assoc/graph.hpp"

namespace assoc {

namespace reference {

/// Reference smallest eigenvalues of the flip graph for n = 5..12, rounded up
/// to three decimals (so each is >= the true value).
inline constexpr std::array<double, 8> kLambdaMin = {
    -1.618, -2.414, -3.177, -3.912, -4.667, -5.409, -6.157, -6.904};

/// Reference second eigenvalues for n = 5..12, rounded down to three decimals
/// (so each is <= the true value).
inline constexpr std::array<double, 8> kLambda2 = {
    0.618, 2.0, 3.231, 4.383, 5.488, 6.564, 7.622, 8.667};

inline constexpr int kFirstN = 5;
inline constexpr int kLastN = 12;

double lambda_min(int n);
double lambda_2(int n);

/// Upper end of the bracket for lim lambda_min / (n - 3): the n = 12 ratio.
inline constexpr double kLimitUpper = -0.6904;

}  // namespace reference

/// Incidence counts of every copy of a pattern K inside a host G.
struct CollectionStats {
  std::int64_t m = 0;  ///< min over vertices of copies containing the vertex
  std::int64_t t = 0;  ///< max over edges of copies containing the edge
  std::vector<std::int64_t> per_vertex;
  /// Indexed like Graph::edges().
  std::vector<std::int64_t> per_edge;
  std::int64_t copy_count = 0;
  std::int64_t automorphisms = 0;
};

/// All subgraphs of g isomorphic to k (not necessarily induced), each counted
/// once up to automorphisms of k.
CollectionStats collection_stats(const Graph& g, const Graph& k, const Limits& limits = {});

/// Same statistics for an explicit list of copies. Each copy is given as an
/// injective map from the vertices of k to vertices of g.
CollectionStats collection_stats_from_copies(const Graph& g, const Graph& k,
                                             std::span<const std::vector<Vertex>> copies);

/// Number of edge-preserving bijections of k onto itself.
std::int64_t automorphism_count(const Graph& k);

/// Lower bound for lambda_min(G): -d + (k + lambda_min(K)) * m / t.
double theorem_bound(int d, int k, double lambda_min_k, std::int64_t m, std::int64_t t);

/// Odd-cycle specialization with K = C_{2r+1}: -d + 4 sin^2(pi/(4r+2)) m / t.
double odd_cycle_bound(int d, int r, std::int64_t m, std::int64_t t);

/// -(5 + sqrt 5)/8 (n - 3) - (3 - sqrt 5)/8, valid for n >= 5.
double assoc_lower_bound(int n);

/// Best upper bound from splitting along diagonals (1, k): for n within the
/// table the table value itself, beyond it the minimum over splits of
/// ub(k) + ub(n - k + 2). `table` holds lambda_min for n = 4..12 at index
/// n - 4; omit it to use the published values (with lambda_min(A_4) = -1).
double assoc_upper_bound(int n, std::span<const double> table = {});

/// The fixed split along (1, 12) iterated: -0.6904 (n - 2) for n = 2 mod 10.
double fixed_split_upper_bound(int n);

/// c_r = max over the residue class of ub(n) + 0.6904 n, taken at the first
/// class member above 12, so that ub(n) <= -0.6904 n + c_r for all n >= 13.
std::array<double, 10> upper_bound_offsets(std::span<const double> table = {});

/// -(n - 3) + (2 - sqrt 2)(n - 5) / 14; weaker than assoc_lower_bound.
double assoc_hexagon_lower_bound(int n);

/// 1 + (n - 3) / |lambda_min|.
double chromatic_lower_bound(int n, double lambda_min);

struct MixingBounds {
  double upper = 0.0;
  double lower = 0.0;
};

/// Mixing-time sandwich with natural logarithm:
/// (n-3)/(n-3-l2) * ln(C_{n-2}/eps) >= tau(eps) >= l2 / (2 (n-3-l2)).
MixingBounds mixing_bounds(int n, double lambda_2, double eps);

struct LimitBracket {
  double upper = reference::kLimitUpper;
  double lower = 0.0;
  /// min over the table of lambda_min(A_n) / (n - 2), the subadditivity bound.
  double empirical_upper = 0.0;
  int empirical_argmin = 0;
  std::vector<double> ratios;  ///< for n = 5..12
};

LimitBracket limit_bracket(std::span<const double> table = {});

struct BoundReport {
  std::string bound_name;
  double bound_value = 0.0;
  std::optional<double> exact_value;
  bool satisfied = true;
  std::map<std::string, double> parameters;
  std::string note;
};

/// Lower bound report: satisfied iff bound <= exact + 1e-9.
BoundReport lower_bound_report(std::string name, double bound, std::optional<double> exact);
/// Upper bound report: satisfied iff exact <= bound + 1e-9.
BoundReport upper_bound_report(std::string name, double bound, std::optional<double> exact);

}  // namespace assoc
