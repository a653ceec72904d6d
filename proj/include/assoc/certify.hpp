#pragma once

#include <string>
#include <vector>

#include "assoc/spectra.hpp"

namespace assoc {

enum class TableKind { lambda_min, lambda_2 };

struct TableRow {
  int n = 0;
  double computed = 0.0;
  double reference = 0.0;
  bool within = false;
  Method method = Method::dense;
  int iterations = 0;
  double residual = 0.0;
};

/// The published values are rounded to three decimals: lambda_min upward,
/// lambda_2 downward. A computed value matches when it lies in the
/// corresponding half-open band of width 1e-3.
bool matches_reference(TableKind kind, double computed, double reference);

/// One row per n in 5..n_max (n_max <= 12, the extent of the published table).
std::vector<TableRow> run_table(TableKind kind, int n_max, const SolverOptions& opts = {});

struct Claim {
  std::string name;
  bool passed = false;
  std::string detail;
};

struct CertifyReport {
  int n_max = 0;
  std::vector<Claim> claims;
  bool all_passed() const noexcept;
};

/// Runs every certification that is feasible up to n_max: census identities,
/// pentagon and hexagon lower bounds, the subgraph-collection bound, the
/// interlacing upper bound, subadditivity and the chromatic bound.
CertifyReport run_certify(int n_max, const SolverOptions& opts = {});

/// Chromatic numbers of the flip graph computed elsewhere for 5 <= n <= 10.
int known_chromatic_number(int n);

}  // namespace assoc
