#include "assoc/certify.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <sstream>

#include "assoc/bounds.hpp"
#include "assoc/census.hpp"
#include "assoc/flipgraph.hpp"

namespace assoc {

namespace {

constexpr double kTableBand = 1e-3;
constexpr double kSlack = 1e-9;
constexpr int kCensusPentagonMax = 9;
constexpr int kCensusHexagonMax = 8;
constexpr int kCollectionMax = 9;

std::string fmt(double x) {
  std::ostringstream s;
  s.precision(6);
  s << std::fixed << x;
  return s.str();
}

void add(CertifyReport& r, std::string name, bool ok, std::string detail) {
  r.claims.push_back({std::move(name), ok, std::move(detail)});
}

}  // namespace

bool matches_reference(TableKind kind, double computed, double reference) {
  if (kind == TableKind::lambda_min) {
    return computed <= reference + kSlack && computed > reference - kTableBand;
  }
  return computed >= reference - kSlack && computed < reference + kTableBand;
}

std::vector<TableRow> run_table(TableKind kind, int n_max, const SolverOptions& opts) {
  if (n_max < reference::kFirstN || n_max > reference::kLastN) {
    throw_range("reference table covers n = 5..12, got n_max = " + std::to_string(n_max));
  }
  std::vector<TableRow> rows;
  for (int n = reference::kFirstN; n <= n_max; ++n) {
    Associahedron a = build_associahedron(n, opts.limits);
    SpectralResult r = kind == TableKind::lambda_min ? lambda_min(a.graph(), opts)
                                                     : lambda_2(a.graph(), opts);
    TableRow row;
    row.n = n;
    row.computed = r.value;
    row.reference = kind == TableKind::lambda_min ? reference::lambda_min(n) : reference::lambda_2(n);
    row.within = matches_reference(kind, row.computed, row.reference);
    row.method = r.method;
    row.iterations = r.iterations;
    row.residual = r.residual;
    rows.push_back(row);
  }
  return rows;
}

int known_chromatic_number(int n) {
  if (n >= 5 && n <= 9) return 3;
  if (n == 10) return 4;
  throw_range("no known chromatic number for n = " + std::to_string(n));
}

bool CertifyReport::all_passed() const noexcept {
  return std::all_of(claims.begin(), claims.end(), [](const Claim& c) { return c.passed; });
}

CertifyReport run_certify(int n_max, const SolverOptions& opts) {
  if (n_max < 4 || n_max > opts.limits.max_n) {
    throw_range("certify needs 4 <= n_max <= " + std::to_string(opts.limits.max_n));
  }
  CertifyReport report;
  report.n_max = n_max;
  std::map<int, double> lmin;

  for (int n = 4; n <= n_max; ++n) {
    Associahedron a = build_associahedron(n, opts.limits);
    const Graph& g = a.graph();
    const std::string tag = "n=" + std::to_string(n);

    add(report, "regular-connected " + tag,
        validate_regular(g, n - 3) && is_connected(g) &&
            g.vertex_count() == catalan(n - 2),
        std::to_string(g.vertex_count()) + " vertices");

    const double lm = lambda_min(g, opts).value;
    lmin[n] = lm;

    if (n == 4) {
      add(report, "no-five-cycles " + tag, count_five_cycles(g, opts.limits) == 0,
          "single edge");
      continue;
    }

    if (n <= kCensusPentagonMax) {
      CensusReport c = run_census(a, true, opts.limits);
      bool vertex_ok = true;
      bool edge_ok = true;
      bool hex_vertex_ok = true;
      bool hex_edge_ok = true;
      for (const auto& v : c.per_vertex) {
        vertex_ok &= v.pentagon_oracle == v.pentagon_formula &&
                     v.pentagon_formula == n - 6 + v.ears && v.pentagon_formula >= n - 4;
        if (n >= 6) {
          hex_vertex_ok &= v.hexagon_oracle == v.hexagon.total() && v.hexagon.total() >= n - 5;
        }
      }
      for (const auto& e : c.per_edge) {
        edge_ok &= e.pentagon_oracle == e.pentagons && e.pentagons >= 1 && e.pentagons <= 4;
        if (n >= 6) {
          hex_edge_ok &= e.hexagon_oracle == e.hexagons && e.hexagons >= 1 && e.hexagons <= 14;
        }
      }
      add(report, "pentagons-per-vertex " + tag, vertex_ok,
          "min " + std::to_string(c.min_pentagon_vertex) + " >= " + std::to_string(n - 4));
      add(report, "pentagons-per-edge " + tag, edge_ok,
          "range [" + std::to_string(c.min_pentagon_edge) + ", " +
              std::to_string(c.max_pentagon_edge) + "]");
      if (n >= 6 && n <= kCensusHexagonMax) {
        add(report, "hexagons-per-vertex " + tag, hex_vertex_ok,
            "min " + std::to_string(c.min_hexagon_vertex) + " >= " + std::to_string(n - 5));
        add(report, "hexagons-per-edge " + tag, hex_edge_ok,
            "range [" + std::to_string(c.min_hexagon_edge) + ", " +
                std::to_string(c.max_hexagon_edge) + "]");
      }
    }

    const double lower = assoc_lower_bound(n);
    add(report, "pentagon-lower-bound " + tag, lower <= lm + kSlack,
        fmt(lower) + " <= " + fmt(lm));

    if (n >= 6) {
      const double hex = assoc_hexagon_lower_bound(n);
      add(report, "hexagon-lower-bound " + tag, hex <= lm + kSlack && hex <= lower,
          fmt(hex) + " <= " + fmt(lower) + " <= " + fmt(lm));
    }

    if (n <= kCollectionMax) {
      CollectionStats s = collection_stats(g, cycle_graph(5), opts.limits);
      const double b = odd_cycle_bound(n - 3, 2, s.m, s.t);
      add(report, "collection-bound-C5 " + tag, b <= lm + kSlack,
          "m=" + std::to_string(s.m) + " t=" + std::to_string(s.t) + " bound " + fmt(b) +
              " <= " + fmt(lm));
    }

    const double upper = assoc_upper_bound(n);
    add(report, "interlacing-upper-bound " + tag, lm <= upper + kSlack,
        fmt(lm) + " <= " + fmt(upper));

    if (n <= 10) {
      const double chi = chromatic_lower_bound(n, lm);
      add(report, "chromatic-bound " + tag, chi <= known_chromatic_number(n),
          fmt(chi) + " <= " + std::to_string(known_chromatic_number(n)));
    }
  }

  for (int k = 4; k <= n_max; ++k) {
    for (int l = 4; k + l <= n_max; ++l) {
      const double lhs = lmin[k + l];
      const double rhs = lmin[k] + lmin[l];
      add(report, "subadditivity k=" + std::to_string(k) + " l=" + std::to_string(l),
          lhs <= rhs + kSlack, fmt(lhs) + " <= " + fmt(rhs));
    }
  }
  return report;
}

}  // namespace assoc
