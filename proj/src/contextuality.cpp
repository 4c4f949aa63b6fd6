#include "ctxfer/contextuality.hpp"

#include <cmath>

#include "ctxfer/errors.hpp"
#include "ctxfer/states.hpp"
#include "ctxfer/weak.hpp"

namespace ctxfer {

ContextualityReport noncontextual_margin(const DensityMatrix& rho,
                                         const PathVectorTable& table) {
  ContextualityReport report{};
  const double pd1 = path_probability(rho, table, PathId::D1);
  const double pd2 = path_probability(rho, table, PathId::D2);
  const double pf = path_probability(rho, table, PathId::F);
  report.margin = pd1 + pd2 - pf;
  report.violated = report.margin < -1e-10;

  const double p1 = rho.expectation(table.path(PathId::One));
  const double p2 = rho.expectation(table.path(PathId::Two));
  const double p3 = rho.expectation(table.path(PathId::Three));
  report.decomposition_defined = p1 > 1e-12 && p2 > 1e-12 && p3 > 1e-12;
  if (!report.decomposition_defined) return report;

  auto w = [&](PathId i, PathId o) {
    return weak_value(rho, table, i, o).value;
  };
  report.decomposition_terms = {
      std::real(w(PathId::P2, PathId::One)) * p1,
      std::real(w(PathId::P1, PathId::Two)) * p2,
      std::real(w(PathId::F, PathId::Three) + w(PathId::P1, PathId::Three) +
                w(PathId::P2, PathId::Three)) *
          p3,
  };
  const double sum = report.decomposition_terms[0] +
                     report.decomposition_terms[1] +
                     report.decomposition_terms[2];
  report.identity_residual = std::abs(report.margin - sum);
  return report;
}

ScanResult scan_violation(const std::vector<double>& r1_grid,
                          const std::vector<double>& r2_grid) {
  if (r1_grid.size() < 2 || r2_grid.size() < 2)
    throw Error("scan grids need at least 2 points each");
  ScanResult result;
  result.cells.reserve(r1_grid.size() * r2_grid.size());
  result.argmax_index = 0;
  result.max_pf = -1.0;

  for (double r1 : r1_grid) {
    for (double r2 : r2_grid) {
      const InterferometerConfig config = derive_reflectivities(r1, r2);
      const PathVectorTable table = build_network(config);
      const DensityMatrix nf = pure_density(make_nf(table));

      ScanResult::Cell cell;
      cell.r1 = r1;
      cell.r2 = r2;
      cell.pf_closed = nf_closed_forms(config).pf;
      cell.pf_propagated = path_probability(nf, table, PathId::F);
      if (std::abs(cell.pf_closed - cell.pf_propagated) > 1e-12)
        throw Error("closed-form and propagated pf disagree beyond 1e-12");

      if (cell.pf_closed > result.max_pf) {
        result.max_pf = cell.pf_closed;
        result.argmax_index = result.cells.size();
      }
      result.cells.push_back(cell);
    }
  }
  return result;
}

std::vector<double> uniform_grid(double lo, double hi, std::size_t n) {
  if (n == 0) return {};
  if (n == 1) return {lo};
  std::vector<double> grid(n);
  for (std::size_t i = 0; i < n; ++i)
    grid[i] = lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(n - 1);
  return grid;
}

double symmetric_reflectivity() { return (3.0 - std::sqrt(5.0)) / 2.0; }

}  // namespace ctxfer
