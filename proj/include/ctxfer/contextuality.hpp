#pragma once

#include <array>
#include <cstddef>
#include <vector>

#include "ctxfer/hilbert.hpp"
#include "ctxfer/interferometer.hpp"

namespace ctxfer {

// Evaluation of the noncontextual inequality P(f) <= P(D1) + P(D2) and its
// decomposition into the negative conditional currents
//   W(P2|1)P(1) + W(P1|2)P(2) + (W(f|3)+W(P1|3)+W(P2|3))P(3),
// which equals the margin identically.
struct ContextualityReport {
  double margin;  // P(D1) + P(D2) - P(f)
  bool violated;  // margin < -1e-10

  // Terms are real parts; the imaginary parts cancel in the sum for any
  // Hermitian state. Only available when P(1), P(2), P(3) all exceed 1e-12.
  bool decomposition_defined;
  std::array<double, 3> decomposition_terms;
  double identity_residual;  // |margin - sum of terms|
};

ContextualityReport noncontextual_margin(const DensityMatrix& rho,
                                         const PathVectorTable& table);

// pf over a reflectivity grid, computed by both the closed form and network
// propagation of |N_f>; the two routes must agree to rounding.
struct ScanResult {
  struct Cell {
    double r1;
    double r2;
    double pf_closed;
    double pf_propagated;
  };

  std::vector<Cell> cells;  // row-major: r1 index outer, r2 index inner
  std::size_t argmax_index;
  double max_pf;
};

// Throws DegenerateReflectivity for grid values outside (0,1); each grid
// needs at least 2 points.
ScanResult scan_violation(const std::vector<double>& r1_grid,
                          const std::vector<double>& r2_grid);

// Convenience: uniform n-point grid on [lo, hi].
std::vector<double> uniform_grid(double lo, double hi, std::size_t n);

// The reflectivity solving R = (1-R)^2, for which all five beam splitters
// are equal: (3 - sqrt(5))/2.
double symmetric_reflectivity();

}  // namespace ctxfer
