#include "ctxfer/weak.hpp"

#include <cmath>
#include <string>

#include "ctxfer/errors.hpp"

namespace ctxfer {

namespace {

Cx kd_raw(const DensityMatrix& rho, const PathVectorTable& table, PathId i,
          PathId o) {
  const CVec3& vi = table.path(i);
  const CVec3& vo = table.path(o);
  return inner(vo, vi) * rho.sandwich(vi, vo);
}

}  // namespace

WeakValue weak_value(const DensityMatrix& rho, const PathVectorTable& table,
                     PathId i, PathId o) {
  const double po = rho.expectation(table.path(o));
  if (po <= 1e-12)
    throw ImpossiblePostselection("P(" + std::string(path_name(o)) +
                                  ") is zero; weak value undefined");
  return {kd_raw(rho, table, i, o) / po, i, o, po};
}

KDElement kd_element(const DensityMatrix& rho, const PathVectorTable& table,
                     PathId i, PathId o) {
  return {kd_raw(rho, table, i, o), i, o};
}

std::array<Cx, 5> continuity_residuals(const DensityMatrix& rho,
                                       const PathVectorTable& table, PathId o) {
  std::array<Cx, 5> out;
  for (std::size_t k = 0; k < 5; ++k) {
    const BeamSplitter& bs = table.splitters[k];
    out[k] = weak_value(rho, table, bs.in_outer, o).value +
             weak_value(rho, table, bs.in_inner, o).value -
             weak_value(rho, table, bs.out_u, o).value -
             weak_value(rho, table, bs.out_v, o).value;
  }
  return out;
}

std::array<Cx, 2> dcont_check(const DensityMatrix& rho,
                              const PathVectorTable& table) {
  const PathId f = PathId::F;
  return {kd_raw(rho, table, f, PathId::D1) - kd_raw(rho, table, f, PathId::Two) -
              kd_raw(rho, table, f, PathId::Three),
          kd_raw(rho, table, f, PathId::D2) - kd_raw(rho, table, f, PathId::One) -
              kd_raw(rho, table, f, PathId::Three)};
}

CoherenceCoefficient coherence_coefficient(const PathVectorTable& table,
                                           PathId i, PathId n, PathId o) {
  const CVec3& vi = table.path(i);
  return {inner(table.path(o), vi) * inner(vi, table.path(n)), i, n, o};
}

double kd_reconstruction_residual(const DensityMatrix& rho,
                                  const PathVectorTable& table, PathId i,
                                  PathId o) {
  Cx sum = 0.0;
  for (PathId n : kOutcomes)
    sum += coherence_coefficient(table, i, n, o).value *
           rho.sandwich(table.path(n), table.path(o));
  return std::abs(kd_raw(rho, table, i, o) - sum);
}

std::array<Cx, kPathCount> current_difference_coefficients(
    const PathVectorTable& table, CoherenceTarget target) {
  // The detour state is the outer path that shares a context with the
  // mirrored outcome: S2 for C(i|3,1), S1 for C(i|3,2).
  const PathId detour = target == CoherenceTarget::To31 ? PathId::S2 : PathId::S1;
  const PathId o = target == CoherenceTarget::To31 ? PathId::One : PathId::Two;
  const CVec3& vo = table.path(o);
  const CVec3& v3 = table.path(PathId::Three);
  const CVec3& vd = table.path(detour);

  const DensityMatrix rho = pure_density(vd);
  const Cx prefactor = inner(vo, vd) / inner(v3, vd);

  std::array<Cx, kPathCount> out;
  for (int k = 0; k < kPathCount; ++k) {
    const PathId i = static_cast<PathId>(k);
    const Cx w = weak_value(rho, table, i, o).value;
    const double direct = std::norm(inner(table.path(i), vo));
    out[static_cast<std::size_t>(k)] = prefactor * (w - direct);
  }
  return out;
}

WeakReport weak_report(const DensityMatrix& rho, const PathVectorTable& table) {
  WeakReport report;
  for (int oi = 0; oi < 3; ++oi) {
    const PathId o = kOutcomes[static_cast<std::size_t>(oi)];
    const double po = rho.expectation(table.path(o));
    report.outcome_probability[static_cast<std::size_t>(oi)] = po;
    const bool defined = po > 1e-12;
    report.outcome_defined[static_cast<std::size_t>(oi)] = defined;

    for (int k = 0; k < kPathCount; ++k) {
      const PathId i = static_cast<PathId>(k);
      const Cx kd = kd_element(rho, table, i, o).value;
      WeakReport::Entry& e =
          report.entries[static_cast<std::size_t>(k)][static_cast<std::size_t>(oi)];
      e.kd = kd;
      e.defined = defined;
      e.weak = defined ? kd / po : Cx(0.0, 0.0);
    }
    if (defined) {
      const std::array<Cx, 5> res = continuity_residuals(rho, table, o);
      for (std::size_t s = 0; s < 5; ++s)
        report.continuity[s][static_cast<std::size_t>(oi)] = res[s];
    }
  }
  return report;
}

}  // namespace ctxfer
