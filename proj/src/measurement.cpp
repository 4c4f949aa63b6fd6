#include "ctxfer/measurement.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "ctxfer/errors.hpp"
#include "ctxfer/states.hpp"

namespace ctxfer {

CountRecord sample_context(const DensityMatrix& rho,
                           const PathVectorTable& table, const Context& context,
                           std::uint64_t shots, std::uint64_t seed) {
  if (shots < 1) throw Error("shots must be >= 1");
  std::array<double, 3> p;
  for (std::size_t k = 0; k < 3; ++k) {
    p[k] = path_probability(rho, table, context.members[k]);
    if (p[k] <= 1e-12) p[k] = 0.0;  // dark paths are never selected
  }
  const double sum = p[0] + p[1] + p[2];
  if (sum <= 1e-9)
    throw Error("context probabilities sum to zero; not a complete context");
  for (double& x : p) x /= sum;

  // Inverse CDF; the last nonzero entry absorbs the rounding remainder.
  double c0 = p[0];
  double c1 = p[0] + p[1];
  if (p[2] == 0.0) c1 = 1.0;
  if (p[1] == 0.0 && p[2] == 0.0) c0 = 1.0;

  CountRecord record{context, shots, {0, 0, 0}, seed};
  Rng rng(seed);
  for (std::uint64_t s = 0; s < shots; ++s) {
    const double u = rng.uniform();
    if (u < c0)
      ++record.counts[0];
    else if (u < c1)
      ++record.counts[1];
    else
      ++record.counts[2];
  }
  return record;
}

MarkerDistribution mark_path(const DensityMatrix& rho,
                             const PathVectorTable& table, PathId i) {
  const CVec3& vi = table.path(i);
  const CMat3 proj = outer(vi, vi);
  const CMat3 comp = CMat3::identity() - proj;
  const CMat3 flipped = proj * rho.rho * proj;
  const CMat3 unflipped = comp * rho.rho * comp;

  MarkerDistribution dist;
  dist.marked = i;
  for (std::size_t k = 0; k < 3; ++k) {
    const CVec3& vo = table.path(kOutcomes[k]);
    dist.flipped[k] = std::clamp(std::real(inner(vo, flipped * vo)), 0.0, 1.0);
    dist.unflipped[k] =
        std::clamp(std::real(inner(vo, unflipped * vo)), 0.0, 1.0);
  }
  return dist;
}

ProbeResult weak_probe(const DensityMatrix& rho, const PathVectorTable& table,
                       PathId i, PathId o, double epsilon,
                       const ProbeMode& mode) {
  if (!(epsilon > 0.0) || epsilon > 0.3)
    throw CouplingTooLarge("coupling angle must be in (0, 0.3], got " +
                           std::to_string(epsilon));
  const double po = rho.expectation(table.path(o));
  if (po <= 1e-9)
    throw ImpossiblePostselection("P(" + std::string(path_name(o)) +
                                  ") is zero; probe readout undefined");

  // Path (x) polarization evolution: rho (x) |H><H| under
  // U = exp(-i eps Pi (x) Y) = 1 + Pi (x) (V - 1), V = rotation by eps.
  const double c = std::cos(epsilon);
  const double s = std::sin(epsilon);
  const CVec3& vi = table.path(i);
  const std::array<Cx, 4> v_minus_identity = {Cx(c - 1.0, 0.0), Cx(-s, 0.0),
                                              Cx(s, 0.0), Cx(c - 1.0, 0.0)};
  CMat6 u = kron(outer(vi, vi), v_minus_identity);
  for (int k = 0; k < 6; ++k) u(k, k) += 1.0;

  const std::array<Cx, 4> h_pol = {Cx(1.0, 0.0), Cx(0.0, 0.0), Cx(0.0, 0.0),
                                   Cx(0.0, 0.0)};
  const CMat6 evolved = u * kron(rho.rho, h_pol) * u.adjoint();

  // Postselect the output port: 2x2 polarization state sigma.
  const CVec3& vo = table.path(o);
  std::array<std::array<Cx, 2>, 2> sigma{};
  for (int si = 0; si < 2; ++si)
    for (int ti = 0; ti < 2; ++ti) {
      Cx acc = 0.0;
      for (int j = 0; j < 3; ++j)
        for (int k = 0; k < 3; ++k)
          acc += std::conj(vo[j]) * evolved(2 * j + si, 2 * k + ti) * vo[k];
      sigma[static_cast<std::size_t>(si)][static_cast<std::size_t>(ti)] = acc;
    }
  const double trace = std::real(sigma[0][0] + sigma[1][1]);
  if (trace <= 1e-15)
    throw ImpossiblePostselection("coupled postselection probability is zero");

  // <X> from the diagonal basis, <Y> from the circular basis. The exact
  // small-rotation scale is sin(2 eps) (= 2 eps to leading order).
  double mean_x = std::real(sigma[0][1] + sigma[1][0]) / trace;
  double mean_y = std::real(Cx(0.0, 1.0) * (sigma[0][1] - sigma[1][0])) / trace;

  if (mode.sampled) {
    if (mode.shots < 2) throw Error("sampled probe needs at least 2 shots");
    const std::uint64_t nx = mode.shots / 2;
    const std::uint64_t ny = mode.shots - nx;
    const double px = std::clamp(0.5 * (1.0 + mean_x), 0.0, 1.0);
    const double py = std::clamp(0.5 * (1.0 + mean_y), 0.0, 1.0);
    Rng rng(mode.seed);
    std::uint64_t kx = 0;
    std::uint64_t ky = 0;
    for (std::uint64_t t = 0; t < nx; ++t) kx += rng.uniform() < px ? 1 : 0;
    for (std::uint64_t t = 0; t < ny; ++t) ky += rng.uniform() < py ? 1 : 0;
    mean_x = 2.0 * static_cast<double>(kx) / static_cast<double>(nx) - 1.0;
    mean_y = 2.0 * static_cast<double>(ky) / static_cast<double>(ny) - 1.0;
  }

  ProbeResult result;
  result.path = i;
  result.outcome = o;
  result.epsilon = epsilon;
  result.estimate = Cx(mean_x, mean_y) / std::sin(2.0 * epsilon);
  result.mode = mode;
  result.postselection_probability = trace;
  return result;
}

Cx probe_extrapolate(const DensityMatrix& rho, const PathVectorTable& table,
                     PathId i, PathId o, const std::vector<double>& epsilons,
                     const ProbeMode& mode) {
  if (epsilons.size() < 3)
    throw Error("extrapolation needs at least 3 coupling angles");
  for (std::size_t a = 0; a < epsilons.size(); ++a) {
    if (!(epsilons[a] > 0.0) || epsilons[a] > 0.1)
      throw Error("extrapolation angles must lie in (0, 0.1]");
    for (std::size_t b = a + 1; b < epsilons.size(); ++b)
      if (epsilons[a] == epsilons[b])
        throw Error("extrapolation angles must be distinct");
  }

  const double n = static_cast<double>(epsilons.size());
  double sx = 0.0;
  double sxx = 0.0;
  Cx sy = 0.0;
  Cx sxy = 0.0;
  for (std::size_t k = 0; k < epsilons.size(); ++k) {
    ProbeMode step = mode;
    if (mode.sampled) step.seed = mode.seed + k;  // independent draws per angle
    const Cx y = weak_probe(rho, table, i, o, epsilons[k], step).estimate;
    sx += epsilons[k];
    sxx += epsilons[k] * epsilons[k];
    sy += y;
    sxy += epsilons[k] * y;
  }
  return (sxx * sy - sx * sxy) / (n * sxx - sx * sx);
}

}  // namespace ctxfer
