#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "ctxfer/hilbert.hpp"
#include "ctxfer/interferometer.hpp"

namespace ctxfer {

// Photon counts from repeated detection in one context.
struct CountRecord {
  Context context;
  std::uint64_t shots;
  std::array<std::uint64_t, 3> counts;  // aligned with context.members
  std::uint64_t seed;
};

// Draws i.i.d. Born-rule outcomes over the context triple by inverse CDF.
// Probabilities at or below 1e-12 are snapped to zero, so a dark path is
// never selected. Deterministic per seed.
CountRecord sample_context(const DensityMatrix& rho,
                           const PathVectorTable& table, const Context& context,
                           std::uint64_t shots, std::uint64_t seed);

// Joint output statistics after a full polarization flip marks path i.
// The flip destroys coherence between i and its complement:
//   P(o, flipped)   = <o| Pi rho Pi |o>
//   P(o, unflipped) = <o| (1-Pi) rho (1-Pi) |o>
struct MarkerDistribution {
  PathId marked;
  std::array<double, 3> flipped;    // indexed by outcome 1,2,3
  std::array<double, 3> unflipped;
};

MarkerDistribution mark_path(const DensityMatrix& rho,
                             const PathVectorTable& table, PathId i);

struct ProbeMode {
  bool sampled = false;
  std::uint64_t shots = 0;
  std::uint64_t seed = 0;

  static ProbeMode exact() { return {}; }
  static ProbeMode sample(std::uint64_t shots, std::uint64_t seed) {
    return {true, shots, seed};
  }
};

// One weak polarization probe of path i read out at output o.
struct ProbeResult {
  PathId path;
  PathId outcome;
  double epsilon;
  Cx estimate;
  ProbeMode mode;
  double postselection_probability;  // after coupling
};

// Couples a polarization ancilla to the path projector with angle epsilon
// (unitary exp(-i eps Pi (x) Y) on the 6-dimensional path (x) polarization
// space), postselects output o, and reads the weak value off the diagonal-
// and circular-basis pointer expectations. estimate -> W(i|rho,o) as
// epsilon -> 0. Throws CouplingTooLarge for epsilon outside (0, 0.3] and
// ImpossiblePostselection when P(o) <= 1e-9 for the unperturbed state.
ProbeResult weak_probe(const DensityMatrix& rho, const PathVectorTable& table,
                       PathId i, PathId o, double epsilon,
                       const ProbeMode& mode = ProbeMode::exact());

// Least-squares linear fit of estimate vs epsilon; returns the intercept.
// Needs at least 3 distinct epsilons in (0, 0.1].
Cx probe_extrapolate(const DensityMatrix& rho, const PathVectorTable& table,
                     PathId i, PathId o, const std::vector<double>& epsilons,
                     const ProbeMode& mode = ProbeMode::exact());

}  // namespace ctxfer
