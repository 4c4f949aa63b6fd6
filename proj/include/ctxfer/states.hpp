#pragma once

#include <array>
#include <string>

#include "ctxfer/hilbert.hpp"
#include "ctxfer/interferometer.hpp"

namespace ctxfer {

// Detection probability for each of the ten paths. Within every context
// the three member probabilities sum to 1.
struct ProbabilityTable {
  std::array<double, kPathCount> p{};

  double at(PathId id) const { return p[static_cast<std::size_t>(index_of(id))]; }
};

// The state with P(D1) = P(D2) = 0: the unique unit vector orthogonal to
// both dark ports, with global phase fixed so <1|N_f> is real positive.
CVec3 make_nf(const PathVectorTable& table);

// Born probability <i|rho|i>, clamped to [0,1]; a raw value below -1e-12
// raises NegativeProbability instead of clamping.
double path_probability(const DensityMatrix& rho, const PathVectorTable& table,
                        PathId i);

// All ten path probabilities; throws ContextSumViolation if any context sum
// deviates from 1 by more than 1e-9.
ProbabilityTable probability_table(const DensityMatrix& rho,
                                   const PathVectorTable& table);

// Closed-form probabilities of |N_f> in terms of the reflectivities alone:
//   p1 = r2(1-r1)/(1-r1 r2)
//   p2 = r1(1-r2)/(1-r1 r2)
//   p3 = (1-r1)(1-r2)/(1-r1 r2)
//   pf = r1 r2 (1-r1)(1-r2) / [(1-r1 r2)(1-(1-r1)(1-r2))]
struct NfClosedForms {
  double p1;
  double p2;
  double p3;
  double pf;
};

NfClosedForms nf_closed_forms(const InterferometerConfig& config);

// Parses a comma-separated list of three complex amplitudes, e.g.
// "1,0,0" or "0.5,0.5+0.5i,-0.5i". The list is normalized; throws
// ZeroNorm when the norm is numerically zero, ParseError on bad syntax.
CVec3 parse_amplitudes(const std::string& text);

// Amplitude list -> pure density.
DensityMatrix parse_state_amplitudes(const std::string& text);

}  // namespace ctxfer
