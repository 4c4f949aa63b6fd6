#pragma once

#include <array>

#include "ctxfer/hilbert.hpp"
#include "ctxfer/interferometer.hpp"

namespace ctxfer {

// Conditional current through path i for postselection on outcome o:
//   W(i|x,o) = <o|i><i|rho|o> / <o|rho|o>
struct WeakValue {
  Cx value;
  PathId path;
  PathId outcome;
  double postselection_probability;
};

// Kirkwood-Dirac quasiprobability element W(i|o) P(o) = <o|i><i|rho|o>.
// Defined even when P(o) = 0.
struct KDElement {
  Cx value;
  PathId path;
  PathId outcome;
};

// C(i|n,o) = <o|i><i|n>: the weight by which the coherence <n|rho|o>
// redistributes conditional current through path i.
struct CoherenceCoefficient {
  Cx value;
  PathId path;
  PathId ket_outcome;  // n
  PathId bra_outcome;  // o
};

// Throws ImpossiblePostselection when <o|rho|o> <= 1e-12. The outcome is
// normally one of {1,2,3} but any path vector is accepted as <o|; the same
// formula covers the intermediate-context outcomes of the continuity
// relations.
WeakValue weak_value(const DensityMatrix& rho, const PathVectorTable& table,
                     PathId i, PathId o);

KDElement kd_element(const DensityMatrix& rho, const PathVectorTable& table,
                     PathId i, PathId o);

// Weak-value continuity across each of the five beam splitters:
//   W(a|o) + W(b|o) - W(u|o) - W(v|o)
// Throws ImpossiblePostselection when P(o) <= 1e-12.
std::array<Cx, 5> continuity_residuals(const DensityMatrix& rho,
                                       const PathVectorTable& table, PathId o);

// The two dark-port continuity relations of the currents through f, in KD
// (numerator) form so that they stay defined at zero probability:
//   W(f|D1)P(D1) - W(f|2)P(2) - W(f|3)P(3)
//   W(f|D2)P(D2) - W(f|1)P(1) - W(f|3)P(3)
std::array<Cx, 2> dcont_check(const DensityMatrix& rho,
                              const PathVectorTable& table);

CoherenceCoefficient coherence_coefficient(const PathVectorTable& table,
                                           PathId i, PathId n, PathId o);

// | kd_element(i,o) - sum_n C(i|n,o) <n|rho|o> |
double kd_reconstruction_residual(const DensityMatrix& rho,
                                  const PathVectorTable& table, PathId i,
                                  PathId o);

// Which coherence column the current-difference route reconstructs.
enum class CoherenceTarget {
  To31,  // C(i|3,1) from W(i|S2,1) - |<i|1>|^2
  To32,  // C(i|3,2) from W(i|S1,2) - |<i|2>|^2
};

// C(i|3,o) for all ten paths via the weak-value difference route; agrees
// with coherence_coefficient within rounding.
std::array<Cx, kPathCount> current_difference_coefficients(
    const PathVectorTable& table, CoherenceTarget target);

// Full 10x3 table of weak values and KD elements plus the per-splitter
// continuity residuals, for one input state.
struct WeakReport {
  struct Entry {
    Cx weak;
    Cx kd;
    bool defined;  // weak value defined (P(o) > 1e-12)
  };

  std::array<double, 3> outcome_probability{};            // P(1), P(2), P(3)
  std::array<std::array<Entry, 3>, kPathCount> entries{};  // [path][outcome]
  std::array<std::array<Cx, 3>, 5> continuity{};           // [splitter][outcome]
  std::array<bool, 3> outcome_defined{};
};

WeakReport weak_report(const DensityMatrix& rho, const PathVectorTable& table);

}  // namespace ctxfer
