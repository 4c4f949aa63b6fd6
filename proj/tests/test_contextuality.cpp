#include <cmath>
#include <doctest.h>

#include "ctxfer/contextuality.hpp"
#include "ctxfer/errors.hpp"
#include "ctxfer/states.hpp"

using namespace ctxfer;

namespace {

PathVectorTable canonical_table() {
  return build_network(derive_reflectivities(0.5, 0.5));
}

}  // namespace

TEST_CASE("N_f violates the inequality maximally at (0.5,0.5)") {
  const PathVectorTable t = canonical_table();
  const ContextualityReport report =
      noncontextual_margin(pure_density(make_nf(t)), t);
  CHECK(report.margin == doctest::Approx(-1.0 / 9.0).epsilon(1e-12));
  CHECK(report.violated);
  REQUIRE(report.decomposition_defined);
  CHECK(report.decomposition_terms[0] ==
        doctest::Approx(-1.0 / 9.0).epsilon(1e-12));
  CHECK(report.decomposition_terms[1] ==
        doctest::Approx(-1.0 / 9.0).epsilon(1e-12));
  CHECK(report.decomposition_terms[2] ==
        doctest::Approx(1.0 / 9.0).epsilon(1e-12));
  CHECK(report.identity_residual < 1e-12);
}

TEST_CASE("noncontextual reference states do not violate") {
  const PathVectorTable t = canonical_table();

  const ContextualityReport s2 =
      noncontextual_margin(pure_density(t.path(PathId::S2)), t);
  CHECK(s2.margin >= 0.0);
  CHECK(!s2.violated);

  const ContextualityReport mixed = noncontextual_margin(maximally_mixed(), t);
  CHECK(std::abs(mixed.margin - 1.0 / 3.0) < 1e-12);
  CHECK(!mixed.violated);
}

TEST_CASE("decomposition identity holds for 1000 random states") {
  const PathVectorTable t = canonical_table();
  for (std::uint64_t seed = 0; seed < 1000; ++seed) {
    const ContextualityReport report =
        noncontextual_margin(random_density(seed), t);
    REQUIRE(report.decomposition_defined);
    CHECK(report.identity_residual < 1e-10);
  }
}

TEST_CASE("states without output coherences never violate") {
  // Diagonal rho in the input (= output) basis has only the direct currents.
  for (double r1 : {0.2, 0.5, 0.8})
    for (double r2 : {0.3, 0.5, 0.7}) {
      const PathVectorTable t = build_network(derive_reflectivities(r1, r2));
      Rng rng(static_cast<std::uint64_t>(1000 * r1 + 10 * r2));
      for (int trial = 0; trial < 30; ++trial) {
        double w0 = rng.uniform() + 1e-3;
        double w1 = rng.uniform() + 1e-3;
        double w2 = rng.uniform() + 1e-3;
        const double sum = w0 + w1 + w2;
        CMat3 diag;
        diag(0, 0) = w0 / sum;
        diag(1, 1) = w1 / sum;
        diag(2, 2) = w2 / sum;
        const ContextualityReport report =
            noncontextual_margin(DensityMatrix{diag}, t);
        CHECK(report.margin >= -1e-10);
        CHECK(!report.violated);
      }
    }
}

TEST_CASE("both signs of N_f violate by exactly pf for every config") {
  for (double r1 : {0.1, 0.33, 0.5, 0.72, 0.9})
    for (double r2 : {0.14, 0.5, 0.88}) {
      const InterferometerConfig c = derive_reflectivities(r1, r2);
      const PathVectorTable t = build_network(c);
      const CVec3 nf = make_nf(t);
      const double pf = nf_closed_forms(c).pf;
      for (double sign : {1.0, -1.0}) {
        const ContextualityReport report =
            noncontextual_margin(pure_density(sign * nf), t);
        CHECK(std::abs(report.margin + pf) < 1e-12);
        CHECK(report.margin < 0.0);
        CHECK(report.violated);
      }
    }
}

TEST_CASE("decomposition needs all three output probabilities") {
  const PathVectorTable t = canonical_table();
  const ContextualityReport report =
      noncontextual_margin(pure_density(CVec3::basis(0)), t);
  CHECK(!report.decomposition_defined);
  // Margin is still reported: P(D1)+P(D2)-P(f) for |1> input.
  CHECK(std::abs(report.margin - (0.5 - 1.0 / 3.0)) < 1e-12);
}

TEST_CASE("scan finds the canonical maximum") {
  const std::vector<double> grid = uniform_grid(0.05, 0.95, 21);
  const ScanResult result = scan_violation(grid, grid);
  CHECK(result.cells.size() == 441);
  const ScanResult::Cell& best = result.cells[result.argmax_index];
  CHECK(best.r1 == doctest::Approx(0.5).epsilon(1e-12));
  CHECK(best.r2 == doctest::Approx(0.5).epsilon(1e-12));
  CHECK(std::abs(result.max_pf - 1.0 / 9.0) < 1e-12);

  for (const ScanResult::Cell& cell : result.cells) {
    CHECK(cell.pf_closed > 0.0);
    CHECK(cell.pf_closed <= 1.0 / 9.0 + 1e-12);
    CHECK(std::abs(cell.pf_closed - cell.pf_propagated) <= 1e-12);
  }
}

TEST_CASE("scan covers the fully symmetric interferometer") {
  const double rs = symmetric_reflectivity();
  const ScanResult result = scan_violation({rs, 0.5}, {rs, 0.5});
  CHECK(std::abs(result.cells[0].pf_closed - 0.1055728090) < 1e-9);
  CHECK(std::abs(result.cells[0].pf_propagated -
                 (1.0 - 2.0 / std::sqrt(5.0))) < 1e-12);
}

TEST_CASE("scan rejects bad grids") {
  CHECK_THROWS_AS(scan_violation({0.5}, {0.4, 0.6}), Error);
  CHECK_THROWS_AS(scan_violation({0.0, 0.5}, {0.4, 0.6}),
                  DegenerateReflectivity);
}

TEST_CASE("symmetric reflectivity solves R = (1-R)^2") {
  const double r = symmetric_reflectivity();
  CHECK(r == doctest::Approx(0.3819660112501051).epsilon(1e-15));
  CHECK(std::abs(r - (1.0 - r) * (1.0 - r)) < 1e-15);
  const InterferometerConfig c = derive_reflectivities(r, r);
  CHECK(std::abs(c.rf - r) < 1e-12);
  CHECK(std::abs(c.rs1 - r) < 1e-12);
  CHECK(std::abs(c.rs2 - r) < 1e-12);
}

TEST_CASE("margin is invariant under a global phase of the input state") {
  const PathVectorTable t = canonical_table();
  const CVec3 nf = make_nf(t);
  const Cx phase(std::cos(1.234), std::sin(1.234));
  const ContextualityReport a = noncontextual_margin(pure_density(nf), t);
  const ContextualityReport b = noncontextual_margin(pure_density(phase * nf), t);
  CHECK(a.margin == doctest::Approx(b.margin).epsilon(1e-14));
  for (int k = 0; k < 3; ++k)
    CHECK(a.decomposition_terms[static_cast<std::size_t>(k)] ==
          doctest::Approx(b.decomposition_terms[static_cast<std::size_t>(k)])
              .epsilon(1e-14));
}
