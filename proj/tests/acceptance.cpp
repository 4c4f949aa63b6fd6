// Acceptance suite: runs the toolkit's full verification checklist and
// prints one PASS/FAIL line per criterion. Exit code is the failure count.

#include <cmath>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "ctxfer/contextuality.hpp"
#include "ctxfer/measurement.hpp"
#include "ctxfer/states.hpp"
#include "ctxfer/weak.hpp"

using namespace ctxfer;

namespace {

struct Criterion {
  int number;
  std::string title;
  std::function<bool(std::string&)> run;
};

std::vector<double> grid20() {
  std::vector<double> g(20);
  for (int i = 0; i < 20; ++i) g[i] = 0.05 + 0.9 * i / 19.0;
  return g;
}

bool close(double a, double b, double tol) { return std::abs(a - b) <= tol; }

bool close(Cx a, double b, double tol) {
  return std::abs(a - Cx(b, 0.0)) <= tol;
}

#define REQUIRE_MSG(cond, message)        \
  do {                                    \
    if (!(cond)) {                        \
      detail = (message);                 \
      return false;                       \
    }                                     \
  } while (0)

// 1. rf = 1/4, rs1 = rs2 = 1/3 at the canonical point.
bool criterion_reflectivities(std::string& detail) {
  const InterferometerConfig c = derive_reflectivities(0.5, 0.5);
  REQUIRE_MSG(close(c.rf, 0.25, 1e-15), "rf != 1/4");
  REQUIRE_MSG(close(c.rs1, 1.0 / 3.0, 1e-15), "rs1 != 1/3");
  REQUIRE_MSG(close(c.rs2, 1.0 / 3.0, 1e-15), "rs2 != 1/3");
  return true;
}

// 2. Output basis equals input basis over the grid and at the symmetric point.
bool criterion_closure(std::string& detail) {
  double worst = 0.0;
  for (double r1 : grid20())
    for (double r2 : grid20())
      worst = std::max(worst,
                       closure_residual(build_network(derive_reflectivities(r1, r2))));
  const double rs = symmetric_reflectivity();
  worst = std::max(worst,
                   closure_residual(build_network(derive_reflectivities(rs, rs))));
  REQUIRE_MSG(worst <= 1e-10, "closure residual " + std::to_string(worst));
  return true;
}

// 3. N_f at (0.5,0.5): flat superposition, P(o)=1/3, P(f)=1/9, dark ports empty.
bool criterion_paradox_state(std::string& detail) {
  const PathVectorTable t = build_network(derive_reflectivities(0.5, 0.5));
  const CVec3 nf = make_nf(t);
  const double s3 = 1.0 / std::sqrt(3.0);
  for (int k = 0; k < 3; ++k)
    REQUIRE_MSG(std::abs(nf[k] - Cx(s3, 0.0)) <= 1e-12, "N_f component off");
  const DensityMatrix rho = pure_density(nf);
  for (PathId o : kOutcomes)
    REQUIRE_MSG(close(path_probability(rho, t, o), 1.0 / 3.0, 1e-12),
                "output probability != 1/3");
  REQUIRE_MSG(close(path_probability(rho, t, PathId::F), 1.0 / 9.0, 1e-12),
              "P(f) != 1/9");
  REQUIRE_MSG(path_probability(rho, t, PathId::D1) <= 1e-12, "P(D1) nonzero");
  REQUIRE_MSG(path_probability(rho, t, PathId::D2) <= 1e-12, "P(D2) nonzero");
  return true;
}

// 4. Closed forms match propagation across the grid; pf = rs1 * p1.
bool criterion_closed_forms(std::string& detail) {
  for (double r1 : grid20())
    for (double r2 : grid20()) {
      const InterferometerConfig c = derive_reflectivities(r1, r2);
      const PathVectorTable t = build_network(c);
      const DensityMatrix rho = pure_density(make_nf(t));
      const NfClosedForms cf = nf_closed_forms(c);
      REQUIRE_MSG(close(path_probability(rho, t, PathId::One), cf.p1, 1e-12),
                  "p1 mismatch");
      REQUIRE_MSG(close(path_probability(rho, t, PathId::Two), cf.p2, 1e-12),
                  "p2 mismatch");
      REQUIRE_MSG(close(path_probability(rho, t, PathId::Three), cf.p3, 1e-12),
                  "p3 mismatch");
      REQUIRE_MSG(close(path_probability(rho, t, PathId::F), cf.pf, 1e-12),
                  "pf mismatch");
      REQUIRE_MSG(close(cf.pf, c.rs1 * cf.p1, 1e-12), "pf != rs1*p1");
    }
  return true;
}

// 5. The full weak-value table of N_f at the canonical point.
bool criterion_weak_table(std::string& detail) {
  const PathVectorTable t = build_network(derive_reflectivities(0.5, 0.5));
  const DensityMatrix nf = pure_density(make_nf(t));
  auto w = [&](PathId i, PathId o) { return weak_value(nf, t, i, o).value; };
  const double third = 1.0 / 3.0;
  struct Expect {
    PathId i;
    PathId o;
    double value;
  };
  const Expect table[] = {
      {PathId::F, PathId::One, third},    {PathId::F, PathId::Two, third},
      {PathId::F, PathId::Three, -third}, {PathId::P1, PathId::Two, -third},
      {PathId::P2, PathId::One, -third},  {PathId::P1, PathId::Three, third},
      {PathId::P2, PathId::Three, third}, {PathId::P1, PathId::One, 2 * third},
      {PathId::P2, PathId::Two, 2 * third}, {PathId::S2, PathId::One, 1.0},
      {PathId::S1, PathId::Two, 1.0},
  };
  for (const Expect& e : table)
    REQUIRE_MSG(close(w(e.i, e.o), e.value, 1e-12),
                std::string("W(") + path_name(e.i) + "|" + path_name(e.o) +
                    ") off");
  for (PathId o : kOutcomes) {
    REQUIRE_MSG(close(w(PathId::D1, o), 0.0, 1e-12), "W(D1|o) nonzero");
    REQUIRE_MSG(close(w(PathId::D2, o), 0.0, 1e-12), "W(D2|o) nonzero");
  }
  return true;
}

// 6. Continuity residuals for 100 random states, all splitters and outcomes,
//    plus the dark-port relations.
bool criterion_continuity(std::string& detail) {
  const PathVectorTable t = build_network(derive_reflectivities(0.5, 0.5));
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    const DensityMatrix rho = random_density(seed);
    for (PathId o : kOutcomes)
      for (const Cx& r : continuity_residuals(rho, t, o))
        REQUIRE_MSG(std::abs(r) <= 1e-10,
                    "continuity residual " + std::to_string(std::abs(r)));
    for (const Cx& r : dcont_check(rho, t))
      REQUIRE_MSG(std::abs(r) <= 1e-10,
                  "dark-port residual " + std::to_string(std::abs(r)));
  }
  return true;
}

// 7. KD reconstruction, context sums of the coefficients, and the (1,2) column.
bool criterion_kd_reconstruction(std::string& detail) {
  const PathVectorTable t = build_network(derive_reflectivities(0.5, 0.5));
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    const DensityMatrix rho = random_density(seed);
    for (int k = 0; k < kPathCount; ++k)
      for (PathId o : kOutcomes)
        REQUIRE_MSG(
            kd_reconstruction_residual(rho, t, static_cast<PathId>(k), o) <=
                1e-12,
            "KD reconstruction residual too large");
  }
  for (PathId n : kOutcomes)
    for (PathId o : kOutcomes) {
      const Cx overlap = inner(t.path(o), t.path(n));
      for (const Context& ctx : contexts()) {
        Cx sum = 0.0;
        for (PathId i : ctx.members)
          sum += coherence_coefficient(t, i, n, o).value;
        REQUIRE_MSG(std::abs(sum - overlap) <= 1e-12, "context sum off");
      }
    }
  const double third = 1.0 / 3.0;
  REQUIRE_MSG(
      close(coherence_coefficient(t, PathId::P1, PathId::One, PathId::Two).value,
            -third, 1e-12),
      "C(P1|1,2) off");
  REQUIRE_MSG(
      close(coherence_coefficient(t, PathId::P2, PathId::One, PathId::Two).value,
            -third, 1e-12),
      "C(P2|1,2) off");
  REQUIRE_MSG(
      close(coherence_coefficient(t, PathId::F, PathId::One, PathId::Two).value,
            third, 1e-12),
      "C(f|1,2) off");
  return true;
}

// 8. Current-difference route vs direct coefficients, both targets, full grid.
bool criterion_dual_route(std::string& detail) {
  for (double r1 : grid20())
    for (double r2 : grid20()) {
      const PathVectorTable t = build_network(derive_reflectivities(r1, r2));
      for (CoherenceTarget target :
           {CoherenceTarget::To31, CoherenceTarget::To32}) {
        const auto diff = current_difference_coefficients(t, target);
        const PathId o =
            target == CoherenceTarget::To31 ? PathId::One : PathId::Two;
        for (int k = 0; k < kPathCount; ++k) {
          const Cx direct =
              coherence_coefficient(t, static_cast<PathId>(k), PathId::Three, o)
                  .value;
          REQUIRE_MSG(std::abs(diff[static_cast<std::size_t>(k)] - direct) <=
                          1e-12,
                      "dual-route mismatch");
        }
      }
    }
  return true;
}

// 9. Inequality margin and its weak-value decomposition.
bool criterion_inequality(std::string& detail) {
  for (double r1 : grid20())
    for (double r2 : grid20()) {
      const InterferometerConfig c = derive_reflectivities(r1, r2);
      const PathVectorTable t = build_network(c);
      const ContextualityReport report =
          noncontextual_margin(pure_density(make_nf(t)), t);
      REQUIRE_MSG(close(report.margin, -nf_closed_forms(c).pf, 1e-12),
                  "margin != -pf");
      REQUIRE_MSG(report.margin < 0.0, "N_f margin not negative");
      REQUIRE_MSG(report.violated, "N_f violation not flagged");
    }
  const PathVectorTable t = build_network(derive_reflectivities(0.5, 0.5));
  for (std::uint64_t seed = 0; seed < 1000; ++seed) {
    const ContextualityReport report =
        noncontextual_margin(random_density(seed), t);
    REQUIRE_MSG(report.decomposition_defined, "decomposition undefined");
    REQUIRE_MSG(report.identity_residual <= 1e-10, "identity residual too large");
  }
  const ContextualityReport s2 =
      noncontextual_margin(pure_density(t.path(PathId::S2)), t);
  REQUIRE_MSG(s2.margin >= 0.0, "margin(|S2>) negative");
  const ContextualityReport mixed = noncontextual_margin(maximally_mixed(), t);
  REQUIRE_MSG(close(mixed.margin, 1.0 / 3.0, 1e-12), "margin(I/3) != 1/3");
  return true;
}

// 10. Scan maximum and the fully symmetric point.
bool criterion_scan(std::string& detail) {
  const std::vector<double> grid = uniform_grid(0.05, 0.95, 21);
  const ScanResult result = scan_violation(grid, grid);
  const ScanResult::Cell& best = result.cells[result.argmax_index];
  REQUIRE_MSG(close(best.r1, 0.5, 1e-12) && close(best.r2, 0.5, 1e-12),
              "argmax not at (0.5, 0.5)");
  REQUIRE_MSG(close(result.max_pf, 1.0 / 9.0, 1e-12), "max pf != 1/9");
  const double rs = symmetric_reflectivity();
  const double pf_sym = nf_closed_forms(derive_reflectivities(rs, rs)).pf;
  REQUIRE_MSG(close(pf_sym, 0.1055728090, 1e-9), "symmetric pf off");
  return true;
}

// 11. Monte Carlo frequencies within 5 sigma; bit-exact reproducibility.
bool criterion_monte_carlo(std::string& detail) {
  const PathVectorTable t = build_network(derive_reflectivities(0.5, 0.5));
  const DensityMatrix nf = pure_density(make_nf(t));
  const std::uint64_t shots = 1000000;
  for (const Context& ctx : {contexts()[1], contexts()[2]}) {
    const CountRecord a = sample_context(nf, t, ctx, shots, 7);
    const CountRecord b = sample_context(nf, t, ctx, shots, 7);
    REQUIRE_MSG(a.counts == b.counts, "counts not reproducible");
    REQUIRE_MSG(a.counts[0] + a.counts[1] + a.counts[2] == shots,
                "counts do not sum to shots");
    for (std::size_t k = 0; k < 3; ++k) {
      const double p = path_probability(nf, t, ctx.members[k]);
      const double freq =
          static_cast<double>(a.counts[k]) / static_cast<double>(shots);
      const double sigma =
          std::sqrt(p * (1.0 - p) / static_cast<double>(shots));
      REQUIRE_MSG(std::abs(freq - p) <= 5.0 * sigma,
                  std::string("frequency of ") + path_name(ctx.members[k]) +
                      " outside 5 sigma");
    }
  }
  return true;
}

// 12. Weak-probe extrapolation recovers the signed weak values.
bool criterion_weak_probe(std::string& detail) {
  const PathVectorTable t = build_network(derive_reflectivities(0.5, 0.5));
  const DensityMatrix nf = pure_density(make_nf(t));
  const std::vector<double> eps = {0.04, 0.02, 0.01};
  struct Case {
    PathId path;
    PathId outcome;
    double expected;
  };
  const Case cases[] = {{PathId::F, PathId::Three, -1.0 / 3.0},
                        {PathId::P2, PathId::One, -1.0 / 3.0},
                        {PathId::S2, PathId::One, 1.0}};
  for (const Case& c : cases) {
    const Cx intercept = probe_extrapolate(nf, t, c.path, c.outcome, eps);
    REQUIRE_MSG(close(intercept, c.expected, 1e-4),
                std::string("extrapolation of W(") + path_name(c.path) + "|" +
                    path_name(c.outcome) + ") off by " +
                    std::to_string(std::abs(intercept - Cx(c.expected, 0.0))));
    double previous = 1e9;
    for (double e : eps) {
      const double err =
          std::abs(weak_probe(nf, t, c.path, c.outcome, e).estimate -
                   Cx(c.expected, 0.0));
      // Strict decrease until the estimate has fully converged.
      REQUIRE_MSG(err < previous || err <= 1e-9,
                  "probe error not decreasing with epsilon");
      previous = err;
    }
  }
  return true;
}

// 13. Marker marginal identity for 100 random states and all ten paths.
bool criterion_marker(std::string& detail) {
  const PathVectorTable t = build_network(derive_reflectivities(0.5, 0.5));
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    const DensityMatrix rho = random_density(seed);
    for (int k = 0; k < kPathCount; ++k) {
      const PathId i = static_cast<PathId>(k);
      const MarkerDistribution dist = mark_path(rho, t, i);
      const double marginal =
          dist.flipped[0] + dist.flipped[1] + dist.flipped[2];
      REQUIRE_MSG(std::abs(marginal - path_probability(rho, t, i)) <= 1e-12,
                  "marker marginal identity broken");
    }
  }
  return true;
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {1, "reflectivity closure at (0.5,0.5)", criterion_reflectivities},
      {2, "cycle closure over the reflectivity grid", criterion_closure},
      {3, "paradox state N_f at (0.5,0.5)", criterion_paradox_state},
      {4, "closed forms vs network propagation", criterion_closed_forms},
      {5, "weak-value table of N_f", criterion_weak_table},
      {6, "beam-splitter and dark-port continuity", criterion_continuity},
      {7, "KD reconstruction and coherence sums", criterion_kd_reconstruction},
      {8, "current-difference dual route", criterion_dual_route},
      {9, "inequality margin and decomposition", criterion_inequality},
      {10, "scan maximum and symmetric point", criterion_scan},
      {11, "Monte Carlo counting statistics", criterion_monte_carlo},
      {12, "weak-probe extrapolation", criterion_weak_probe},
      {13, "marker marginal identity", criterion_marker},
  };

  int failures = 0;
  for (const Criterion& criterion : criteria) {
    std::string detail;
    bool pass = false;
    try {
      pass = criterion.run(detail);
    } catch (const std::exception& e) {
      detail = std::string("exception: ") + e.what();
    }
    if (pass) {
      std::printf("PASS %2d  %s\n", criterion.number, criterion.title.c_str());
    } else {
      ++failures;
      std::printf("FAIL %2d  %s  (%s)\n", criterion.number,
                  criterion.title.c_str(), detail.c_str());
    }
  }
  if (failures == 0)
    std::printf("all %zu criteria passed\n", criteria.size());
  else
    std::printf("%d of %zu criteria failed\n", failures, criteria.size());
  return failures;
}
