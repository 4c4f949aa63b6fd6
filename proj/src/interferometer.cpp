#include "ctxfer/interferometer.hpp"

#include <cmath>
#include <string>

#include "ctxfer/errors.hpp"

namespace ctxfer {

namespace {

constexpr const char* kPathNames[kPathCount] = {"1",  "2",  "3",  "S1", "D1",
                                                "f",  "P1", "S2", "P2", "D2"};

}  // namespace

const char* path_name(PathId id) { return kPathNames[index_of(id)]; }

std::optional<PathId> parse_path(std::string_view name) {
  for (int i = 0; i < kPathCount; ++i)
    if (name == kPathNames[i]) return static_cast<PathId>(i);
  return std::nullopt;
}

bool is_outer(PathId id) {
  switch (id) {
    case PathId::One:
    case PathId::S1:
    case PathId::F:
    case PathId::S2:
    case PathId::Two:
      return true;
    default:
      return false;
  }
}

const std::array<Context, 5>& contexts() {
  static const std::array<Context, 5> kContexts = {{
      {{PathId::One, PathId::Two, PathId::Three}},
      {{PathId::One, PathId::S1, PathId::D1}},
      {{PathId::F, PathId::S1, PathId::P1}},
      {{PathId::F, PathId::S2, PathId::P2}},
      {{PathId::Two, PathId::S2, PathId::D2}},
  }};
  return kContexts;
}

InterferometerConfig derive_reflectivities(double r1, double r2) {
  if (!(r1 > 0.0 && r1 < 1.0) || !(r2 > 0.0 && r2 < 1.0))
    throw DegenerateReflectivity(
        "reflectivities must be strictly inside (0,1), got r1=" +
        std::to_string(r1) + " r2=" + std::to_string(r2));
  InterferometerConfig c;
  c.r1 = r1;
  c.r2 = r2;
  c.rf = (1.0 - r1) * (1.0 - r2);
  c.rs1 = 1.0 - r2 / (1.0 - c.rf);
  c.rs2 = 1.0 - r1 / (1.0 - c.rf);
  return c;
}

std::pair<CVec3, CVec3> beamsplitter_pair(const CVec3& a, const CVec3& b,
                                          double reflectivity) {
  if (reflectivity < 0.0 || reflectivity > 1.0)
    throw Error("beam splitter reflectivity outside [0,1]");
  if (std::abs(a.norm() - 1.0) > 1e-12 || std::abs(b.norm() - 1.0) > 1e-12 ||
      std::abs(inner(a, b)) > 1e-12)
    throw NonOrthogonalInputs("beam splitter inputs must be orthonormal");
  const double sr = std::sqrt(reflectivity);
  const double st = std::sqrt(1.0 - reflectivity);
  return {sr * a + st * b, st * a + (-sr) * b};
}

PathVectorTable build_network(const InterferometerConfig& config) {
  PathVectorTable table;
  table.config = config;

  auto set = [&table](PathId id, const CVec3& v) {
    table.vectors[static_cast<std::size_t>(index_of(id))] = v;
  };

  const CVec3 e1 = CVec3::basis(0);
  const CVec3 e2 = CVec3::basis(1);
  const CVec3 e3 = CVec3::basis(2);
  set(PathId::One, e1);
  set(PathId::Two, e2);
  set(PathId::Three, e3);

  // Construction sequence: each splitter turns one context into the next.
  auto [s1, d1] = beamsplitter_pair(e2, e3, config.r1);
  set(PathId::S1, s1);
  set(PathId::D1, d1);

  auto [f, p1] = beamsplitter_pair(e1, d1, config.rs1);
  set(PathId::F, f);
  set(PathId::P1, p1);

  auto [s2, p2] = beamsplitter_pair(s1, p1, config.rf);
  set(PathId::S2, s2);
  set(PathId::P2, p2);

  auto [out2, d2] = beamsplitter_pair(f, p2, config.rs2);
  set(PathId::D2, d2);

  auto [out1, out3] = beamsplitter_pair(s2, d2, config.r2);

  table.outputs = {out1, out2, out3};
  table.splitters = {{
      {PathId::Two, PathId::Three, PathId::S1, PathId::D1, config.r1},
      {PathId::One, PathId::D1, PathId::F, PathId::P1, config.rs1},
      {PathId::S1, PathId::P1, PathId::S2, PathId::P2, config.rf},
      {PathId::F, PathId::P2, PathId::Two, PathId::D2, config.rs2},
      {PathId::S2, PathId::D2, PathId::One, PathId::Three, config.r2},
  }};
  return table;
}

double closure_residual(const PathVectorTable& table) {
  double dev = 0.0;
  for (int o = 0; o < 3; ++o) {
    const CVec3 diff = table.outputs[static_cast<std::size_t>(o)] - CVec3::basis(o);
    for (int k = 0; k < 3; ++k) dev = std::max(dev, std::abs(diff[k]));
  }
  return dev;
}

}  // namespace ctxfer
