#pragma once

#include <array>
#include <optional>
#include <string_view>
#include <utility>

#include "ctxfer/hilbert.hpp"

namespace ctxfer {

// The ten interferometer paths. "One".."Three" double as the input ports,
// the output ports, and the members of the shared {1,2,3} context.
enum class PathId : int {
  One = 0,
  Two,
  Three,
  S1,
  D1,
  F,
  P1,
  S2,
  P2,
  D2,
};

inline constexpr int kPathCount = 10;
inline constexpr std::array<PathId, 3> kOutcomes = {PathId::One, PathId::Two,
                                                    PathId::Three};

constexpr int index_of(PathId id) { return static_cast<int>(id); }

const char* path_name(PathId id);
std::optional<PathId> parse_path(std::string_view name);

// Outer paths appear in two contexts, inner paths in exactly one.
bool is_outer(PathId id);

// An ordered triple of co-measurable paths (an orthonormal basis).
struct Context {
  std::array<PathId, 3> members;

  bool contains(PathId id) const {
    return members[0] == id || members[1] == id || members[2] == id;
  }
};

// The five measurement contexts, in construction order. The input context
// and the output context are the same triple {1,2,3}.
const std::array<Context, 5>& contexts();

// The two free reflectivities and the three derived from the cyclic
// closure condition. All five strictly inside (0,1).
struct InterferometerConfig {
  double r1;
  double r2;
  double rf;
  double rs1;
  double rs2;
};

// rf = (1-r1)(1-r2), 1-rs1 = r2/(1-rf), 1-rs2 = r1/(1-rf).
// Throws DegenerateReflectivity unless r1, r2 are strictly inside (0,1).
InterferometerConfig derive_reflectivities(double r1, double r2);

// One beam splitter of the network: mixes outer input a with inner input b
// into outputs (u, v) at the given reflectivity.
struct BeamSplitter {
  PathId in_outer;
  PathId in_inner;
  PathId out_u;
  PathId out_v;
  double reflectivity;
};

// u = sqrt(R) a + sqrt(1-R) b,  v = sqrt(1-R) a - sqrt(R) b.
// The inner input b picks up the negative sign on reflection.
// Throws NonOrthogonalInputs unless a, b are orthonormal within 1e-12.
std::pair<CVec3, CVec3> beamsplitter_pair(const CVec3& a, const CVec3& b,
                                          double reflectivity);

// All ten path vectors in the fixed input basis, the five beam-splitter
// records, and the three raw output vectors kept for closure checking.
struct PathVectorTable {
  InterferometerConfig config;
  std::array<CVec3, kPathCount> vectors;
  std::array<CVec3, 3> outputs;  // |1_out>, |2_out>, |3_out>
  std::array<BeamSplitter, 5> splitters;

  const CVec3& path(PathId id) const {
    return vectors[static_cast<std::size_t>(index_of(id))];
  }
};

// Builds the five-beam-splitter network from a valid config.
PathVectorTable build_network(const InterferometerConfig& config);

// max over outputs o of the entrywise deviation |o_out - e_o|. The outputs
// must equal the input basis vectors themselves, not merely up to phase.
double closure_residual(const PathVectorTable& table);

inline const CVec3& path_vector(const PathVectorTable& table, PathId id) {
  return table.path(id);
}

}  // namespace ctxfer
