#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "creases/config.hpp"
#include "creases/mesh.hpp"
#include "creases/weighting.hpp"

namespace creases {

struct DegenerateNormal : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct AntipodalEdges : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct NonIntegerTurning : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct AmbiguousProbe : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// One extracted crease loop: closed vertex cycle, oriented with the local
// sheet material on the left of the projection.
struct CreaseLoop {
  std::vector<int> vertices;      // mesh vertex ids, closed (first != last)
  std::vector<Vec2> projected;    // same order
  FoldSign sign = FoldSign::Positive;
};

struct CreaseExtraction {
  std::vector<CreaseLoop> loops;
  // Face partition by crease edges: region id per face, and the two region
  // ids either side of each loop.
  std::vector<int> face_region;
  int region_count = 0;
  std::vector<std::pair<int, int>> loop_regions;
};

// Crease edges are mesh edges whose adjacent face normals disagree in the
// sign of their z component. Faces with |n_z| below 1e-9 raise
// DegenerateNormal.
CreaseExtraction extract_crease(const TriMesh& mesh);

// Turning number of a closed projected polygon: signed exterior angles
// summed over 2*pi; must land within 1e-6 of an integer.
int discrete_turning(const std::vector<Vec2>& loop);

// Partial turning of an open polyline in full turns.
double partial_turning(const std::vector<Vec2>& polyline);

// Folding sign of one extracted loop: probe a point just inside the fold,
// take the two sheet heights there, and test the midpoint against the
// solid by ray parity.
FoldSign fold_sign(const TriMesh& mesh, const CreaseLoop& loop);

// Combinatorial configuration induced by the extraction (regions = face
// components, curves = loops).
CreaseConfig extracted_config(const CreaseExtraction& ex);

struct RealizationReport {
  struct Check {
    std::string name;
    bool pass;
    std::string detail;
  };
  std::vector<Check> checks;
  bool pass() const {
    for (const auto& c : checks)
      if (!c.pass) return false;
    return true;
  }
};

struct VerifyOptions {
  bool self_intersection_scan = false;  // quadratic; off by default
};

// Full verification: mesh sanity, crease tree isomorphism against the
// input configuration, per-loop turning numbers against the weighting,
// and the global identity.
RealizationReport verify_realization(const CreaseConfig& cfg, const Weighting& w,
                                     const TriMesh& mesh,
                                     const VerifyOptions& opts = {});

}  // namespace creases
