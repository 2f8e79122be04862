#pragma once

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace creases {

using CurveId = std::string;
using RegionId = std::string;

// Angle type of one corner relative to the curve's reference side.
enum class CornerKind {
  Quarter,       // +pi/2 on the reference side
  ThreeQuarter,  // -3pi/2 on the reference side
};

// Per-curve corner decorations. The reference side names one of the two
// incident regions; each corner's kind is given with respect to it.
struct CornerData {
  RegionId reference_side;
  std::vector<CornerKind> corners;
};

struct Curve {
  CurveId id;
  int corner_count = 0;
};

struct Region {
  RegionId id;
  std::vector<CurveId> boundary;
};

// A crease configuration on the 2-sphere, encoded as its incidence
// structure: regions are vertices, curves are edges. Every simple closed
// curve on the sphere separates, so a valid configuration is a tree.
struct CreaseConfig {
  std::vector<Curve> curves;
  std::vector<Region> regions;
  std::map<CurveId, CornerData> corner_data;

  const Curve* find_curve(const CurveId& id) const;
  const Region* find_region(const RegionId& id) const;
  // The one or two regions listing this curve on their boundary, in the
  // order the regions appear in `regions`.
  std::vector<RegionId> incident_regions(const CurveId& id) const;
};

enum class ViolationKind {
  CyclicIncidence,
  OddCornerCount,
  DanglingCurve,
  DisconnectedIncidence,
};

struct Violation {
  ViolationKind kind;
  std::string detail;
};

// Structural validation: tree-shaped incidence, even corner counts, every
// curve bounding exactly two distinct regions.
std::vector<Violation> validate_config(const CreaseConfig& cfg);
bool is_valid(const CreaseConfig& cfg);

// Euler characteristic of a region: planar regions of the sphere have
// chi = 2 - (number of boundary curves). Throws std::out_of_range for an
// unknown region id.
int region_euler(const CreaseConfig& cfg, const RegionId& region);

// Canonical form of the configuration as a decorated tree (corner counts
// decorate edges). Two configs are isomorphic iff their canonical strings
// are equal. Also exposes a canonical ordering of regions and curves that
// is invariant under relabeling; used to make solver output and error
// reporting deterministic.
struct CanonicalForm {
  std::string signature;
  std::vector<RegionId> region_order;
  std::vector<CurveId> curve_order;
};

CanonicalForm config_canonical_form(const CreaseConfig& cfg);
bool config_isomorphic(const CreaseConfig& a, const CreaseConfig& b);

// Relabel every id through the canonical order: regions K0,K1,... and
// curves c0,c1,... in canonical order. Isomorphic configs map to the same
// object.
CreaseConfig canonicalize(const CreaseConfig& cfg);

// Convenience builders used across tests and the composer.
CreaseConfig make_path_config(int curve_count);  // path tree with n edges
CreaseConfig make_star_config(int leg_count);    // star with n leaf edges

}  // namespace creases
