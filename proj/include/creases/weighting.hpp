#pragma once

#include <map>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "creases/config.hpp"

namespace creases {

// Integer weights on crease curves. Corner-free curves carry a single
// value; cornered curves carry one value per side, keyed by region id.
struct Weighting {
  std::map<CurveId, std::map<RegionId, int>> side_weights;

  // Single value for a corner-free curve (both sides equal).
  int value(const CurveId& c) const;
  int side(const CurveId& c, const RegionId& k) const;
  bool covers(const CreaseConfig& cfg) const;
};

struct InfeasibleWeighting {
  RegionId violated_region;  // first in canonical order
};

struct MissingCornerData {
  CurveId curve;
};

using WeightingResult =
    std::variant<Weighting, InfeasibleWeighting, MissingCornerData>;

// Unique weight assignment satisfying, for every region K,
//   sum over boundary curves of side weight w.r.t. K  ==  chi(K).
// Computed by peeling: leaf disks force +1; a region with one unknown
// boundary weight determines it. The remaining region equation decides
// feasibility. Deterministic under relabeling (peeling follows canonical
// region order).
WeightingResult solve_weighting(const CreaseConfig& cfg);

// Weight of a curve seen from the other side: each +pi/2 corner on the
// known side contributes -1 when switching sides, each -3pi/2 corner +1.
int opposite_side_weight(int t_known, int quarter_corners,
                         int three_quarter_corners);

struct WeightCheck {
  std::vector<RegionId> violated_regions;
  bool global_identity_ok = true;  // corner-free: 2 * sum(t) == 2
  bool ok() const { return violated_regions.empty() && global_identity_ok; }
};

WeightCheck verify_weighting(const CreaseConfig& cfg, const Weighting& w);

// Folding sign assignment.
enum class FoldSign { Positive, Negative };

struct SignAssignment {
  std::map<CurveId, FoldSign> signs;
};

struct SignInfeasible {
  std::string reason;
};

// Refutation-only feasibility test for folding signs:
//  - some curve must fold positively;
//  - all-positive is impossible unless there is a single curve;
//  - a unique positive curve cannot bound a disk region.
// Returns nullopt when the assignment is not refuted.
std::optional<SignInfeasible> sign_feasibility(const CreaseConfig& cfg,
                                               const SignAssignment& signs);

}  // namespace creases
