#pragma once

#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "creases/config.hpp"
#include "creases/ltg.hpp"
#include "creases/mesh.hpp"
#include "creases/weighting.hpp"

namespace creases {

// Ordered odd-integer boundary weights of one planar region; entries sum
// to 1 - n where n+1 is the boundary count.
struct TurningWeightSet {
  std::vector<int> t;
};

struct Basis {
  std::vector<int> k;  // aligned with the weight set's order
};

struct EvenWeight : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};
struct BadSum : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// Basis offsets: the designated square entry uses t = 1 + 2k, every other
// entry t = -1 + 2k. The region equation forces sum(k) = 0.
Basis derive_basis(const TurningWeightSet& w, int square_index);

enum class MarkKind { Dot, Circle };  // +2 / -2

struct Mark {
  CurveId curve;
  int index = 0;
  auto operator<=>(const Mark&) const = default;
};

struct MarkedRegion {
  RegionId region;
  CurveId square_curve;
  struct CurveMarks {
    CurveId curve;
    MarkKind kind;
    int count = 0;
  };
  std::vector<CurveMarks> marks;  // zero-count entries omitted
  int mark_count(const CurveId& c) const;
};

// Marks realizing the region's weights from the standard template: the
// square curve plays the +1 outer role, every other curve the -1 hole
// role; k twists of +-2 adjust each curve to its weight.
MarkedRegion mark_region(const std::vector<std::pair<CurveId, int>>& weights,
                         const CurveId& square_curve, const RegionId& region);

struct UnbalancedMarks : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// One twisting arc: joins a -2 circle mark to a +2 dot mark inside a
// region.
struct TwistArc {
  RegionId region;
  Mark from;  // circle end
  Mark to;    // dot end
};

struct TwistPlan {
  std::vector<MarkedRegion> regions;
  std::vector<TwistArc> arcs;
  // Arcs concatenate across shared marks into edge paths; both ends of a
  // path land on weight +1 curves.
  struct EdgePath {
    std::vector<Mark> marks;        // path order
    std::vector<TwistArc> arcs;     // marks.size()-1 entries
  };
  std::vector<EdgePath> paths;
};

TwistPlan place_twisting_arcs(const CreaseConfig& cfg, const Weighting& w,
                              const Labeling& labeling);

// Labeling used by the realization pipeline: when every weight is +-1 the
// set of +1 curves is itself a valid labeling and yields a twist-free
// plan; otherwise fall back to the canonical labeling.
Labeling choose_realization_labeling(const Ltg& ltg);

struct Circle {
  Vec2 center;
  double r = 0;
  bool operator==(const Circle& o) const {
    return center.x == o.center.x && center.y == o.center.y && r == o.r;
  }
};

// Stacked planar templates. Every curve owns exactly one projected circle
// shared by both incident regions (P1); every edge path owns one projected
// segment shared by all of its arcs (P2).
struct StackPlan {
  CreaseConfig cfg;
  Weighting weights;
  Labeling labeling;
  LtgLayout layout;
  TwistPlan twists;

  struct RegionPlan {
    RegionId region;
    int level = 0;
    CurveId outer;                // the region's square curve
    std::vector<CurveId> holes;   // remaining boundary curves
  };
  std::vector<RegionPlan> regions;           // chi <= 0 regions only
  std::map<CurveId, Circle> circles;         // shared, one per curve
  std::map<CurveId, double> collar_width;    // radial slack per curve
  std::map<RegionId, int> cap_level;         // leaf disks
  std::map<CurveId, int> cap_direction;      // +1 above host slab, -1 below

  struct Channel {
    int path_index = 0;  // into twists.paths
    Vec2 p;              // shared projection of even-position marks
    Vec2 q;              // odd-position marks
  };
  std::vector<Channel> channels;

  bool twist_free() const { return twists.arcs.empty(); }
};

// Build templates at the layout heights. Asserts P1/P2 before returning.
StackPlan build_stack_plan(const CreaseConfig& cfg, const Weighting& w,
                           const Labeling& labeling, const LtgLayout& layout,
                           const TwistPlan& twists);

// Convenience: full planning pipeline from a weightable corner-free
// configuration.
StackPlan plan_realization(const CreaseConfig& cfg);

}  // namespace creases
