#pragma once

#include <stdexcept>
#include <variant>

#include "creases/branched.hpp"

namespace creases::branched {

struct PreconditionViolated : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct UnsupportedTopology : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Pinch along a boundary-close arc: the opposite-side cluster J is
// consumed, the arc's double points disappear entirely, and the arc is
// replaced by a plain stretch of locus.
struct PartialClosePinch {
  std::string j_component;      // side carrying the cluster
  std::string close_component;  // side where the arc is boundary-close
  int cluster = 0;              // cluster index in the J component
  std::vector<int> removed_dps;
  int arc_vertex_count = 0;     // instances on the arc, for move ordering
};

// Strand slide through a double-cusp disk: the slid double point vanishes
// and two fresh ones appear where the strand re-crosses the locus.
struct DoubleCuspPinch {
  std::string plus_component;   // carries the chord attached along the arc
  std::string minus_component;  // carries the dual chord
  int slid_dp = 0;
  int target_dp = 0;
  int target_on_occ = 0;  // the target passage on the pinched arc
  // Word neighbors of the slid point's off-arc passage.
  int u_dp = 0, u_occ = 0;
  int w_dp = 0, w_occ = 0;
  // Instance following the slid point's on-arc passage.
  int s_dp = 0, s_occ = 0;
};

using Move = std::variant<PartialClosePinch, DoubleCuspPinch>;

std::vector<PartialClosePinch> enumerate_partial_close_moves(
    const BranchedDiagram& d);
std::vector<DoubleCuspPinch> enumerate_double_cusp_moves(
    const BranchedDiagram& d);

BranchedDiagram apply_partial_close(const BranchedDiagram& d,
                                    const PartialClosePinch& move);
BranchedDiagram apply_double_cusp(const BranchedDiagram& d,
                                  const DoubleCuspPinch& move);

}  // namespace creases::branched
