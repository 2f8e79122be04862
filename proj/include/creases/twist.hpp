#pragma once

#include <stdexcept>

#include "creases/mesh.hpp"
#include "creases/plan.hpp"

namespace creases {

struct UnsupportedTwist : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Chooses the shared projected segment of every twist channel and adjusts
// hole circles so that consecutive mark curves meet the channel (P2).
// Called by build_stack_plan when the twist plan has arcs.
void plan_twist_channels(StackPlan& plan);

// Mesh emission for plans with twist channels. The untwisted parts reuse
// the standard slab/collar/cap construction; each channel is realized by a
// clasp passage carrying the stacked strip through one full turn.
TriMesh emit_twisted_mesh(const StackPlan& plan, int resolution);

}  // namespace creases
