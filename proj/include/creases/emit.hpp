#pragma once

#include <stdexcept>

#include "creases/mesh.hpp"
#include "creases/plan.hpp"

namespace creases {

struct ResolutionTooLow : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// Compile a stack plan into a closed oriented triangulated surface.
// Slab interiors are flat, folds are blended collars, +1 caps are graph
// disks. Requires resolution >= 16 segments per circle.
TriMesh emit_mesh(const StackPlan& plan, int resolution);

// Convenience: plan + emit.
TriMesh realize_config(const CreaseConfig& cfg, int resolution);

}  // namespace creases
