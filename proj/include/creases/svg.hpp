#pragma once

#include <string>

#include "creases/analyze.hpp"
#include "creases/ltg.hpp"
#include "creases/plan.hpp"

namespace creases {

// Projected crease circles of a stack plan, stroked by folding sign when
// provided (positive blue, negative red, unknown gray).
std::string svg_crease_projection(const StackPlan& plan,
                                  const SignAssignment* signs = nullptr);

// Extracted crease loops of a mesh.
std::string svg_extraction(const CreaseExtraction& ex);

// Height diagram of a labeled tree graph layout.
std::string svg_ltg_layout(const Ltg& ltg, const LtgLayout& layout,
                           const Labeling& labeling);

}  // namespace creases
