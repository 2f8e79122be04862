#pragma once

#include <vector>

#include "creases/config.hpp"

namespace creases {

// One representative per equivalence class of crease configurations with
// at most `max_curves` curves and total corner count at most `max_corners`
// (per-curve counts even). Output ids are canonical (K0.., c0..) and the
// list order is deterministic: by curve count, then total corners, then
// canonical signature.
//
// With weightable_only set, corner-free configurations are filtered by
// solve_weighting; cornered configurations are kept when some corner-type
// assignment admits a solution.
std::vector<CreaseConfig> enumerate_configs(int max_curves, int max_corners,
                                            bool weightable_only);

// True when some assignment of corner angle types makes the configuration
// weightable. Equals solve_weighting success for corner-free inputs.
bool weightable_exists(const CreaseConfig& cfg);

}  // namespace creases
