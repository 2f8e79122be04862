#pragma once

// The five-double-point diagram of the mushroom class: one branching-locus
// circle reading 1,2,3,3,4,2,5,5,4,1 from the basepoint, with the interior
// traces that give complexity (14, 8).

#include "creases/branched.hpp"

namespace diagram_fixtures {

using namespace creases::branched;

inline BranchedDiagram mushroom_five() {
  BranchedDiagram d;
  d.folding = Folding::F2;
  d.words = {{1, 2, 3, 3, 4, 2, 5, 5, 4, 1}};
  d.next_fresh_dp = 6;

  auto vat = [](int dp, int occ) {
    return AttachPoint{true, {dp, occ}, 0, false};
  };
  auto after = [](int dp, int occ, double frac) {
    return AttachPoint{false, {dp, occ}, frac, false};
  };
  auto before = [](int dp, int occ, double frac) {
    return AttachPoint{false, {dp, occ}, frac, true};
  };

  Component ap{"A+", false, true, 0, {}, {}};
  ap.ivertices.push_back({10, 4});
  // Interior instance of 4 carrying the strand with ends at 3 and 2 plus
  // the half strand from 1.
  ap.strands.push_back({{vat(3, 0), vat(2, 0)}, {10}, false});
  ap.strands.push_back({{vat(1, 0)}, {10}, false});
  // Trace of the 4..5 stretch pocketing the middle of the arc.
  ap.strands.push_back({{before(4, 0, 0.3), after(5, 0, 0.3)}, {}, false});
  // The chord with ends at the arc edges by 4 and 2, nested inside.
  ap.strands.push_back({{after(4, 0, 0.2), after(2, 1, 0.2)}, {}, false});

  Component am{"A-", false, true, 0, {}, {}};
  am.ivertices.push_back({20, 2});
  // Interior instance of 2 carrying the strand with ends at 4 and 5 plus
  // the half strand from 1.
  am.strands.push_back({{vat(4, 1), vat(5, 1)}, {20}, false});
  am.strands.push_back({{vat(1, 1)}, {20}, false});
  // Dual chord interleaving the one in the other annulus.
  am.strands.push_back({{after(4, 0, 0.5), after(2, 1, 0.5)}, {}, false});
  // Short traces pocketing the second 3 and the first 4.
  am.strands.push_back({{before(3, 1, 0.3), after(3, 1, 0.3)}, {}, false});
  am.strands.push_back({{after(3, 1, 0.7), after(4, 0, 0.3)}, {}, false});

  d.components = {ap, am};
  return d;
}

}  // namespace diagram_fixtures
