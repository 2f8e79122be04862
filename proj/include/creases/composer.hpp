#pragma once

#include <array>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "creases/config.hpp"
#include "creases/weighting.hpp"

namespace creases {

enum class ModelClass { Saucer, Mushroom, Toric };

// Folding signs of the three-crease models over (inner, middle, outer).
SignAssignment model_signs(ModelClass label);

// Tri-state crease sign for merged curves whose sign the sum rule leaves
// open.
enum class MergedSign { Positive, Negative, Unknown };

struct DecoratedClass {
  CreaseConfig cfg;
  Weighting weights;
  SignAssignment signs;
  std::string provenance;
  bool mirrored = false;
  // Sign of the most recent merged curve when it was not determined by
  // the composition rule.
  std::map<CurveId, MergedSign> merged_signs;
};

// The three-crease model classes as decorated configurations: curves
// named gi, gm, go.
DecoratedClass model_class(ModelClass label);

DecoratedClass mirror(const DecoratedClass& a);

struct BothNegative : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// Connect sum along gamma in `a` and gamma_prime in `b`; at least one of
// the two must fold positively. Curves of `b` are renamed with a "b."
// prefix when they collide with names in `a`; the merged curve is named
// "<gamma>#<gamma_prime>". Signs: if gamma folds negatively every other
// curve of b flips (and symmetrically); when both fold positively the
// merged sign is undetermined by the rule.
DecoratedClass connect_sum(const DecoratedClass& a, const CurveId& gamma,
                           const DecoratedClass& b, const CurveId& gamma_prime);

struct FiveCurveRow {
  std::array<char, 4> disk_signs;  // '+'/'-' for the four disk curves
  std::string realization;         // e.g. "M#E"
  char gamma5;                     // catalog value
  bool forced;                     // determined by sign feasibility alone
};

struct FiveCurveTable {
  std::vector<FiveCurveRow> rows;
  int gamma5_weight = 0;  // weight of the center curve of the H shape
  std::string text() const;
};

// The five realizations of the H-shaped five-curve configuration obtained
// by summing three-crease classes along their middle curves.
FiveCurveTable five_curve_table();

}  // namespace creases
