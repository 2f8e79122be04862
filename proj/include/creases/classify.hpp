#pragma once

#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include "creases/moves.hpp"

namespace creases::branched {

struct Stuck : std::runtime_error {
  explicit Stuck(const std::string& what, std::string dump_)
      : std::runtime_error(what), dump(std::move(dump_)) {}
  std::string dump;
};

struct ClassifyStep {
  std::string kind;  // "partial-close" or "double-cusp"
  Complexity before, after;
  std::vector<int> removed_dps;
  std::vector<int> added_dps;
};

struct ClassifyResult {
  ModelLabel label = ModelLabel::Saucer;
  std::vector<ClassifyStep> trace;
  Complexity initial;
  BranchedDiagram terminal;
};

// Run pinching moves (partial closes preferred, longest arc first) until
// the diagram is minimal; the folding assignment then names the class.
ClassifyResult classify(const BranchedDiagram& d);

std::string dump_diagram(const BranchedDiagram& d);

// Valid diagram generator for property tests: grows a canonical saucer or
// mushroom by inverse pinches until it carries up to `max_dps` double
// points. Only foldings f1 and f2 are supported.
BranchedDiagram random_diagram(Folding folding, int max_dps, unsigned seed);

}  // namespace creases::branched
