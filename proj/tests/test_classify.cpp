#include "creases/classify.hpp"

#include "diagram_fixtures.hpp"
#include "doctest.h"

using namespace creases::branched;

TEST_CASE("canonical diagrams classify with empty traces") {
  CHECK(classify(canonical_model(ModelLabel::Saucer)).label == ModelLabel::Saucer);
  CHECK(classify(canonical_model(ModelLabel::Saucer)).trace.empty());
  CHECK(classify(canonical_model(ModelLabel::Mushroom)).label == ModelLabel::Mushroom);
  CHECK(classify(canonical_model(ModelLabel::Toric)).label == ModelLabel::Toric);
  CHECK(classify(canonical_model(ModelLabel::Toric)).trace.empty());
}

TEST_CASE("five-double-point diagram classifies as a mushroom") {
  BranchedDiagram d = diagram_fixtures::mushroom_five();
  ClassifyResult res = classify(d);
  CHECK(res.label == ModelLabel::Mushroom);
  CHECK(res.initial == Complexity{14, 8});
  CHECK(!res.trace.empty());
  CHECK(res.terminal.double_point_count() == 0);
  // The measure strictly decreases at every step.
  auto measure = [](const Complexity& c) {
    return std::make_pair(c.n1, c.n1 + c.n2);
  };
  for (const auto& step : res.trace)
    CHECK(measure(step.after) < measure(step.before));
}

TEST_CASE("random f1 and f2 diagrams classify to their folding's model") {
  for (unsigned seed = 1; seed <= 30; ++seed) {
    Folding f = seed % 2 ? Folding::F1 : Folding::F2;
    BranchedDiagram d = random_diagram(f, 6, seed);
    REQUIRE(diagram_valid(d));
    ClassifyResult res = classify(d);
    CHECK(res.label ==
          (f == Folding::F1 ? ModelLabel::Saucer : ModelLabel::Mushroom));
    CHECK(res.terminal.double_point_count() == 0);
    auto measure = [](const Complexity& c) {
      return std::make_pair(c.n1, c.n1 + c.n2);
    };
    for (const auto& step : res.trace)
      CHECK(measure(step.after) < measure(step.before));
  }
}
