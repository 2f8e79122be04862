#include "creases/moves.hpp"

#include "diagram_fixtures.hpp"
#include "doctest.h"

using namespace creases::branched;

TEST_CASE("partial-close moves on the five-double-point diagram") {
  BranchedDiagram d = diagram_fixtures::mushroom_five();
  auto moves = enumerate_partial_close_moves(d);
  REQUIRE(moves.size() == 2);
  // Longest-arc tie broken by smallest ids: the cluster over 1,2,3 first.
  CHECK(moves[0].removed_dps == std::vector<int>{1, 2, 3});
  CHECK(moves[0].j_component == "A+");
  CHECK(moves[1].removed_dps == std::vector<int>{1, 4, 5});
  CHECK(moves[1].j_component == "A-");
}

TEST_CASE("applying the pinch yields the word 4,5,5,4 at complexity (4,4)") {
  BranchedDiagram d = diagram_fixtures::mushroom_five();
  auto moves = enumerate_partial_close_moves(d);
  REQUIRE(!moves.empty());
  BranchedDiagram after = apply_partial_close(d, moves[0]);
  CHECK(after.words[0] == std::vector<int>{4, 5, 5, 4});
  CHECK(diagram_valid(after));
  CHECK(compute_complexity(after) == Complexity{4, 4});
  CHECK(after.double_point_count() == 2);
  // Boundary-close pattern flips between the two sides.
  CHECK(partial_close_vertices(after, "A-") ==
        std::set<InstanceRef>{{4, 0}, {5, 0}});
  CHECK(partial_close_vertices(after, "A+") ==
        std::set<InstanceRef>{{4, 1}, {5, 1}});
}

TEST_CASE("no partial close on double-point-free diagrams") {
  CHECK(enumerate_partial_close_moves(canonical_model(ModelLabel::Saucer)).empty());
  CHECK(enumerate_partial_close_moves(canonical_model(ModelLabel::Mushroom)).empty());
  CHECK(enumerate_partial_close_moves(canonical_model(ModelLabel::Toric)).empty());
}

TEST_CASE("double-cusp move on the five-double-point diagram") {
  BranchedDiagram d = diagram_fixtures::mushroom_five();
  auto moves = enumerate_double_cusp_moves(d);
  REQUIRE(!moves.empty());
  const auto& m = moves.front();
  CHECK(m.slid_dp == 2);
  CHECK(m.target_dp == 4);
  BranchedDiagram after = apply_double_cusp(d, m);
  CHECK(after.words[0] == std::vector<int>{1, 6, 7, 3, 3, 7, 4, 5, 5, 4, 6, 1});
  CHECK(diagram_valid(after));
  CHECK(compute_complexity(after) == Complexity{12, 12});
  CHECK(after.double_point_count() == 6);
}

TEST_CASE("no double-cusp moves on canonical models") {
  CHECK(enumerate_double_cusp_moves(canonical_model(ModelLabel::Toric)).empty());
  CHECK(enumerate_double_cusp_moves(canonical_model(ModelLabel::Saucer)).empty());
}

TEST_CASE("every id appears exactly twice before and after each move") {
  BranchedDiagram d = diagram_fixtures::mushroom_five();
  auto check_twice = [](const BranchedDiagram& x) {
    for (const auto& [dp, ps] : x.passages()) CHECK(ps.size() == 2);
  };
  check_twice(d);
  auto pc = enumerate_partial_close_moves(d);
  check_twice(apply_partial_close(d, pc.front()));
  auto dc = enumerate_double_cusp_moves(d);
  check_twice(apply_double_cusp(d, dc.front()));
}

TEST_CASE("stale moves are rejected") {
  BranchedDiagram d = diagram_fixtures::mushroom_five();
  auto pc = enumerate_partial_close_moves(d);
  BranchedDiagram after = apply_partial_close(d, pc.front());
  CHECK_THROWS_AS(apply_partial_close(after, pc.front()), PreconditionViolated);
}
