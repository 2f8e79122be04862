#include "creases/weighting.hpp"

#include "doctest.h"
#include "fixtures.hpp"

using namespace creases;

namespace {

Weighting solve_ok(const CreaseConfig& cfg) {
  auto res = solve_weighting(cfg);
  REQUIRE(std::holds_alternative<Weighting>(res));
  return std::get<Weighting>(res);
}

}  // namespace

TEST_CASE("three-edge path solves to (1,-1,1)") {
  CreaseConfig cfg = make_path_config(3);
  Weighting w = solve_ok(cfg);
  CHECK(w.value("c0") == 1);
  CHECK(w.value("c1") == -1);
  CHECK(w.value("c2") == 1);
  CHECK(verify_weighting(cfg, w).ok());
}

TEST_CASE("three-edge star is infeasible") {
  auto res = solve_weighting(make_star_config(3));
  CHECK(std::holds_alternative<InfeasibleWeighting>(res));
}

TEST_CASE("thirteen-curve example weights") {
  CreaseConfig cfg = fixtures::thirteen_curve_example();
  Weighting w = solve_ok(cfg);
  for (auto id : {"g1", "g2", "g3", "g4", "g10", "g11", "g12", "g13"})
    CHECK(w.value(id) == 1);
  for (auto id : {"g5", "g6", "g8", "g9"}) CHECK(w.value(id) == -3);
  CHECK(w.value("g7") == 5);
}

TEST_CASE("dimpled sphere with one corner of each type solves to (1,1)") {
  CreaseConfig cfg = make_path_config(1);
  cfg.curves[0].corner_count = 2;
  cfg.corner_data["c0"] = {"K0", {CornerKind::Quarter, CornerKind::ThreeQuarter}};
  Weighting w = solve_ok(cfg);
  CHECK(w.side("c0", "K0") == 1);
  CHECK(w.side("c0", "K1") == 1);
}

TEST_CASE("cornered curve without corner data reports the gap") {
  CreaseConfig cfg = make_path_config(1);
  cfg.curves[0].corner_count = 2;
  auto res = solve_weighting(cfg);
  REQUIRE(std::holds_alternative<MissingCornerData>(res));
  CHECK(std::get<MissingCornerData>(res).curve == "c0");
}

TEST_CASE("opposite side weight follows the corner swap rule") {
  CHECK(opposite_side_weight(1, 1, 1) == 1);
  CHECK(opposite_side_weight(7, 0, 0) == 7);
  CHECK(opposite_side_weight(1, 2, 0) == -1);
  CHECK(opposite_side_weight(-1, 0, 2) == 1);
}

TEST_CASE("solver output is stable under relabeling") {
  CreaseConfig cfg = fixtures::thirteen_curve_example();
  Weighting base = solve_ok(cfg);
  for (unsigned seed : {11u, 22u, 33u, 44u}) {
    CreaseConfig shuffled = fixtures::shuffle_ids(cfg, seed);
    Weighting w = solve_ok(shuffled);
    // Compare weights through the canonical curve order.
    auto cf_a = config_canonical_form(cfg);
    auto cf_b = config_canonical_form(shuffled);
    REQUIRE(cf_a.curve_order.size() == cf_b.curve_order.size());
    for (size_t i = 0; i < cf_a.curve_order.size(); ++i)
      CHECK(base.value(cf_a.curve_order[i]) == w.value(cf_b.curve_order[i]));
  }
}

TEST_CASE("round trip: verify accepts solver output") {
  for (const auto& cfg : {make_path_config(1), make_path_config(3),
                          fixtures::spider221(), fixtures::h_configuration(),
                          fixtures::thirteen_curve_example()}) {
    Weighting w = solve_ok(cfg);
    CHECK(verify_weighting(cfg, w).ok());
  }
}

TEST_CASE("leaf law: curves on disk regions get weight one") {
  for (const auto& cfg :
       {make_path_config(3), fixtures::spider221(), fixtures::h_configuration(),
        fixtures::thirteen_curve_example()}) {
    Weighting w = solve_ok(cfg);
    for (const auto& r : cfg.regions)
      if (r.boundary.size() == 1) CHECK(w.value(r.boundary.front()) == 1);
  }
}

TEST_CASE("verify reports violated regions for a broken weighting") {
  CreaseConfig cfg = make_path_config(3);
  Weighting w;
  for (const auto& c : cfg.curves)
    for (const auto& rid : cfg.incident_regions(c.id)) w.side_weights[c.id][rid] = 1;
  auto check = verify_weighting(cfg, w);
  CHECK_FALSE(check.ok());
  CHECK(check.violated_regions.size() == 2);  // the two middle annuli
}

TEST_CASE("sign feasibility refutations") {
  CreaseConfig path3 = make_path_config(3);
  auto assign = [&](FoldSign a, FoldSign b, FoldSign c) {
    SignAssignment s;
    s.signs = {{"c0", a}, {"c1", b}, {"c2", c}};
    return s;
  };
  using enum FoldSign;
  // A unique positive crease on a disk-bounding curve.
  CHECK(sign_feasibility(path3, assign(Positive, Negative, Negative)).has_value());
  // All positive with more than one crease.
  CHECK(sign_feasibility(path3, assign(Positive, Positive, Positive)).has_value());
  // No positive crease at all.
  CHECK(sign_feasibility(path3, assign(Negative, Negative, Negative)).has_value());
  // Saucer-style assignment stands.
  CHECK_FALSE(sign_feasibility(path3, assign(Positive, Positive, Negative)).has_value());
  // Toric-style: the unique positive curve is the middle one.
  CHECK_FALSE(sign_feasibility(path3, assign(Negative, Positive, Negative)).has_value());

  CreaseConfig one = make_path_config(1);
  SignAssignment plus;
  plus.signs = {{"c0", FoldSign::Positive}};
  CHECK_FALSE(sign_feasibility(one, plus).has_value());
  SignAssignment minus;
  minus.signs = {{"c0", FoldSign::Negative}};
  CHECK(sign_feasibility(one, minus).has_value());
}
