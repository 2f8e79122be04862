#include "creases/emit.hpp"

#include "creases/analyze.hpp"
#include "creases/enumerate.hpp"
#include "creases/mesh_kernels.hpp"
#include "doctest.h"
#include "fixtures.hpp"

using namespace creases;

namespace {

void expect_realizes(const CreaseConfig& cfg, int resolution,
                     bool scan_intersections) {
  Weighting w = std::get<Weighting>(solve_weighting(cfg));
  TriMesh mesh = realize_config(cfg, resolution);
  VerifyOptions opts;
  opts.self_intersection_scan = scan_intersections;
  RealizationReport rep = verify_realization(cfg, w, mesh, opts);
  for (const auto& c : rep.checks) {
    INFO(c.name << " " << c.detail);
    CHECK(c.pass);
  }
}

}  // namespace

TEST_CASE("resolution below sixteen is rejected") {
  CHECK_THROWS_AS(realize_config(make_path_config(1), 8), ResolutionTooLow);
}

TEST_CASE("single curve realizes as a sphere-like mesh") {
  expect_realizes(make_path_config(1), 32, true);
}

TEST_CASE("three-curve path realizes with weights (1,-1,1)") {
  expect_realizes(make_path_config(3), 32, true);
}

TEST_CASE("five-curve path realizes") { expect_realizes(make_path_config(5), 24, true); }

TEST_CASE("spider(2,2,1) realizes") { expect_realizes(fixtures::spider221(), 24, true); }

TEST_CASE("every twist-free weightable config up to seven curves realizes") {
  for (const auto& cfg : enumerate_configs(7, 0, true)) {
    StackPlan plan = plan_realization(cfg);
    if (!plan.twist_free()) continue;
    expect_realizes(cfg, 20, false);
  }
}

TEST_CASE("emitted meshes are embedded at modest resolution") {
  for (const auto& cfg : {make_path_config(3), fixtures::spider221()}) {
    TriMesh mesh = realize_config(cfg, 16);
    CHECK(kernels::self_intersections(mesh).empty());
  }
}
