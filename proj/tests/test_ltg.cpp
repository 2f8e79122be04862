#include "creases/ltg.hpp"

#include "creases/enumerate.hpp"
#include "doctest.h"
#include "fixtures.hpp"

using namespace creases;

namespace {

Ltg ltg_of(const CreaseConfig& cfg) {
  auto w = std::get<Weighting>(solve_weighting(cfg));
  return build_ltg(cfg, w);
}

}  // namespace

TEST_CASE("path-3 builds the expected labeled tree") {
  Ltg g = ltg_of(make_path_config(3));
  REQUIRE(g.vertices.size() == 4);
  REQUIRE(g.edges.size() == 3);
  std::multiset<int> vlabels, elabels;
  for (const auto& v : g.vertices) vlabels.insert(v.chi);
  for (const auto& e : g.edges) elabels.insert(e.weight);
  CHECK(vlabels == std::multiset<int>{1, 0, 0, 1});
  CHECK(elabels == std::multiset<int>{1, -1, 1});
}

TEST_CASE("single curve gives one edge with two +1 vertices") {
  Ltg g = ltg_of(make_path_config(1));
  REQUIRE(g.vertices.size() == 2);
  CHECK(g.vertices[0].chi == 1);
  CHECK(g.vertices[1].chi == 1);
  REQUIRE(g.edges.size() == 1);
  CHECK(g.edges[0].weight == 1);
}

TEST_CASE("cornered configurations are rejected") {
  CreaseConfig cfg = make_path_config(1);
  cfg.curves[0].corner_count = 2;
  cfg.corner_data["c0"] = {"K0", {CornerKind::Quarter, CornerKind::ThreeQuarter}};
  auto w = std::get<Weighting>(solve_weighting(cfg));
  CHECK_THROWS_AS(build_ltg(cfg, w), CorneredConfig);
}

TEST_CASE("path-3 has exactly two labelings and the middle edge wins") {
  Ltg g = ltg_of(make_path_config(3));
  auto all = all_labelings(g);
  CHECK(all.size() == 2);
  Labeling chosen = black_square_labeling(g);
  // Lexicographically least characteristic vector: the middle edge alone.
  CHECK(chosen.marked.size() == 1);
  const Ltg::Edge* middle = nullptr;
  for (const auto& e : g.edges)
    if (e.weight == -1) middle = &e;
  REQUIRE(middle != nullptr);
  CHECK(chosen.marked.count(middle->id) == 1);
}

TEST_CASE("thirteen-curve example admits the documented labeling") {
  CreaseConfig cfg = fixtures::thirteen_curve_example();
  Ltg g = ltg_of(cfg);
  Labeling doc;
  doc.marked = {"g3", "g5", "g8", "g12"};
  CHECK(labeling_valid(g, doc));
  Labeling alg = black_square_labeling(g);
  CHECK(labeling_valid(g, alg));
}

TEST_CASE("single curve needs no marks") {
  Ltg g = ltg_of(make_path_config(1));
  CHECK(black_square_labeling(g).marked.empty());
}

TEST_CASE("layout satisfies the star conditions") {
  for (const auto& cfg : {make_path_config(1), make_path_config(3),
                          fixtures::spider221(), fixtures::h_configuration(),
                          fixtures::thirteen_curve_example()}) {
    Ltg g = ltg_of(cfg);
    Labeling l = black_square_labeling(g);
    LtgLayout layout = layout_ltg(g, l);
    auto check = verify_star(g, layout);
    INFO((check.violations.empty() ? std::string() : check.violations.front()));
    CHECK(check.ok());
    // All heights distinct and as many as vertices.
    std::set<int> hs;
    for (const auto& [rid, h] : layout.height) hs.insert(h);
    CHECK(hs.size() == g.vertices.size());
  }
}

TEST_CASE("star sweep over every weightable corner-free config up to 8 curves") {
  for (const auto& cfg : enumerate_configs(8, 0, true)) {
    Ltg g = ltg_of(cfg);
    LtgLayout layout = layout_ltg(g, black_square_labeling(g));
    CHECK(verify_star(g, layout).ok());
  }
}

TEST_CASE("nesting: later paths sit inside the spans of their nesting edges") {
  CreaseConfig cfg = fixtures::thirteen_curve_example();
  Ltg g = ltg_of(cfg);
  LtgLayout layout = layout_ltg(g, black_square_labeling(g));
  for (const auto& att : layout.attachments) {
    if (att.path_index < 0 || att.nesting.empty()) continue;
    const auto* span = [&]() -> const LtgLayout::EdgeSpan* {
      for (const auto& s : layout.spans)
        if (s.id == att.nesting) return &s;
      return nullptr;
    }();
    REQUIRE(span != nullptr);
    for (const auto& rid : layout.paths[att.path_index].vertices) {
      int h = layout.height.at(rid);
      CHECK(h > span->lo);
      CHECK(h < span->hi);
    }
  }
}

TEST_CASE("verify_star flags duplicated heights and bad slopes") {
  Ltg g = ltg_of(make_path_config(3));
  LtgLayout layout = layout_ltg(g, black_square_labeling(g));
  LtgLayout broken = layout;
  broken.height[g.vertices[0].id] = broken.height[g.vertices[1].id];
  CHECK_FALSE(verify_star(g, broken).ok());

  // Swap two heights so a +1 edge and a -1 edge point the same way.
  LtgLayout swapped = layout;
  // Reverse all heights: monotone flip keeps star-2 (global mirror), so
  // instead shuffle two adjacent interior vertices.
  std::vector<RegionId> ids;
  for (const auto& v : g.vertices) ids.push_back(v.id);
  std::swap(swapped.height[ids[0]], swapped.height[ids[2]]);
  // The result must violate some star condition.
  CHECK_FALSE(verify_star(g, swapped).ok());
}
