#include "creases/composer.hpp"

#include "doctest.h"
#include "fixtures.hpp"

using namespace creases;

TEST_CASE("model signs") {
  auto s = model_signs(ModelClass::Saucer).signs;
  CHECK(s.at("gi") == FoldSign::Positive);
  CHECK(s.at("gm") == FoldSign::Positive);
  CHECK(s.at("go") == FoldSign::Negative);
  auto m = model_signs(ModelClass::Mushroom).signs;
  CHECK(m.at("gm") == FoldSign::Negative);
  auto t = model_signs(ModelClass::Toric).signs;
  CHECK(t.at("gi") == FoldSign::Negative);
  CHECK(t.at("gm") == FoldSign::Positive);
}

TEST_CASE("model classes are feasible three-curve paths") {
  for (auto label : {ModelClass::Saucer, ModelClass::Mushroom, ModelClass::Toric}) {
    DecoratedClass d = model_class(label);
    CHECK(is_valid(d.cfg));
    CHECK(config_isomorphic(d.cfg, make_path_config(3)));
    CHECK(verify_weighting(d.cfg, d.weights).ok());
  }
}

TEST_CASE("mirror preserves crease sign data") {
  DecoratedClass a = model_class(ModelClass::Saucer);
  DecoratedClass m = mirror(a);
  CHECK(m.mirrored);
  CHECK(m.signs.signs == a.signs.signs);
}

TEST_CASE("connect sum of two saucers along middles gives the H shape") {
  DecoratedClass sum = connect_sum(model_class(ModelClass::Saucer), "gm",
                                   model_class(ModelClass::Saucer), "gm");
  CHECK(is_valid(sum.cfg));
  CHECK(sum.cfg.curves.size() == 5);
  CHECK(config_isomorphic(sum.cfg, fixtures::h_configuration()));
  CHECK(sum.weights.value("gm#b.gm") == -3);
  CHECK(verify_weighting(sum.cfg, sum.weights).ok());
  CHECK(!sign_feasibility(sum.cfg, sum.signs).has_value());
}

TEST_CASE("connect sum along two negative curves is rejected") {
  CHECK_THROWS_AS(connect_sum(model_class(ModelClass::Saucer), "go",
                              model_class(ModelClass::Saucer), "go"),
                  BothNegative);
}

TEST_CASE("mushroom with toric: remaining signs all positive, merged negative") {
  DecoratedClass sum = connect_sum(model_class(ModelClass::Mushroom), "gm",
                                   model_class(ModelClass::Toric), "gm");
  for (auto id : {"gi", "go", "b.gi", "b.go"})
    CHECK(sum.signs.signs.at(id) == FoldSign::Positive);
  CHECK(sum.signs.signs.at("gm#b.gm") == FoldSign::Negative);
}

TEST_CASE("toric with toric: all negative disks force a positive center") {
  DecoratedClass sum = connect_sum(model_class(ModelClass::Toric), "gm",
                                   model_class(ModelClass::Toric), "gm");
  for (auto id : {"gi", "go", "b.gi", "b.go"})
    CHECK(sum.signs.signs.at(id) == FoldSign::Negative);
  CHECK(sum.signs.signs.at("gm#b.gm") == FoldSign::Positive);
  CHECK(sum.merged_signs.empty());
}

TEST_CASE("five-curve table reproduces the catalog") {
  FiveCurveTable t = five_curve_table();
  REQUIRE(t.rows.size() == 5);
  using A = std::array<char, 4>;
  CHECK(t.rows[0].disk_signs == A{'+', '+', '+', '+'});
  CHECK(t.rows[0].gamma5 == '-');
  CHECK(t.rows[0].forced);
  CHECK(t.rows[1].disk_signs == A{'-', '-', '-', '-'});
  CHECK(t.rows[1].gamma5 == '+');
  CHECK(t.rows[1].forced);
  CHECK(t.rows[2].disk_signs == A{'+', '+', '-', '+'});
  CHECK(t.rows[2].gamma5 == '-');
  CHECK_FALSE(t.rows[2].forced);
  CHECK(t.rows[3].disk_signs == A{'+', '-', '-', '-'});
  CHECK(t.rows[3].gamma5 == '+');
  CHECK(t.rows[3].forced);
  CHECK(t.rows[4].disk_signs == A{'+', '-', '+', '-'});
  CHECK(t.rows[4].gamma5 == '-');
  CHECK_FALSE(t.rows[4].forced);
  CHECK(t.gamma5_weight == -3);
}
