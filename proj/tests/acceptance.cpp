// Acceptance suite: one pass/fail line per criterion, nonzero exit when
// any criterion fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <set>
#include <string>
#include <vector>

#include "creases/analyze.hpp"
#include "creases/classify.hpp"
#include "creases/composer.hpp"
#include "creases/emit.hpp"
#include "creases/enumerate.hpp"
#include "creases/ltg.hpp"
#include "creases/plan.hpp"
#include "diagram_fixtures.hpp"
#include "fixtures.hpp"
#include "oracles.hpp"

using namespace creases;
namespace chrono = std::chrono;

namespace {

int failures = 0;

void criterion(int number, const std::string& name,
               const std::function<bool(std::string&)>& body) {
  std::string detail;
  bool pass = false;
  auto t0 = chrono::steady_clock::now();
  try {
    pass = body(detail);
  } catch (const std::exception& e) {
    detail = e.what();
  }
  double ms = chrono::duration<double, std::milli>(chrono::steady_clock::now() - t0)
                  .count();
  std::printf("[%s] criterion %2d: %-38s (%.0f ms)%s%s\n", pass ? "PASS" : "FAIL",
              number, name.c_str(), ms, detail.empty() ? "" : " -- ",
              detail.c_str());
  if (!pass) failures++;
}

Weighting solve(const CreaseConfig& cfg) {
  return std::get<Weighting>(solve_weighting(cfg));
}

}  // namespace

int main() {
  criterion(1, "thirteen-curve weights", [](std::string& detail) {
    CreaseConfig cfg = fixtures::thirteen_curve_example();
    auto res = solve_weighting(cfg);
    if (!std::holds_alternative<Weighting>(res)) {
      detail = "infeasible";
      return false;
    }
    const Weighting& w = std::get<Weighting>(res);
    for (auto id : {"g1", "g2", "g3", "g4", "g10", "g11", "g12", "g13"})
      if (w.value(id) != 1) return false;
    for (auto id : {"g5", "g6", "g8", "g9"})
      if (w.value(id) != -3) return false;
    return w.value("g7") == 5;
  });

  criterion(2, "three-curve facts", [](std::string&) {
    Weighting w = solve(make_path_config(3));
    bool path_ok = w.value("c0") == 1 && w.value("c1") == -1 && w.value("c2") == 1;
    bool star_ok = std::holds_alternative<InfeasibleWeighting>(
        solve_weighting(make_star_config(3)));
    return path_ok && star_ok;
  });

  criterion(3, "global identity up to 8 curves", [](std::string& detail) {
    for (const auto& cfg : enumerate_configs(8, 0, true)) {
      Weighting w = solve(cfg);
      int total = 0;
      for (const auto& c : cfg.curves) total += w.value(c.id);
      if (2 * total != 2) {
        detail = "violated at " + std::to_string(cfg.curves.size()) + " curves";
        return false;
      }
    }
    return true;
  });

  criterion(4, "enumeration matches brute force", [](std::string& detail) {
    for (int n = 1; n <= 6; ++n) {
      size_t expect_all = 0, expect_w = 0;
      for (int e = 1; e <= n; ++e) {
        auto trees = oracles::all_trees_upto_iso(e + 1);
        expect_all += trees.size();
        for (const auto& t : trees)
          if (oracles::brute_force_weights(oracles::config_from_edges(t, e + 1)))
            expect_w++;
      }
      if (enumerate_configs(n, 0, false).size() != expect_all ||
          enumerate_configs(n, 0, true).size() != expect_w) {
        detail = "mismatch at max_curves=" + std::to_string(n);
        return false;
      }
    }
    if (enumerate_configs(3, 0, true).size() != 2) return false;
    if (enumerate_configs(4, 0, true).size() != 2) return false;
    return true;
  });

  criterion(5, "realization round trip (<= 5 curves)", [](std::string& detail) {
    bool all = true;
    for (const auto& cfg : enumerate_configs(5, 0, true)) {
      Weighting w = solve(cfg);
      try {
        TriMesh mesh = realize_config(cfg, 64);
        RealizationReport rep = verify_realization(cfg, w, mesh);
        if (!rep.pass()) {
          for (const auto& c : rep.checks)
            if (!c.pass)
              detail += std::to_string(cfg.curves.size()) + "-curve " + c.name +
                        "(" + c.detail + ") ";
          all = false;
        }
      } catch (const std::exception& e) {
        detail += std::to_string(cfg.curves.size()) + "-curve: " +
                  std::string(e.what()) + " ";
        all = false;
      }
    }
    return all;
  });

  criterion(6, "branched replay", [](std::string& detail) {
    using namespace creases::branched;
    BranchedDiagram d = diagram_fixtures::mushroom_five();
    if (compute_complexity(d) != Complexity{14, 8}) {
      detail = "initial complexity";
      return false;
    }
    auto pc = enumerate_partial_close_moves(d);
    if (pc.empty() || pc.front().removed_dps != std::vector<int>{1, 2, 3}) {
      detail = "pinch enumeration";
      return false;
    }
    BranchedDiagram closed = apply_partial_close(d, pc.front());
    if (closed.words[0] != std::vector<int>{4, 5, 5, 4} ||
        compute_complexity(closed) != Complexity{4, 4}) {
      detail = "pinch result";
      return false;
    }
    auto dc = enumerate_double_cusp_moves(d);
    if (dc.empty()) {
      detail = "cusp enumeration";
      return false;
    }
    BranchedDiagram slid = apply_double_cusp(d, dc.front());
    if (slid.words[0] != std::vector<int>{1, 6, 7, 3, 3, 7, 4, 5, 5, 4, 6, 1}) {
      detail = "cusp word";
      return false;
    }
    return compute_complexity(slid) == Complexity{12, 12};
  });

  criterion(7, "canonical complexities", [](std::string&) {
    using namespace creases::branched;
    return compute_complexity(canonical_model(ModelLabel::Saucer)) ==
               Complexity{0, 0} &&
           compute_complexity(canonical_model(ModelLabel::Mushroom)) ==
               Complexity{0, 0} &&
           compute_complexity(canonical_model(ModelLabel::Toric)) ==
               Complexity{6, 0};
  });

  criterion(8, "classification terminates", [](std::string& detail) {
    using namespace creases::branched;
    auto measure = [](const Complexity& c) {
      return std::make_pair(c.n1, c.n1 + c.n2);
    };
    ClassifyResult five = classify(diagram_fixtures::mushroom_five());
    if (five.label != ModelLabel::Mushroom || five.initial != Complexity{14, 8}) {
      detail = "five-double-point example";
      return false;
    }
    for (unsigned seed = 1; seed <= 100; ++seed) {
      Folding f = seed % 2 ? Folding::F1 : Folding::F2;
      BranchedDiagram d = random_diagram(f, 6, seed);
      if (!diagram_valid(d)) {
        detail = "generator seed " + std::to_string(seed);
        return false;
      }
      ClassifyResult res = classify(d);
      bool label_ok =
          res.label == (f == Folding::F1 ? ModelLabel::Saucer : ModelLabel::Mushroom);
      if (!label_ok || res.terminal.double_point_count() != 0) {
        detail = "seed " + std::to_string(seed);
        return false;
      }
      for (const auto& step : res.trace)
        if (!(measure(step.after) < measure(step.before))) {
          detail = "measure at seed " + std::to_string(seed);
          return false;
        }
    }
    return true;
  });

  criterion(9, "five-curve sign table", [](std::string& detail) {
    FiveCurveTable t = five_curve_table();
    using A = std::array<char, 4>;
    struct Row {
      A signs;
      char g5;
      bool forced;
    };
    std::vector<Row> want = {{A{'+', '+', '+', '+'}, '-', true},
                             {A{'-', '-', '-', '-'}, '+', true},
                             {A{'+', '+', '-', '+'}, '-', false},
                             {A{'+', '-', '-', '-'}, '+', true},
                             {A{'+', '-', '+', '-'}, '-', false}};
    if (t.rows.size() != want.size()) return false;
    for (size_t i = 0; i < want.size(); ++i) {
      if (t.rows[i].disk_signs != want[i].signs || t.rows[i].gamma5 != want[i].g5 ||
          t.rows[i].forced != want[i].forced) {
        detail = "row " + std::to_string(i + 1);
        return false;
      }
    }
    return true;
  });

  criterion(10, "H configuration center weight", [](std::string&) {
    DecoratedClass sum = connect_sum(model_class(ModelClass::Saucer), "gm",
                                     model_class(ModelClass::Saucer), "gm");
    return config_isomorphic(sum.cfg, fixtures::h_configuration()) &&
           sum.weights.value("gm#b.gm") == -3;
  });

  criterion(11, "sign feasibility predicate", [](std::string&) {
    CreaseConfig path3 = make_path_config(3);
    SignAssignment bad;
    bad.signs = {{"c0", FoldSign::Positive},
                 {"c1", FoldSign::Negative},
                 {"c2", FoldSign::Negative}};
    if (!sign_feasibility(path3, bad).has_value()) return false;
    SignAssignment allp;
    allp.signs = {{"c0", FoldSign::Positive},
                  {"c1", FoldSign::Positive},
                  {"c2", FoldSign::Positive}};
    if (!sign_feasibility(path3, allp).has_value()) return false;
    CreaseConfig dimple = make_path_config(1);
    dimple.curves[0].corner_count = 2;
    dimple.corner_data["c0"] = {"K0",
                                {CornerKind::Quarter, CornerKind::ThreeQuarter}};
    auto res = solve_weighting(dimple);
    if (!std::holds_alternative<Weighting>(res)) return false;
    const Weighting& w = std::get<Weighting>(res);
    return w.side("c0", "K0") == 1 && w.side("c0", "K1") == 1;
  });

  std::printf("%d criteria failed\n", failures);
  return failures == 0 ? 0 : 1;
}
