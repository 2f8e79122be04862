// Command-line front end: weighting, enumeration, realization, mesh
// verification, diagram classification, connect sums, the five-curve
// table, and SVG rendering.

#include <fstream>
#include <iostream>
#include <variant>

#include "CLI11.hpp"
#include "creases/analyze.hpp"
#include "creases/classify.hpp"
#include "creases/composer.hpp"
#include "creases/emit.hpp"
#include "creases/enumerate.hpp"
#include "creases/json_io.hpp"
#include "creases/obj_io.hpp"
#include "creases/svg.hpp"
#include "creases/twist.hpp"
#include "json.hpp"

using namespace creases;
using ordered_json = nlohmann::ordered_json;

namespace {

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;

CreaseConfig load_config(const std::string& path) {
  auto doc = parse_document_file(path);
  if (!std::holds_alternative<CreaseConfig>(doc))
    throw SchemaError(path + " does not hold a crease/1 document");
  return std::get<CreaseConfig>(doc);
}

branched::BranchedDiagram load_diagram(const std::string& path) {
  auto doc = parse_document_file(path);
  if (!std::holds_alternative<branched::BranchedDiagram>(doc))
    throw SchemaError(path + " does not hold a diagram/1 document");
  return std::get<branched::BranchedDiagram>(doc);
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream f(path);
  if (!f) throw std::runtime_error("cannot open " + path + " for writing");
  f << text;
}

int cmd_weight(const std::string& in) {
  CreaseConfig cfg = load_config(in);
  auto res = solve_weighting(cfg);
  if (std::holds_alternative<InfeasibleWeighting>(res)) {
    std::cout << "INFEASIBLE region "
              << std::get<InfeasibleWeighting>(res).violated_region << "\n";
    return kExitFail;
  }
  if (std::holds_alternative<MissingCornerData>(res)) {
    std::cerr << "missing corner data for curve "
              << std::get<MissingCornerData>(res).curve << "\n";
    return kExitUsage;
  }
  std::cout << weighting_to_json(cfg, std::get<Weighting>(res));
  return kExitPass;
}

int cmd_enumerate(int max_curves, int max_corners, bool weightable_only) {
  auto configs = enumerate_configs(max_curves, max_corners, weightable_only);
  ordered_json j;
  j["schema"] = "enumeration/1";
  j["count"] = configs.size();
  j["configs"] = ordered_json::array();
  for (const auto& cfg : configs)
    j["configs"].push_back(ordered_json::parse(config_to_json(cfg)));
  std::cout << j.dump(2) << "\n";
  return kExitPass;
}

int cmd_realize(const std::string& in, const std::string& out,
                const std::string& plan_out, int resolution) {
  CreaseConfig cfg = load_config(in);
  StackPlan plan = plan_realization(cfg);
  if (!plan_out.empty()) {
    ordered_json j;
    j["schema"] = "plan/1";
    j["levels"] = ordered_json();
    for (const auto& rp : plan.regions) j["levels"][rp.region] = rp.level;
    ordered_json circles;
    for (const auto& [cid, c] : plan.circles) {
      circles[cid] = {{"cx", c.center.x}, {"cy", c.center.y}, {"r", c.r}};
    }
    j["circles"] = circles;
    j["twisting_arcs"] = plan.twists.arcs.size();
    j["edge_paths"] = plan.twists.paths.size();
    write_file(plan_out, j.dump(2) + "\n");
  }
  TriMesh mesh = emit_mesh(plan, resolution);
  write_obj_file(out, mesh);
  std::cout << "wrote " << out << ": " << mesh.vertices.size() << " vertices, "
            << mesh.triangles.size() << " faces\n";
  return kExitPass;
}

int cmd_verify(const std::string& obj_path, const std::string& cfg_path,
               bool scan) {
  CreaseConfig cfg = load_config(cfg_path);
  TriMesh mesh = read_obj_file(obj_path);
  auto res = solve_weighting(cfg);
  if (!std::holds_alternative<Weighting>(res)) {
    std::cerr << "configuration is not weightable\n";
    return kExitUsage;
  }
  VerifyOptions opts;
  opts.self_intersection_scan = scan;
  RealizationReport rep =
      verify_realization(cfg, std::get<Weighting>(res), mesh, opts);
  std::cout << report_to_json(rep);
  return rep.pass() ? kExitPass : kExitFail;
}

int cmd_classify(const std::string& in, const std::string& trace_out) {
  branched::BranchedDiagram d = load_diagram(in);
  branched::ClassifyResult res = branched::classify(d);
  std::string label = res.label == branched::ModelLabel::Saucer    ? "Saucer"
                      : res.label == branched::ModelLabel::Mushroom ? "Mushroom"
                                                                    : "Toric";
  ordered_json j;
  j["schema"] = "classification/1";
  j["label"] = label;
  j["initial_complexity"] = {res.initial.n1, res.initial.n2};
  j["trace"] = ordered_json::array();
  for (const auto& step : res.trace) {
    ordered_json sj;
    sj["move"] = step.kind;
    sj["before"] = {step.before.n1, step.before.n2};
    sj["after"] = {step.after.n1, step.after.n2};
    sj["removed"] = step.removed_dps;
    if (!step.added_dps.empty()) sj["added"] = step.added_dps;
    j["trace"].push_back(sj);
  }
  if (!trace_out.empty()) write_file(trace_out, j.dump(2) + "\n");
  std::cout << label << "\n";
  std::cout << j.dump(2) << "\n";
  return kExitPass;
}

int cmd_connect_sum(const std::string& a_path, const std::string& b_path,
                    const std::string& along_a, const std::string& along_b) {
  CreaseConfig ca = load_config(a_path);
  CreaseConfig cb = load_config(b_path);
  // Wrap into decorated classes with all-positive placeholder signs when
  // sign data is not part of the schema; joining is then always allowed.
  auto wrap = [](const CreaseConfig& cfg, const std::string& name) {
    DecoratedClass d;
    d.cfg = cfg;
    auto res = solve_weighting(cfg);
    if (!std::holds_alternative<Weighting>(res))
      throw std::runtime_error(name + " is not weightable");
    d.weights = std::get<Weighting>(res);
    for (const auto& c : cfg.curves)
      d.signs.signs[c.id] = FoldSign::Positive;
    d.provenance = name;
    return d;
  };
  DecoratedClass sum =
      connect_sum(wrap(ca, "A"), along_a, wrap(cb, "B"), along_b);
  std::cout << config_to_json(sum.cfg);
  std::cout << weighting_to_json(sum.cfg, sum.weights);
  return kExitPass;
}

int cmd_table2() {
  FiveCurveTable table = five_curve_table();
  std::cout << table.text();
  std::cout << table_to_json(table);
  return kExitPass;
}

int cmd_draw(const std::string& in, const std::string& out) {
  CreaseConfig cfg = load_config(in);
  StackPlan plan = plan_realization(cfg);
  write_file(out, svg_crease_projection(plan));
  std::cout << "wrote " << out << "\n";
  return kExitPass;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"crease configurations on the sphere: weights, realizations, "
               "branched-surface classification"};
  app.require_subcommand(1);

  std::string in, out, plan_out, cfg_path, trace_out;
  std::vector<std::string> along;
  int max_curves = 3, max_corners = 0, resolution = 64;
  bool weightable_only = false, scan = false;

  auto* weight = app.add_subcommand("weight", "solve the weighting of a configuration");
  weight->add_option("input", in)->required();

  auto* enumerate = app.add_subcommand("enumerate", "list configurations");
  enumerate->add_option("--max-curves", max_curves)->required();
  enumerate->add_option("--max-corners", max_corners);
  enumerate->add_flag("--weightable-only", weightable_only);

  auto* realize = app.add_subcommand("realize", "emit a triangulated embedding");
  realize->add_option("input", in)->required();
  realize->add_option("-o,--output", out)->required();
  realize->add_option("--plan", plan_out);
  realize->add_option("--resolution", resolution);

  auto* verify = app.add_subcommand("verify", "check a mesh against a configuration");
  verify->add_option("input", in)->required();
  verify->add_option("--config", cfg_path)->required();
  verify->add_flag("--self-intersections", scan);

  auto* classify_cmd = app.add_subcommand("classify", "classify a three-crease diagram");
  classify_cmd->add_option("input", in)->required();
  classify_cmd->add_option("--trace", trace_out);

  auto* csum = app.add_subcommand("connect-sum", "join two configurations");
  csum->add_option("a", in)->required();
  csum->add_option("b", out)->required();
  csum->add_option("--along", along)->expected(2)->required();

  auto* table2 = app.add_subcommand("table2", "five-curve sign table");

  auto* draw = app.add_subcommand("draw", "render projected crease circles as SVG");
  draw->add_option("input", in)->required();
  draw->add_option("-o,--output", out)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kExitPass : kExitUsage;
  }

  try {
    if (weight->parsed()) return cmd_weight(in);
    if (enumerate->parsed())
      return cmd_enumerate(max_curves, max_corners, weightable_only);
    if (realize->parsed()) return cmd_realize(in, out, plan_out, resolution);
    if (verify->parsed()) return cmd_verify(in, cfg_path, scan);
    if (classify_cmd->parsed()) return cmd_classify(in, trace_out);
    if (csum->parsed()) return cmd_connect_sum(in, out, along[0], along[1]);
    if (table2->parsed()) return cmd_table2();
    if (draw->parsed()) return cmd_draw(in, out);
  } catch (const SchemaError& e) {
    std::cerr << "schema error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitFail;
  }
  return kExitUsage;
}
