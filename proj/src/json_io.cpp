#include "creases/json_io.hpp"

#include <fstream>
#include <sstream>

#include "json.hpp"

namespace creases {

using ordered_json = nlohmann::ordered_json;

namespace {

CreaseConfig config_from_json(const ordered_json& j) {
  CreaseConfig cfg;
  if (!j.contains("curves") || !j.contains("regions"))
    throw SchemaError("crease/1 document needs curves and regions");
  for (const auto& c : j.at("curves")) {
    Curve cv;
    cv.id = c.at("id").get<std::string>();
    cv.corner_count = c.value("corners", 0);
    cfg.curves.push_back(cv);
  }
  for (const auto& r : j.at("regions")) {
    Region rg;
    rg.id = r.at("id").get<std::string>();
    for (const auto& b : r.at("boundary"))
      rg.boundary.push_back(b.get<std::string>());
    cfg.regions.push_back(rg);
  }
  if (j.contains("corner_data")) {
    for (const auto& [cid, cd] : j.at("corner_data").items()) {
      CornerData data;
      data.reference_side = cd.at("reference_side").get<std::string>();
      for (const auto& k : cd.at("corners")) {
        std::string kind = k.get<std::string>();
        if (kind == "quarter")
          data.corners.push_back(CornerKind::Quarter);
        else if (kind == "three_quarter")
          data.corners.push_back(CornerKind::ThreeQuarter);
        else
          throw SchemaError("unknown corner kind " + kind);
      }
      cfg.corner_data[cid] = data;
    }
  }
  auto violations = validate_config(cfg);
  if (!violations.empty())
    throw SchemaError("invalid configuration: " + violations.front().detail);
  return cfg;
}

branched::BranchedDiagram diagram_from_json(const ordered_json& j) {
  using namespace branched;
  BranchedDiagram d;
  std::string folding = j.at("folding").get<std::string>();
  if (folding == "f1")
    d.folding = Folding::F1;
  else if (folding == "f2")
    d.folding = Folding::F2;
  else if (folding == "f3")
    d.folding = Folding::F3;
  else
    throw SchemaError("folding assignment " + folding + " cannot occur");
  for (const auto& w : j.at("words")) {
    std::vector<int> word;
    for (const auto& x : w) word.push_back(x.get<int>());
    d.words.push_back(word);
  }
  for (const auto& c : j.at("components")) {
    Component comp;
    comp.name = c.at("name").get<std::string>();
    std::string kind = c.at("kind").get<std::string>();
    comp.is_disk = kind == "disk";
    if (!comp.is_disk && kind != "annulus")
      throw SchemaError("unknown component kind " + kind);
    comp.has_b_boundary = c.value("b_boundary", !comp.is_disk);
    comp.word = c.value("word", 0);
    if (c.contains("interior")) {
      const auto& in = c.at("interior");
      for (const auto& v : in.value("vertices", ordered_json::array()))
        comp.ivertices.push_back({v.at("id").get<int>(), v.at("dp").get<int>()});
      for (const auto& e : in.value("edges", ordered_json::array())) {
        Strand s;
        s.closed = e.value("closed", false);
        for (const auto& v : e.value("via", ordered_json::array()))
          s.via.push_back(v.get<int>());
        for (const auto& ap : e.value("ends", ordered_json::array())) {
          AttachPoint a;
          a.at_vertex = ap.value("at_vertex", true);
          a.anchor.dp = ap.at("dp").get<int>();
          a.anchor.occ = ap.at("occ").get<int>();
          a.frac = ap.value("frac", 0.0);
          s.ends.push_back(a);
        }
        comp.strands.push_back(s);
      }
    }
    d.components.push_back(comp);
  }
  int mx = 0;
  for (const auto& w : d.words)
    for (int dp : w) mx = std::max(mx, dp);
  d.next_fresh_dp = j.value("next_fresh_dp", mx + 1);
  auto violations = validate_diagram(d);
  if (!violations.empty())
    throw SchemaError("invalid diagram: " + violations.front().detail);
  return d;
}

}  // namespace

ParsedDocument parse_document(const std::string& json_text) {
  ordered_json j;
  try {
    j = ordered_json::parse(json_text);
  } catch (const std::exception& e) {
    throw SchemaError(std::string("json parse error: ") + e.what());
  }
  std::string schema = j.value("schema", "");
  if (schema == "crease/1") return config_from_json(j);
  if (schema == "diagram/1") return diagram_from_json(j);
  throw SchemaError("unknown or missing schema field: '" + schema + "'");
}

ParsedDocument parse_document_file(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw SchemaError("cannot open " + path);
  std::stringstream ss;
  ss << f.rdbuf();
  return parse_document(ss.str());
}

std::string config_to_json(const CreaseConfig& cfg) {
  ordered_json j;
  j["schema"] = "crease/1";
  j["curves"] = ordered_json::array();
  for (const auto& c : cfg.curves) {
    ordered_json cj;
    cj["id"] = c.id;
    cj["corners"] = c.corner_count;
    j["curves"].push_back(cj);
  }
  j["regions"] = ordered_json::array();
  for (const auto& r : cfg.regions) {
    ordered_json rj;
    rj["id"] = r.id;
    rj["boundary"] = r.boundary;
    j["regions"].push_back(rj);
  }
  if (!cfg.corner_data.empty()) {
    ordered_json cdj;
    for (const auto& [cid, cd] : cfg.corner_data) {
      ordered_json one;
      one["reference_side"] = cd.reference_side;
      one["corners"] = ordered_json::array();
      for (auto k : cd.corners)
        one["corners"].push_back(k == CornerKind::Quarter ? "quarter"
                                                          : "three_quarter");
      cdj[cid] = one;
    }
    j["corner_data"] = cdj;
  }
  return j.dump(2) + "\n";
}

std::string diagram_to_json(const branched::BranchedDiagram& d) {
  ordered_json j;
  j["schema"] = "diagram/1";
  j["folding"] = branched::folding_name(d.folding);
  j["words"] = d.words;
  j["components"] = ordered_json::array();
  for (const auto& comp : d.components) {
    ordered_json cj;
    cj["name"] = comp.name;
    cj["kind"] = comp.is_disk ? "disk" : "annulus";
    cj["b_boundary"] = comp.has_b_boundary;
    cj["word"] = comp.word;
    ordered_json in;
    in["vertices"] = ordered_json::array();
    for (const auto& v : comp.ivertices) {
      ordered_json vj;
      vj["id"] = v.id;
      vj["dp"] = v.dp;
      in["vertices"].push_back(vj);
    }
    in["edges"] = ordered_json::array();
    for (const auto& s : comp.strands) {
      ordered_json sj;
      sj["closed"] = s.closed;
      sj["via"] = s.via;
      sj["ends"] = ordered_json::array();
      for (const auto& ap : s.ends) {
        ordered_json aj;
        aj["at_vertex"] = ap.at_vertex;
        aj["dp"] = ap.anchor.dp;
        aj["occ"] = ap.anchor.occ;
        if (!ap.at_vertex) aj["frac"] = ap.frac;
        sj["ends"].push_back(aj);
      }
      in["edges"].push_back(sj);
    }
    cj["interior"] = in;
    j["components"].push_back(cj);
  }
  j["next_fresh_dp"] = d.next_fresh_dp;
  return j.dump(2) + "\n";
}

std::string weighting_to_json(const CreaseConfig& cfg, const Weighting& w) {
  ordered_json j;
  j["schema"] = "weighting/1";
  ordered_json weights;
  for (const auto& c : cfg.curves) {
    const auto& sides = w.side_weights.at(c.id);
    if (c.corner_count == 0) {
      weights[c.id] = w.value(c.id);
    } else {
      ordered_json two;
      for (const auto& [rid, t] : sides) two[rid] = t;
      weights[c.id] = two;
    }
  }
  j["weights"] = weights;
  return j.dump(2) + "\n";
}

std::string report_to_json(const RealizationReport& report) {
  ordered_json j;
  j["schema"] = "report/1";
  j["pass"] = report.pass();
  j["checks"] = ordered_json::array();
  for (const auto& c : report.checks) {
    ordered_json cj;
    cj["name"] = c.name;
    cj["pass"] = c.pass;
    if (!c.detail.empty()) cj["detail"] = c.detail;
    j["checks"].push_back(cj);
  }
  return j.dump(2) + "\n";
}

std::string table_to_json(const FiveCurveTable& table) {
  ordered_json j;
  j["schema"] = "table/1";
  j["center_weight"] = table.gamma5_weight;
  j["rows"] = ordered_json::array();
  for (const auto& r : table.rows) {
    ordered_json rj;
    std::string signs;
    for (char c : r.disk_signs) signs += c;
    rj["disk_signs"] = signs;
    rj["realization"] = r.realization;
    rj["center_sign"] = std::string(1, r.gamma5);
    rj["forced"] = r.forced;
    j["rows"].push_back(rj);
  }
  return j.dump(2) + "\n";
}

}  // namespace creases
