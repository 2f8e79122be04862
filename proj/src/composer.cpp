#include "creases/composer.hpp"

#include <algorithm>
#include <cassert>
#include <set>
#include <sstream>

namespace creases {

namespace {

CreaseConfig three_crease_config() {
  CreaseConfig cfg;
  cfg.curves = {{"gi", 0}, {"gm", 0}, {"go", 0}};
  cfg.regions = {{"Di", {"gi"}},
                 {"Aim", {"gi", "gm"}},
                 {"Amo", {"gm", "go"}},
                 {"Do", {"go"}}};
  return cfg;
}

FoldSign flip(FoldSign s) {
  return s == FoldSign::Positive ? FoldSign::Negative : FoldSign::Positive;
}

}  // namespace

SignAssignment model_signs(ModelClass label) {
  SignAssignment s;
  switch (label) {
    case ModelClass::Saucer:
      s.signs = {{"gi", FoldSign::Positive},
                 {"gm", FoldSign::Positive},
                 {"go", FoldSign::Negative}};
      break;
    case ModelClass::Mushroom:
      s.signs = {{"gi", FoldSign::Positive},
                 {"gm", FoldSign::Negative},
                 {"go", FoldSign::Positive}};
      break;
    case ModelClass::Toric:
      s.signs = {{"gi", FoldSign::Negative},
                 {"gm", FoldSign::Positive},
                 {"go", FoldSign::Negative}};
      break;
  }
  return s;
}

DecoratedClass model_class(ModelClass label) {
  DecoratedClass d;
  d.cfg = three_crease_config();
  d.weights = std::get<Weighting>(solve_weighting(d.cfg));
  d.signs = model_signs(label);
  d.provenance = label == ModelClass::Saucer    ? "S"
                 : label == ModelClass::Mushroom ? "M"
                                                 : "E";
  assert(!sign_feasibility(d.cfg, d.signs).has_value());
  return d;
}

DecoratedClass mirror(const DecoratedClass& a) {
  DecoratedClass out = a;
  out.mirrored = !a.mirrored;
  out.provenance = a.mirrored ? a.provenance : a.provenance + "~";
  // Crease sign data is preserved under the mirror.
  return out;
}

DecoratedClass connect_sum(const DecoratedClass& a, const CurveId& gamma,
                           const DecoratedClass& b, const CurveId& gamma_prime) {
  if (!a.cfg.find_curve(gamma))
    throw std::invalid_argument("connect_sum: unknown curve " + gamma);
  if (!b.cfg.find_curve(gamma_prime))
    throw std::invalid_argument("connect_sum: unknown curve " + gamma_prime);
  FoldSign sa = a.signs.signs.at(gamma);
  FoldSign sb = b.signs.signs.at(gamma_prime);
  if (sa == FoldSign::Negative && sb == FoldSign::Negative)
    throw BothNegative("both curves fold negatively");

  // Rename b's ids to avoid collisions.
  std::set<std::string> taken;
  for (const auto& c : a.cfg.curves) taken.insert(c.id);
  for (const auto& r : a.cfg.regions) taken.insert(r.id);
  auto rename = [&](const std::string& id) {
    return taken.count(id) ? "b." + id : id;
  };

  DecoratedClass out;
  CurveId merged = gamma + "#" + rename(gamma_prime);

  // Curves: a's minus gamma, b's minus gamma_prime, plus the merged curve.
  for (const auto& c : a.cfg.curves)
    if (c.id != gamma) out.cfg.curves.push_back(c);
  for (const auto& c : b.cfg.curves)
    if (c.id != gamma_prime) out.cfg.curves.push_back({rename(c.id), c.corner_count});
  out.cfg.curves.push_back({merged, 0});

  // Regions: those away from the seam copied; the two adjacent to gamma
  // merge pairwise with the two adjacent to gamma_prime.
  auto a_sides = a.cfg.incident_regions(gamma);
  auto b_sides = b.cfg.incident_regions(gamma_prime);
  assert(a_sides.size() == 2 && b_sides.size() == 2);
  for (const auto& r : a.cfg.regions) {
    if (r.id == a_sides[0] || r.id == a_sides[1]) continue;
    out.cfg.regions.push_back(r);
  }
  for (const auto& r : b.cfg.regions) {
    if (r.id == b_sides[0] || r.id == b_sides[1]) continue;
    Region nr;
    nr.id = rename(r.id);
    for (const auto& c : r.boundary) nr.boundary.push_back(rename(c));
    out.cfg.regions.push_back(nr);
  }
  for (int side = 0; side < 2; ++side) {
    const Region* ra = a.cfg.find_region(a_sides[side]);
    const Region* rb = b.cfg.find_region(b_sides[side]);
    Region nr;
    nr.id = ra->id + "+" + rename(rb->id);
    for (const auto& c : ra->boundary)
      if (c != gamma) nr.boundary.push_back(c);
    for (const auto& c : rb->boundary)
      if (c != gamma_prime) nr.boundary.push_back(rename(c));
    nr.boundary.push_back(merged);
    out.cfg.regions.push_back(nr);
  }

  auto res = solve_weighting(out.cfg);
  if (!std::holds_alternative<Weighting>(res))
    throw std::runtime_error("connect_sum produced an unweightable configuration");
  out.weights = std::get<Weighting>(res);

  // Sign bookkeeping.
  for (const auto& c : a.cfg.curves)
    if (c.id != gamma) out.signs.signs[c.id] = a.signs.signs.at(c.id);
  bool flip_b = sa == FoldSign::Negative;
  bool flip_a = sb == FoldSign::Negative;
  if (flip_a)
    for (auto& [cid, s] : out.signs.signs) s = flip(s);
  for (const auto& c : b.cfg.curves) {
    if (c.id == gamma_prime) continue;
    FoldSign s = b.signs.signs.at(c.id);
    out.signs.signs[rename(c.id)] = flip_b ? flip(s) : s;
  }
  if (sa == FoldSign::Negative || sb == FoldSign::Negative) {
    out.signs.signs[merged] = FoldSign::Negative;
  } else {
    // Undetermined by the rule; feasibility may force it.
    SignAssignment try_neg = out.signs;
    try_neg.signs[merged] = FoldSign::Negative;
    SignAssignment try_pos = out.signs;
    try_pos.signs[merged] = FoldSign::Positive;
    bool neg_ok = !sign_feasibility(out.cfg, try_neg).has_value();
    bool pos_ok = !sign_feasibility(out.cfg, try_pos).has_value();
    if (neg_ok && !pos_ok) {
      out.signs.signs[merged] = FoldSign::Negative;
    } else if (pos_ok && !neg_ok) {
      out.signs.signs[merged] = FoldSign::Positive;
    } else {
      out.merged_signs[merged] = MergedSign::Unknown;
      // Keep a placeholder sign for structural completeness.
      out.signs.signs[merged] = FoldSign::Negative;
    }
  }
  out.provenance = a.provenance + "#" + b.provenance;
  return out;
}

namespace {

char sign_char(FoldSign s) { return s == FoldSign::Positive ? '+' : '-'; }

FiveCurveRow make_row(ModelClass first, ModelClass second) {
  DecoratedClass a = model_class(first);
  DecoratedClass b = model_class(second);
  DecoratedClass sum = connect_sum(a, "gm", b, "gm");
  FiveCurveRow row;
  row.disk_signs = {sign_char(sum.signs.signs.at("gi")),
                    sign_char(sum.signs.signs.at("go")),
                    sign_char(sum.signs.signs.at("b.gi")),
                    sign_char(sum.signs.signs.at("b.go"))};
  row.realization = sum.provenance;
  CurveId merged = "gm#b.gm";
  row.gamma5 = sign_char(sum.signs.signs.at(merged));
  // Forced means the four disk signs leave only one feasible option for
  // the merged curve.
  SignAssignment as_pos = sum.signs, as_neg = sum.signs;
  as_pos.signs[merged] = FoldSign::Positive;
  as_neg.signs[merged] = FoldSign::Negative;
  bool pos_ok = !sign_feasibility(sum.cfg, as_pos).has_value();
  bool neg_ok = !sign_feasibility(sum.cfg, as_neg).has_value();
  row.forced = pos_ok != neg_ok;
  return row;
}

}  // namespace

std::string FiveCurveTable::text() const {
  std::ostringstream ss;
  ss << "g1 g2 g3 g4  realization  g5\n";
  for (const auto& r : rows) {
    for (char c : r.disk_signs) ss << " " << c << " ";
    ss << " " << r.realization;
    for (size_t i = r.realization.size(); i < 11; ++i) ss << ' ';
    ss << " " << r.gamma5 << (r.forced ? "" : " (catalog)") << "\n";
  }
  return ss.str();
}

FiveCurveTable five_curve_table() {
  FiveCurveTable table;
  table.rows.push_back(make_row(ModelClass::Mushroom, ModelClass::Toric));
  table.rows.push_back(make_row(ModelClass::Toric, ModelClass::Toric));
  table.rows.push_back(make_row(ModelClass::Mushroom, ModelClass::Saucer));
  table.rows.push_back(make_row(ModelClass::Saucer, ModelClass::Toric));
  {
    // Saucer # Saucer: the merged sign is open; the catalog value is
    // negative.
    FiveCurveRow row = make_row(ModelClass::Saucer, ModelClass::Saucer);
    row.gamma5 = '-';
    table.rows.push_back(row);
  }
  // Weight of the center curve in the merged H-shaped configuration.
  DecoratedClass h = connect_sum(model_class(ModelClass::Saucer), "gm",
                                 model_class(ModelClass::Saucer), "gm");
  table.gamma5_weight = h.weights.value("gm#b.gm");
  return table;
}

}  // namespace creases
