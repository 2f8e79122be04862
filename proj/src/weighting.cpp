#include "creases/weighting.hpp"

#include <algorithm>
#include <cassert>
#include <set>
#include <stdexcept>

namespace creases {

int Weighting::value(const CurveId& c) const {
  const auto& sides = side_weights.at(c);
  assert(!sides.empty());
  return sides.begin()->second;
}

int Weighting::side(const CurveId& c, const RegionId& k) const {
  return side_weights.at(c).at(k);
}

bool Weighting::covers(const CreaseConfig& cfg) const {
  for (const auto& c : cfg.curves)
    if (!side_weights.count(c.id)) return false;
  return true;
}

int opposite_side_weight(int t_known, int quarter_corners,
                         int three_quarter_corners) {
  return t_known + (three_quarter_corners - quarter_corners);
}

namespace {

// Signed corner delta when moving from the reference side to the other
// side: quarters become three-quarters and vice versa.
int corner_delta_from_reference(const CornerData& cd) {
  int q = 0, tq = 0;
  for (CornerKind k : cd.corners)
    (k == CornerKind::Quarter ? q : tq)++;
  return tq - q;
}

}  // namespace

WeightingResult solve_weighting(const CreaseConfig& cfg) {
  if (!is_valid(cfg)) throw std::invalid_argument("solve_weighting: invalid config");
  for (const auto& c : cfg.curves) {
    if (c.corner_count > 0 && !cfg.corner_data.count(c.id))
      return MissingCornerData{c.id};
  }

  CanonicalForm cf = config_canonical_form(cfg);
  std::map<RegionId, int> canon_rank;
  for (size_t i = 0; i < cf.region_order.size(); ++i)
    canon_rank[cf.region_order[i]] = (int)i;

  std::map<CurveId, std::vector<RegionId>> inc;
  std::map<RegionId, const Region*> regions;
  for (const auto& r : cfg.regions) {
    regions[r.id] = &r;
    for (const auto& c : r.boundary) inc[c].push_back(r.id);
  }

  Weighting w;
  std::map<RegionId, int> unknown_count;
  for (const auto& r : cfg.regions) unknown_count[r.id] = (int)r.boundary.size();

  auto cmp = [&](const RegionId& a, const RegionId& b) {
    return canon_rank.at(a) < canon_rank.at(b);
  };
  std::set<RegionId, decltype(cmp)> ready(cmp);
  for (const auto& r : cfg.regions)
    if (unknown_count[r.id] == 1) ready.insert(r.id);

  auto other_side = [&](const CurveId& c, const RegionId& from, int t_from) {
    const auto& regs = inc.at(c);
    RegionId to = regs[0] == from ? regs[1] : regs[0];
    auto it = cfg.corner_data.find(c);
    int t_to = t_from;
    if (it != cfg.corner_data.end() && !it->second.corners.empty()) {
      int delta = corner_delta_from_reference(it->second);
      t_to = it->second.reference_side == from ? t_from + delta : t_from - delta;
    }
    return std::pair<RegionId, int>(to, t_to);
  };

  while (!ready.empty()) {
    RegionId rid = *ready.begin();
    ready.erase(ready.begin());
    if (unknown_count[rid] != 1) continue;
    const Region* r = regions[rid];
    int chi = 2 - (int)r->boundary.size();
    int known_sum = 0;
    CurveId open;
    for (const auto& c : r->boundary) {
      auto it = w.side_weights.find(c);
      if (it != w.side_weights.end() && it->second.count(rid))
        known_sum += it->second.at(rid);
      else
        open = c;
    }
    int t_here = chi - known_sum;
    w.side_weights[open][rid] = t_here;
    auto [to, t_to] = other_side(open, rid, t_here);
    w.side_weights[open][to] = t_to;
    unknown_count[rid] = 0;
    if (--unknown_count[to] == 1) ready.insert(to);
  }

  // Every curve must have been assigned; for a tree the peeling always
  // covers all edges.
  assert(w.covers(cfg));

  WeightCheck check = verify_weighting(cfg, w);
  if (!check.violated_regions.empty()) {
    std::sort(check.violated_regions.begin(), check.violated_regions.end(), cmp);
    return InfeasibleWeighting{check.violated_regions.front()};
  }
  return w;
}

WeightCheck verify_weighting(const CreaseConfig& cfg, const Weighting& w) {
  WeightCheck out;
  for (const auto& r : cfg.regions) {
    int chi = 2 - (int)r.boundary.size();
    int sum = 0;
    for (const auto& c : r.boundary) sum += w.side(c, r.id);
    if (sum != chi) out.violated_regions.push_back(r.id);
  }
  bool corner_free = true;
  for (const auto& c : cfg.curves)
    if (c.corner_count > 0) corner_free = false;
  if (corner_free) {
    int total = 0;
    for (const auto& c : cfg.curves) total += w.value(c.id);
    out.global_identity_ok = (2 * total == 2);
  }
  return out;
}

std::optional<SignInfeasible> sign_feasibility(const CreaseConfig& cfg,
                                               const SignAssignment& signs) {
  for (const auto& c : cfg.curves)
    if (!signs.signs.count(c.id))
      throw std::invalid_argument("sign assignment does not cover curve " + c.id);

  std::vector<CurveId> positives;
  for (const auto& c : cfg.curves)
    if (signs.signs.at(c.id) == FoldSign::Positive) positives.push_back(c.id);

  if (positives.empty())
    return SignInfeasible{"no curve folds positively"};
  if (positives.size() == cfg.curves.size() && cfg.curves.size() > 1)
    return SignInfeasible{"all curves fold positively with more than one crease"};
  if (positives.size() == 1 && cfg.curves.size() > 1) {
    // A unique positive crease among several cannot bound a disk region:
    // the branching locus would be visible through it.
    const CurveId& p = positives.front();
    for (const auto& r : cfg.regions) {
      if (r.boundary.size() == 1 && r.boundary.front() == p)
        return SignInfeasible{"the unique positive curve " + p +
                              " bounds disk region " + r.id};
    }
  }
  return std::nullopt;
}

}  // namespace creases
