#include "creases/plan.hpp"

#include <algorithm>
#include <optional>
#include <cassert>
#include <cmath>
#include <functional>
#include <map>
#include <set>

#include "creases/twist.hpp"

namespace creases {

Basis derive_basis(const TurningWeightSet& w, int square_index) {
  int n = (int)w.t.size() - 1;
  if (n < 0 || square_index < 0 || square_index > n)
    throw std::invalid_argument("derive_basis: bad square index");
  int sum = 0;
  for (int t : w.t) {
    if (t % 2 == 0) throw EvenWeight("turning weight entries must be odd");
    sum += t;
  }
  if (sum != 1 - n)
    throw BadSum("turning weights must sum to 1 - n");
  Basis b;
  for (int i = 0; i <= n; ++i) {
    int t = w.t[i];
    b.k.push_back(i == square_index ? (t - 1) / 2 : (t + 1) / 2);
  }
  int ksum = 0;
  for (int k : b.k) ksum += k;
  assert(ksum == 0);
  return b;
}

int MarkedRegion::mark_count(const CurveId& c) const {
  for (const auto& m : marks)
    if (m.curve == c) return m.count;
  return 0;
}

MarkedRegion mark_region(const std::vector<std::pair<CurveId, int>>& weights,
                         const CurveId& square_curve, const RegionId& region) {
  MarkedRegion out;
  out.region = region;
  out.square_curve = square_curve;
  for (const auto& [curve, w] : weights) {
    int k = curve == square_curve ? (w - 1) / 2 : (w + 1) / 2;
    if (k == 0) continue;
    MarkedRegion::CurveMarks cm;
    cm.curve = curve;
    cm.kind = k > 0 ? MarkKind::Dot : MarkKind::Circle;
    cm.count = std::abs(k);
    out.marks.push_back(cm);
  }
  return out;
}

Labeling choose_realization_labeling(const Ltg& ltg) {
  bool all_unit = true;
  for (const auto& e : ltg.edges)
    if (std::abs(e.weight) != 1) all_unit = false;
  if (all_unit) {
    // Marking exactly the +1 curves is always consistent here and yields
    // a twist-free plan.
    Labeling l;
    for (const auto& e : ltg.edges)
      if (e.weight == 1) l.marked.insert(e.id);
    if (labeling_valid(ltg, l)) return l;
  }
  if (ltg.edges.size() <= 16) {
    // Exhaustive search for the labeling with the fewest twisting arcs.
    auto arc_cost = [&](const Labeling& l) {
      int cost = 0;
      for (const auto& e : ltg.edges) {
        int k = l.marked.count(e.id) ? (e.weight - 1) / 2 : (e.weight + 1) / 2;
        cost += std::abs(k);
      }
      return cost;
    };
    std::optional<Labeling> best;
    int best_cost = 0;
    for (const auto& l : all_labelings(ltg)) {
      int c = arc_cost(l);
      if (!best || c < best_cost) {
        best = l;
        best_cost = c;
      }
    }
    if (best) return *best;
  }
  return black_square_labeling(ltg);
}

TwistPlan place_twisting_arcs(const CreaseConfig& cfg, const Weighting& w,
                              const Labeling& labeling) {
  TwistPlan out;
  CanonicalForm cf = config_canonical_form(cfg);

  // Marked regions for every chi <= 0 region, canonical order.
  for (const auto& rid : cf.region_order) {
    const Region* r = cfg.find_region(rid);
    if ((int)r->boundary.size() < 2) continue;
    CurveId square;
    for (const auto& c : r->boundary)
      if (labeling.marked.count(c)) square = c;
    assert(!square.empty());
    std::vector<std::pair<CurveId, int>> weights;
    std::vector<CurveId> ordered = r->boundary;
    std::map<CurveId, int> crank;
    for (size_t i = 0; i < cf.curve_order.size(); ++i)
      crank[cf.curve_order[i]] = (int)i;
    std::sort(ordered.begin(), ordered.end(),
              [&](const CurveId& a, const CurveId& b) {
                return crank.at(a) < crank.at(b);
              });
    for (const auto& c : ordered) weights.push_back({c, w.value(c)});
    out.regions.push_back(mark_region(weights, square, rid));
  }

  // Pair circles with dots inside each region, canonical order on both
  // lists; the mark ids are global per curve so the two regions sharing a
  // curve reference the same marks.
  for (const auto& mr : out.regions) {
    std::vector<Mark> dots, circles;
    for (const auto& cm : mr.marks) {
      for (int i = 0; i < cm.count; ++i) {
        Mark m{cm.curve, i};
        (cm.kind == MarkKind::Dot ? dots : circles).push_back(m);
      }
    }
    if (dots.size() != circles.size())
      throw UnbalancedMarks("region " + mr.region + " has " +
                            std::to_string(dots.size()) + " dots and " +
                            std::to_string(circles.size()) + " circles");
    for (size_t i = 0; i < dots.size(); ++i)
      out.arcs.push_back({mr.region, circles[i], dots[i]});
  }

  // Concatenate arcs into edge paths over shared marks.
  std::map<Mark, std::vector<int>> at_mark;
  for (size_t i = 0; i < out.arcs.size(); ++i) {
    at_mark[out.arcs[i].from].push_back((int)i);
    at_mark[out.arcs[i].to].push_back((int)i);
  }
  auto curve_weight = [&](const CurveId& c) { return w.value(c); };
  std::vector<char> used(out.arcs.size(), 0);
  for (const auto& [mark, arcs_here] : at_mark) {
    if (arcs_here.size() != 1) continue;  // interior mark
    int a0 = arcs_here.front();
    if (used[a0]) continue;
    TwistPlan::EdgePath path;
    Mark cur = mark;
    int arc = a0;
    path.marks.push_back(cur);
    while (true) {
      used[arc] = 1;
      const TwistArc& ta = out.arcs[arc];
      Mark nxt = (ta.from == cur) ? ta.to : ta.from;
      path.arcs.push_back(ta);
      path.marks.push_back(nxt);
      cur = nxt;
      const auto& cont = at_mark.at(cur);
      int next_arc = -1;
      for (int ai : cont)
        if (!used[ai]) next_arc = ai;
      if (next_arc < 0) break;
      arc = next_arc;
    }
    // Both path ends must land on weight +1 curves.
    assert(curve_weight(path.marks.front().curve) == 1);
    assert(curve_weight(path.marks.back().curve) == 1);
    out.paths.push_back(std::move(path));
  }
  // Every arc must belong to a path; closed mark cycles would violate the
  // termination property.
  for (char u : used) assert(u);
  return out;
}

namespace {

struct Slot {
  Vec2 center;
  double r;
};

std::vector<Slot> slots_in_disk(Vec2 c, double R, int k) {
  std::vector<Slot> out;
  if (k <= 0) return out;
  double usable = R * 0.8;
  double r = usable / k;
  for (int i = 0; i < k; ++i) {
    double x = c.x - usable + r * (2 * i + 1);
    out.push_back({{x, c.y}, r * 0.9});
  }
  return out;
}

std::vector<Slot> slots_in_annulus(Vec2 c, double r_in, double r_out, int k) {
  std::vector<Slot> out;
  if (k <= 0) return out;
  double mid = 0.5 * (r_in + r_out);
  double radial = 0.5 * (r_out - r_in) * 0.8;
  double angular = (k > 0) ? std::sin(M_PI / std::max(k, 2)) * mid * 0.8 : radial;
  if (k == 1) angular = radial;
  double r = std::min(radial, angular);
  for (int i = 0; i < k; ++i) {
    double th = 2.0 * M_PI * i / k;
    out.push_back({{c.x + mid * std::cos(th), c.y + mid * std::sin(th)}, r});
  }
  return out;
}

}  // namespace

StackPlan build_stack_plan(const CreaseConfig& cfg, const Weighting& w,
                           const Labeling& labeling, const LtgLayout& layout,
                           const TwistPlan& twists) {
  StackPlan plan;
  plan.cfg = cfg;
  plan.weights = w;
  plan.labeling = labeling;
  plan.layout = layout;
  plan.twists = twists;

  CanonicalForm cf = config_canonical_form(cfg);

  auto degree = [&](const RegionId& rid) {
    return (int)cfg.find_region(rid)->boundary.size();
  };
  auto square_of = [&](const RegionId& rid) -> CurveId {
    for (const auto& c : cfg.find_region(rid)->boundary)
      if (labeling.marked.count(c)) return c;
    return {};
  };
  auto other_region = [&](const CurveId& c, const RegionId& from) -> RegionId {
    auto regs = cfg.incident_regions(c);
    return regs[0] == from ? regs[1] : regs[0];
  };

  // Region plans for chi <= 0 regions.
  for (const auto& rid : cf.region_order) {
    if (degree(rid) < 2) continue;
    StackPlan::RegionPlan rp;
    rp.region = rid;
    rp.level = layout.height.at(rid);
    rp.outer = square_of(rid);
    for (const auto& c : cfg.find_region(rid)->boundary)
      if (c != rp.outer) rp.holes.push_back(c);
    plan.regions.push_back(rp);
  }

  // Leaf caps.
  for (const auto& rid : cf.region_order) {
    if (degree(rid) != 1) continue;
    const CurveId& c = cfg.find_region(rid)->boundary.front();
    RegionId host = other_region(c, rid);
    plan.cap_level[rid] = layout.height.at(rid);
    if (degree(host) == 1) {
      // Single-curve configuration: two caps, direction by relative height.
      plan.cap_direction[c] =
          layout.height.at(rid) > layout.height.at(host) ? 1 : -1;
    } else {
      plan.cap_direction[c] =
          layout.height.at(rid) > layout.height.at(host) ? 1 : -1;
    }
  }

  // Circle allocation: tree recursion over regions. Entering a region
  // through a marked curve places it inside that circle; through an
  // unmarked curve it surrounds the circle inside the curve's slot.
  if (cfg.curves.size() == 1) {
    plan.circles[cfg.curves.front().id] = Circle{{0, 0}, 50.0};
  } else {
    RegionId root;
    for (const auto& rid : cf.region_order)
      if (degree(rid) >= 2) {
        root = rid;
        break;
      }
    assert(!root.empty());

    // Allocates everything beyond `entry` (coming from `from_region`).
    std::function<void(const CurveId&, const RegionId&, double)> beyond =
        [&](const CurveId& entry, const RegionId& from, double zone_r) {
          RegionId r = other_region(entry, from);
          if (degree(r) == 1) return;  // cap
          const Circle& ce = plan.circles.at(entry);
          bool entry_marked = labeling.marked.count(entry) > 0;
          if (entry_marked) {
            // r sits inside circle(entry); its other curves are holes.
            std::vector<CurveId> holes;
            for (const auto& c : cfg.find_region(r)->boundary)
              if (c != entry) holes.push_back(c);
            auto slots = slots_in_disk(ce.center, ce.r * 0.8, (int)holes.size());
            for (size_t i = 0; i < holes.size(); ++i) {
              const CurveId& h = holes[i];
              RegionId far = other_region(h, r);
              bool far_leaf = degree(far) == 1;
              double cr = far_leaf ? slots[i].r * 0.7 : slots[i].r * 0.3;
              plan.circles[h] = Circle{slots[i].center, cr};
              beyond(h, r, slots[i].r);
            }
          } else {
            // r surrounds circle(entry); its square goes around it.
            CurveId s = square_of(r);
            double r_s = ce.r + 0.6 * (zone_r * 0.92 - ce.r);
            plan.circles[s] = Circle{ce.center, r_s};
            std::vector<CurveId> holes;
            for (const auto& c : cfg.find_region(r)->boundary)
              if (c != entry && c != s) holes.push_back(c);
            bool s_internal = degree(other_region(s, r)) >= 2;
            RegionId rr = other_region(s, r);
            std::vector<CurveId> far_holes;
            if (s_internal) {
              for (const auto& c : cfg.find_region(rr)->boundary)
                if (c != s) far_holes.push_back(c);
            }
            auto all = holes;
            all.insert(all.end(), far_holes.begin(), far_holes.end());
            auto slots =
                slots_in_annulus(ce.center, ce.r * 1.15, r_s * 0.9, (int)all.size());
            for (size_t i = 0; i < all.size(); ++i) {
              const CurveId& h = all[i];
              RegionId side = i < holes.size() ? r : rr;
              RegionId far = other_region(h, side);
              bool far_leaf = degree(far) == 1;
              double cr = far_leaf ? slots[i].r * 0.7 : slots[i].r * 0.3;
              plan.circles[h] = Circle{slots[i].center, cr};
              beyond(h, side, slots[i].r);
            }
          }
        };

    // Root region: its square circle at the origin; both sides of it when
    // internal.
    CurveId s0 = square_of(root);
    plan.circles[s0] = Circle{{0, 0}, 50.0};
    std::vector<std::pair<CurveId, RegionId>> root_holes;
    for (const auto& c : cfg.find_region(root)->boundary)
      if (c != s0) root_holes.push_back({c, root});
    RegionId across = other_region(s0, root);
    if (degree(across) >= 2) {
      for (const auto& c : cfg.find_region(across)->boundary)
        if (c != s0) root_holes.push_back({c, across});
    }
    auto slots = slots_in_disk({0, 0}, 50.0 * 0.8, (int)root_holes.size());
    for (size_t i = 0; i < root_holes.size(); ++i) {
      const auto& [h, side] = root_holes[i];
      RegionId far = other_region(h, side);
      bool far_leaf = degree(far) == 1;
      double cr = far_leaf ? slots[i].r * 0.7 : slots[i].r * 0.3;
      plan.circles[h] = Circle{slots[i].center, cr};
      beyond(h, side, slots[i].r);
    }
  }

  // Channel geometry for twisted plans (adjusts circles as needed).
  if (!twists.arcs.empty()) plan_twist_channels(plan);

  // Collar widths from pairwise clearances.
  for (const auto& [cid, c] : plan.circles) {
    double clearance = c.r;
    for (const auto& [oid, o] : plan.circles) {
      if (oid == cid) continue;
      double d = std::hypot(c.center.x - o.center.x, c.center.y - o.center.y);
      double gap;
      if (d >= c.r + o.r)
        gap = d - c.r - o.r;  // disjoint
      else if (d + c.r <= o.r)
        gap = o.r - d - c.r;  // c inside o
      else if (d + o.r <= c.r)
        gap = c.r - d - o.r;  // o inside c
      else
        continue;  // intersecting circles: handled by channel geometry
      clearance = std::min(clearance, gap);
    }
    plan.collar_width[cid] = 0.2 * std::min(clearance, c.r);
  }

  // P1: every curve has exactly one circle shared by both incident
  // regions -- structural by construction; assert coverage.
  for (const auto& c : cfg.curves) assert(plan.circles.count(c.id));
  // P2: every arc of a path shares the path's channel segment (asserted
  // inside plan_twist_channels for twisted plans).
  return plan;
}

StackPlan plan_realization(const CreaseConfig& cfg) {
  auto res = solve_weighting(cfg);
  if (!std::holds_alternative<Weighting>(res))
    throw std::invalid_argument("plan_realization: configuration not weightable");
  const Weighting& w = std::get<Weighting>(res);
  Ltg ltg = build_ltg(cfg, w);
  Labeling labeling = choose_realization_labeling(ltg);
  LtgLayout layout = layout_ltg(ltg, labeling);
  TwistPlan twists = place_twisting_arcs(cfg, w, labeling);
  return build_stack_plan(cfg, w, labeling, layout, twists);
}

}  // namespace creases
