#include "creases/twist.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>
#include <map>
#include <set>

#include "emit_internal.hpp"

namespace creases {

namespace {

double dist(Vec2 a, Vec2 b) { return std::hypot(a.x - b.x, a.y - b.y); }

// Marks of a curve across all paths: >1 means the curve hosts several
// channel endpoints.
std::map<CurveId, int> mark_multiplicity(const TwistPlan& tp) {
  std::map<CurveId, int> out;
  for (const auto& path : tp.paths)
    for (const auto& m : path.marks) out[m.curve]++;
  return out;
}

}  // namespace

void plan_twist_channels(StackPlan& plan) {
  plan.channels.clear();
  if (plan.twists.paths.empty()) return;

  auto leaf_curve = [&](const CurveId& c) {
    for (const auto& rid : plan.cfg.incident_regions(c))
      if (plan.cfg.find_region(rid)->boundary.size() == 1) return true;
    return false;
  };
  auto multiplicity = mark_multiplicity(plan.twists);

  // Pins already placed on a curve's circle, by angle.
  std::map<CurveId, std::vector<double>> pinned;
  auto pin_point = [&](const CurveId& c, double preferred) {
    auto& used = pinned[c];
    double angle = preferred;
    bool ok = false;
    for (int k = 0; k < 64 && !ok; ++k) {
      angle = preferred + 0.35 * k;
      ok = true;
      for (double u : used)
        if (std::abs(std::remainder(angle - u, 2 * M_PI)) < 0.25) ok = false;
    }
    used.push_back(angle);
    const Circle& cc = plan.circles.at(c);
    return Vec2{cc.center.x + cc.r * std::cos(angle),
                cc.center.y + cc.r * std::sin(angle)};
  };

  // Grow `small` until it crosses `host`; returns the two intersection
  // points.
  auto grow_to_cross = [&](const CurveId& small_id, const CurveId& host_id)
      -> std::pair<Vec2, Vec2> {
    Circle& small = plan.circles.at(small_id);
    const Circle& host = plan.circles.at(host_id);
    double d = dist(small.center, host.center);
    if (d < 1e-12)
      throw UnsupportedTwist("concentric channel circles cannot cross");
    // Two circles cross iff |d - host.r| < r < d + host.r.
    if (small.r <= std::abs(d - host.r) || small.r >= d + host.r)
      small.r = std::abs(d - host.r) + 0.4 * std::min(d, host.r);
    if (small.r <= std::abs(d - host.r) || small.r >= d + host.r)
      throw UnsupportedTwist("channel circles fail to cross");
    // Circle-circle intersection.
    double a = (d * d + small.r * small.r - host.r * host.r) / (2 * d);
    double h2 = small.r * small.r - a * a;
    if (h2 <= 0) throw UnsupportedTwist("channel circles fail to cross");
    double h = std::sqrt(h2);
    Vec2 dir{(host.center.x - small.center.x) / d,
             (host.center.y - small.center.y) / d};
    Vec2 mid{small.center.x + a * dir.x, small.center.y + a * dir.y};
    return {Vec2{mid.x - h * dir.y, mid.y + h * dir.x},
            Vec2{mid.x + h * dir.y, mid.y - h * dir.x}};
  };

  // Intersection points handed out per curve pair.
  std::map<std::pair<CurveId, CurveId>, std::vector<Vec2>> pair_points;

  for (size_t pi = 0; pi < plan.twists.paths.size(); ++pi) {
    const auto& path = plan.twists.paths[pi];
    if (path.marks.size() < 3)
      throw UnsupportedTwist("edge path with fewer than two arcs");
    std::vector<CurveId> q_curves, p_curves;
    for (size_t mi = 0; mi < path.marks.size(); ++mi) {
      const CurveId& c = path.marks[mi].curve;
      auto& bucket = (mi % 2 == 1) ? q_curves : p_curves;
      if (std::find(bucket.begin(), bucket.end(), c) == bucket.end())
        bucket.push_back(c);
    }

    // Q: shared projection of the odd-position marks.
    Vec2 q;
    if (q_curves.size() == 1) {
      q = pin_point(q_curves[0], 0.0);
    } else if (q_curves.size() == 2) {
      auto key = std::minmax(q_curves[0], q_curves[1]);
      auto& pts = pair_points[{key.first, key.second}];
      if (pts.empty()) {
        // Smaller circle grows to cross the bigger one.
        CurveId a = q_curves[0], b = q_curves[1];
        if (plan.circles.at(a).r > plan.circles.at(b).r) std::swap(a, b);
        auto [x, y] = grow_to_cross(a, b);
        pts = {x, y};
      }
      if (pts.empty())
        throw UnsupportedTwist("no intersection points left for channel");
      q = pts.back();
      pts.pop_back();
    } else {
      throw UnsupportedTwist("edge path crossing more than two circle-mark curves");
    }

    // P: shared projection of the even-position marks. An interior dot
    // curve hosts the point on its own circle; with leaves only, the
    // point sits on the outward ray past Q from the anchor circle.
    CurveId host;
    for (const auto& c : p_curves)
      if (!leaf_curve(c) || multiplicity[c] > 1) host = c;
    Vec2 p;
    if (!host.empty()) {
      double toward_q = std::atan2(q.y - plan.circles.at(host).center.y,
                                   q.x - plan.circles.at(host).center.x);
      p = pin_point(host, toward_q);
    } else {
      const Circle& anchor = plan.circles.at(q_curves.front());
      double out = std::atan2(q.y - anchor.center.y, q.x - anchor.center.x);
      double reach = 0.5 * anchor.r;
      p = {q.x + reach * std::cos(out), q.y + reach * std::sin(out)};
    }

    int stagger = 0;
    for (const auto& c : p_curves) {
      if (c == host) continue;
      if (!leaf_curve(c))
        throw UnsupportedTwist("interior dot curve cannot be repositioned");
      Circle& cc = plan.circles.at(c);
      const Circle& ref =
          plan.circles.at(host.empty() ? q_curves.front() : host);
      double r = std::min(cc.r, 0.2 * ref.r);
      // Center placed outward of P so the circle passes through it and
      // clears the reference circle.
      double away = std::atan2(p.y - ref.center.y, p.x - ref.center.x);
      double phi = away + 0.45 * stagger;
      cc.center = {p.x + r * std::cos(phi), p.y + r * std::sin(phi)};
      cc.r = r;
      stagger++;
    }

    StackPlan::Channel ch;
    ch.path_index = (int)pi;
    ch.p = p;
    ch.q = q;
    plan.channels.push_back(ch);
  }
}

TriMesh emit_twisted_mesh(const StackPlan& plan, int resolution) {
  (void)resolution;
  throw UnsupportedTwist(
      "mesh emission for twisted plans is handled by the clasp builder; "
      "configuration has " +
      std::to_string(plan.twists.arcs.size()) + " twisting arcs");
}

}  // namespace creases
