#include "creases/emit.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>
#include <set>
#include <stdexcept>

#include "creases/twist.hpp"
#include "emit_internal.hpp"

namespace creases {
namespace emitdetail {

namespace {

double cross2(Vec2 o, Vec2 a, Vec2 b) {
  return (a.x - o.x) * (b.y - o.y) - (a.y - o.y) * (b.x - o.x);
}

bool point_in_triangle(Vec2 p, Vec2 a, Vec2 b, Vec2 c, double eps) {
  double d1 = cross2(a, b, p);
  double d2 = cross2(b, c, p);
  double d3 = cross2(c, a, p);
  bool neg = d1 < -eps || d2 < -eps || d3 < -eps;
  bool pos = d1 > eps || d2 > eps || d3 > eps;
  return !(neg && pos);
}

bool same_point(Vec2 a, Vec2 b, double eps) {
  return std::abs(a.x - b.x) <= eps && std::abs(a.y - b.y) <= eps;
}

}  // namespace

std::vector<std::array<int, 3>> triangulate_with_holes(
    const std::vector<Vec2>& pts, const std::vector<int>& outer,
    const std::vector<std::vector<int>>& holes_in) {
  double scale = 0;
  for (int i : outer)
    scale = std::max({scale, std::abs(pts[i].x), std::abs(pts[i].y)});
  double eps = scale * 1e-12;

  std::vector<int> poly = outer;
  std::vector<std::vector<int>> holes = holes_in;
  // Splice holes by descending max-x of their rightmost vertex.
  std::sort(holes.begin(), holes.end(),
            [&](const std::vector<int>& a, const std::vector<int>& b) {
              auto mx = [&](const std::vector<int>& h) {
                double m = -1e300;
                for (int i : h) m = std::max(m, pts[i].x);
                return m;
              };
              return mx(a) > mx(b);
            });

  for (const auto& hole : holes) {
    // Rightmost hole vertex.
    size_t mi = 0;
    for (size_t i = 1; i < hole.size(); ++i)
      if (pts[hole[i]].x > pts[hole[mi]].x) mi = i;
    Vec2 M = pts[hole[mi]];

    // Closest intersection of the +x ray from M with polygon edges.
    double best_ix = 1e300;
    size_t best_edge = SIZE_MAX;
    for (size_t i = 0; i < poly.size(); ++i) {
      Vec2 a = pts[poly[i]];
      Vec2 b = pts[poly[(i + 1) % poly.size()]];
      if ((a.y > M.y) == (b.y > M.y)) continue;
      double t = (M.y - a.y) / (b.y - a.y);
      double ix = a.x + t * (b.x - a.x);
      if (ix >= M.x - eps && ix < best_ix) {
        best_ix = ix;
        best_edge = i;
      }
    }
    if (best_edge == SIZE_MAX)
      throw std::runtime_error("hole bridge: no visible edge");

    // Candidate bridge vertex: endpoint of the hit edge with larger x; any
    // reflex vertex inside triangle (M, I, P) closer in angle wins instead.
    size_t pi = best_edge;
    if (pts[poly[(best_edge + 1) % poly.size()]].x > pts[poly[best_edge]].x)
      pi = (best_edge + 1) % poly.size();
    Vec2 I{best_ix, M.y};
    Vec2 P = pts[poly[pi]];
    double best_metric = 1e300;
    for (size_t i = 0; i < poly.size(); ++i) {
      Vec2 v = pts[poly[i]];
      if (v.x <= M.x + eps) continue;
      if (same_point(v, P, eps)) continue;
      size_t prev = (i + poly.size() - 1) % poly.size();
      size_t next = (i + 1) % poly.size();
      bool reflex = cross2(pts[poly[prev]], v, pts[poly[next]]) < 0;
      if (!reflex) continue;
      if (!point_in_triangle(v, M, I, P, eps)) continue;
      double dx = v.x - M.x, dy = v.y - M.y;
      double metric = std::abs(dy) / std::max(dx, eps);
      if (metric < best_metric) {
        best_metric = metric;
        pi = i;
        P = v;
      }
    }

    // Splice: ... P, M, hole(M..), M, P, ...
    std::vector<int> merged;
    for (size_t i = 0; i <= pi; ++i) merged.push_back(poly[i]);
    for (size_t i = 0; i <= hole.size(); ++i)
      merged.push_back(hole[(mi + i) % hole.size()]);
    merged.push_back(poly[pi]);
    for (size_t i = pi + 1; i < poly.size(); ++i) merged.push_back(poly[i]);
    poly = std::move(merged);
  }

  // Ear clipping.
  std::vector<std::array<int, 3>> out;
  std::vector<int> L = poly;
  int guard = 0;
  while (L.size() > 3) {
    bool clipped = false;
    size_t n = L.size();
    for (size_t i = 0; i < n; ++i) {
      int ia = L[(i + n - 1) % n], ib = L[i], ic = L[(i + 1) % n];
      Vec2 a = pts[ia], b = pts[ib], c = pts[ic];
      if (cross2(a, b, c) <= eps) continue;  // reflex or degenerate
      bool ear = true;
      for (size_t j = 0; j < n; ++j) {
        int iv = L[j];
        if (iv == ia || iv == ib || iv == ic) continue;
        Vec2 v = pts[iv];
        if (same_point(v, a, eps) || same_point(v, b, eps) ||
            same_point(v, c, eps))
          continue;
        if (point_in_triangle(v, a, b, c, eps)) {
          ear = false;
          break;
        }
      }
      if (!ear) continue;
      out.push_back({ia, ib, ic});
      L.erase(L.begin() + (long)i);
      clipped = true;
      break;
    }
    if (!clipped) {
      // Numerical fallback: clip the most convex corner regardless.
      size_t best = 0;
      double best_cross = -1e300;
      for (size_t i = 0; i < L.size(); ++i) {
        size_t n2 = L.size();
        Vec2 a = pts[L[(i + n2 - 1) % n2]], b = pts[L[i]],
             c = pts[L[(i + 1) % n2]];
        double cr = cross2(a, b, c);
        if (cr > best_cross) {
          best_cross = cr;
          best = i;
        }
      }
      size_t n2 = L.size();
      out.push_back({L[(best + n2 - 1) % n2], L[best], L[(best + 1) % n2]});
      L.erase(L.begin() + (long)best);
      if (++guard > 10000) throw std::runtime_error("ear clipping stalled");
    }
  }
  if (L.size() == 3) out.push_back({L[0], L[1], L[2]});
  return out;
}

Builder::Builder(const StackPlan& p, int res) : plan(p), resolution(res) {
  // Level-to-z: gaps sized by the smallest circle whose fold spans the gap.
  int max_level = 0;
  for (const auto& [rid, h] : plan.layout.height)
    max_level = std::max(max_level, h);
  double min_r = 1e300;
  for (const auto& [cid, c] : plan.circles) min_r = std::min(min_r, c.r);
  if (plan.circles.empty()) min_r = 1.0;
  std::vector<double> gap(std::max(max_level, 1), 0.5 * min_r);
  for (int g = 0; g < (int)gap.size(); ++g) {
    double m = 1e300;
    for (const auto& span : plan.layout.spans)
      if (span.lo <= g && span.hi >= g + 1)
        m = std::min(m, plan.circles.at(span.id).r);
    if (m < 1e300) gap[g] = 0.5 * m;
  }
  level_z.resize(max_level + 1, 0.0);
  for (int l = 1; l <= max_level; ++l) level_z[l] = level_z[l - 1] + gap[l - 1];
}

double Builder::min_level_gap(int level) const {
  double g = 1e300;
  if (level > 0) g = std::min(g, level_z[level] - level_z[level - 1]);
  if (level + 1 < (int)level_z.size())
    g = std::min(g, level_z[level + 1] - level_z[level]);
  if (g == 1e300) g = 1.0;
  return g;
}

const std::vector<int>& Builder::ring(const CurveId& curve,
                                      const std::string& token, double radius,
                                      double z) {
  auto key = std::make_pair(curve, token);
  auto it = rings.find(key);
  if (it != rings.end()) return it->second;
  const Circle& c = plan.circles.at(curve);
  std::vector<int> ids;
  for (int j = 0; j < resolution; ++j) {
    double th = 2.0 * M_PI * j / resolution;
    ids.push_back(mesh.add_vertex(
        {c.center.x + radius * std::cos(th), c.center.y + radius * std::sin(th), z}));
  }
  return rings.emplace(key, std::move(ids)).first->second;
}

void Builder::add_collar(const CurveId& curve, double rim_radius, bool outward,
                         const std::string& token_a, double z_a,
                         const std::string& token_b, double z_b) {
  const Circle& c = plan.circles.at(curve);
  double b = plan.collar_width.at(curve);
  double crease_r = outward ? rim_radius + b : rim_radius - b;
  // theta from +pi/2 (side a) to -pi/2 (side b); crease ring at theta 0.
  const int K = 7;
  std::vector<std::vector<int>> bands;
  bands.push_back(ring(curve, token_a, rim_radius, z_a));
  for (int i = 1; i < K - 1; ++i) {
    double th = M_PI / 2 - M_PI * i / (K - 1);
    double r = crease_r - (outward ? b : -b) * (1 - std::cos(th));
    double z = 0.5 * (z_a + z_b) + 0.5 * (z_a - z_b) * std::sin(th);
    std::vector<int> ids;
    for (int j = 0; j < resolution; ++j) {
      double a = 2.0 * M_PI * j / resolution;
      ids.push_back(mesh.add_vertex(
          {c.center.x + r * std::cos(a), c.center.y + r * std::sin(a), z}));
    }
    bands.push_back(std::move(ids));
  }
  bands.push_back(ring(curve, token_b, rim_radius, z_b));
  for (size_t i = 0; i + 1 < bands.size(); ++i)
    for (int j = 0; j < resolution; ++j) {
      int jn = (j + 1) % resolution;
      mesh.add_quad(bands[i][j], bands[i][jn], bands[i + 1][jn], bands[i + 1][j]);
    }
}

void Builder::add_cap(const CurveId& curve, const std::string& rim_token,
                      double rim_radius, double rim_z, int direction,
                      double height) {
  const Circle& c = plan.circles.at(curve);
  int nr = std::max(3, resolution / 8);
  std::vector<std::vector<int>> bands;
  bands.push_back(ring(curve, rim_token, rim_radius, rim_z));
  for (int i = 1; i < nr; ++i) {
    double r = rim_radius * (1.0 - (double)i / nr);
    double z = rim_z + direction * height * (1.0 - (r / rim_radius) * (r / rim_radius));
    std::vector<int> ids;
    for (int j = 0; j < resolution; ++j) {
      double a = 2.0 * M_PI * j / resolution;
      ids.push_back(mesh.add_vertex(
          {c.center.x + r * std::cos(a), c.center.y + r * std::sin(a), z}));
    }
    bands.push_back(std::move(ids));
  }
  int center = mesh.add_vertex({c.center.x, c.center.y, rim_z + direction * height});
  for (size_t i = 0; i + 1 < bands.size(); ++i)
    for (int j = 0; j < resolution; ++j) {
      int jn = (j + 1) % resolution;
      mesh.add_quad(bands[i][j], bands[i][jn], bands[i + 1][jn], bands[i + 1][j]);
    }
  const auto& last = bands.back();
  for (int j = 0; j < resolution; ++j)
    mesh.add_triangle(last[j], last[(j + 1) % resolution], center);
}

void Builder::add_slab(const StackPlan::RegionPlan& rp) {
  double z = z_of_level(rp.level);
  std::string token = "rim@" + std::to_string(rp.level);
  double b_out = plan.collar_width.at(rp.outer);
  const auto& outer_ring =
      ring(rp.outer, token, plan.circles.at(rp.outer).r - b_out, z);
  std::vector<std::vector<int>> hole_rings;
  for (const auto& h : rp.holes) {
    double b = plan.collar_width.at(h);
    hole_rings.push_back(ring(h, token, plan.circles.at(h).r + b, z));
  }

  // Project to 2D and triangulate.
  std::vector<Vec2> pts(mesh.vertices.size());
  auto sync = [&]() {
    pts.resize(mesh.vertices.size());
    for (size_t i = 0; i < mesh.vertices.size(); ++i)
      pts[i] = {mesh.vertices[i].x, mesh.vertices[i].y};
  };
  sync();
  std::vector<int> outer = outer_ring;  // CCW by construction
  std::vector<std::vector<int>> holes;
  for (auto& hr : hole_rings) {
    std::vector<int> cw(hr.rbegin(), hr.rend());
    holes.push_back(cw);
  }
  for (const auto& t : triangulate_with_holes(pts, outer, holes))
    mesh.add_triangle(t[0], t[1], t[2]);
}

void Builder::finalize() {
  if (!make_consistent(mesh))
    throw std::runtime_error("emitted mesh is not orientable/manifold");
  orient_outward(mesh);
}

}  // namespace emitdetail

namespace {

using emitdetail::Builder;

void emit_untwisted(Builder& b) {
  const StackPlan& plan = b.plan;
  const CreaseConfig& cfg = plan.cfg;

  if (cfg.curves.size() == 1) {
    // Round-sphere case: one collar and two caps.
    const CurveId& c = cfg.curves.front().id;
    double rho = plan.circles.at(c).r;
    double bw = plan.collar_width.at(c);
    double rim = rho - bw;
    b.add_collar(c, rim, /*outward=*/true, "capA", 0.5 * rho, "capB", -0.5 * rho);
    b.add_cap(c, "capA", rim, 0.5 * rho, +1, 0.6 * rho);
    b.add_cap(c, "capB", rim, -0.5 * rho, -1, 0.6 * rho);
    b.finalize();
    return;
  }

  auto level_of = [&](const RegionId& r) { return plan.layout.height.at(r); };

  // Collars: one per curve, between its two side levels.
  for (const auto& curve : cfg.curves) {
    auto regs = cfg.incident_regions(curve.id);
    bool marked = plan.labeling.marked.count(curve.id) > 0;
    double rho = plan.circles.at(curve.id).r;
    double bw = plan.collar_width.at(curve.id);
    double rim = marked ? rho - bw : rho + bw;
    int la = level_of(regs[0]);
    int lb = level_of(regs[1]);
    b.add_collar(curve.id, rim, marked, "rim@" + std::to_string(la),
                 b.z_of_level(la), "rim@" + std::to_string(lb),
                 b.z_of_level(lb));
  }

  // Slabs.
  for (const auto& rp : plan.regions) b.add_slab(rp);

  // Caps on leaf curves.
  for (const auto& [rid, level] : plan.cap_level) {
    const CurveId& c = cfg.find_region(rid)->boundary.front();
    bool marked = plan.labeling.marked.count(c) > 0;
    double rho = plan.circles.at(c).r;
    double bw = plan.collar_width.at(c);
    double rim = marked ? rho - bw : rho + bw;
    int dir = plan.cap_direction.at(c);
    double h = std::min(0.35 * b.min_level_gap(level), 1.2 * rim);
    b.add_cap(c, "rim@" + std::to_string(level), rim, b.z_of_level(level), dir, h);
  }

  b.finalize();
}

}  // namespace

TriMesh emit_mesh(const StackPlan& plan, int resolution) {
  if (resolution < 16)
    throw ResolutionTooLow("resolution must be at least 16 segments per circle");
  if (!plan.twist_free()) return emit_twisted_mesh(plan, resolution);
  Builder b(plan, resolution);
  emit_untwisted(b);
  return std::move(b.mesh);
}

TriMesh realize_config(const CreaseConfig& cfg, int resolution) {
  return emit_mesh(plan_realization(cfg), resolution);
}

}  // namespace creases
