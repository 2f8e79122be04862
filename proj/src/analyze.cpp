#include "creases/analyze.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>
#include <map>
#include <set>

#include "creases/mesh_kernels.hpp"

namespace creases {

namespace {

constexpr double kNormalTol = 1e-9;

Vec2 project(const Vec3& v) { return {v.x, v.y}; }

double cross2(Vec2 a, Vec2 b) { return a.x * b.y - a.y * b.x; }

Vec2 centroid2(const TriMesh& m, int f) {
  const auto& t = m.triangles[f];
  Vec2 out{0, 0};
  for (int i = 0; i < 3; ++i) {
    out.x += m.vertices[t[i]].x / 3.0;
    out.y += m.vertices[t[i]].y / 3.0;
  }
  return out;
}

}  // namespace

CreaseExtraction extract_crease(const TriMesh& mesh) {
  auto signs = kernels::normal_z_signs(mesh, kNormalTol);
  for (size_t f = 0; f < signs.size(); ++f)
    if (signs[f] == 0)
      throw DegenerateNormal("face " + std::to_string(f) +
                             " has |normal z| below tolerance");
  MeshAdjacency adj = build_adjacency(mesh);
  auto crease_edges = kernels::crease_edge_scan(mesh, adj, signs);

  CreaseExtraction out;

  // Group crease edges into loops: every crease vertex has exactly two
  // incident crease edges on a generic mesh.
  std::map<int, std::vector<int>> at_vertex;
  for (int e : crease_edges) {
    at_vertex[adj.edges[e].a].push_back(e);
    at_vertex[adj.edges[e].b].push_back(e);
  }
  for (const auto& [v, es] : at_vertex)
    if (es.size() != 2)
      throw std::runtime_error("crease vertex " + std::to_string(v) + " has " +
                               std::to_string(es.size()) + " crease edges");

  std::set<int> unused(crease_edges.begin(), crease_edges.end());
  while (!unused.empty()) {
    int e0 = *unused.begin();
    CreaseLoop loop;
    int v = adj.edges[e0].a;
    int e = e0;
    while (true) {
      unused.erase(e);
      loop.vertices.push_back(v);
      int w = adj.edges[e].a == v ? adj.edges[e].b : adj.edges[e].a;
      const auto& next_edges = at_vertex.at(w);
      int en = next_edges[0] == e ? next_edges[1] : next_edges[0];
      v = w;
      e = en;
      if (v == adj.edges[e0].a) break;
    }

    // Orient with the sheet material on the left: both faces of a crease
    // edge project to the same side, so take the majority side over the
    // loop for robustness.
    double side_sum = 0;
    for (size_t i = 0; i < loop.vertices.size(); ++i) {
      int u = loop.vertices[i];
      int w2 = loop.vertices[(i + 1) % loop.vertices.size()];
      auto k2 = std::minmax(u, w2);
      int e2 = adj.edge_index.at({k2.first, k2.second});
      Vec2 pu = project(mesh.vertices[u]);
      Vec2 pw = project(mesh.vertices[w2]);
      Vec2 d2{pw.x - pu.x, pw.y - pu.y};
      Vec2 m0 = centroid2(mesh, adj.edges[e2].f0);
      Vec2 m1 = centroid2(mesh, adj.edges[e2].f1);
      side_sum += cross2(d2, {m0.x - pu.x, m0.y - pu.y});
      side_sum += cross2(d2, {m1.x - pu.x, m1.y - pu.y});
    }
    if (side_sum < 0) std::reverse(loop.vertices.begin(), loop.vertices.end());
    for (int vid : loop.vertices) loop.projected.push_back(project(mesh.vertices[vid]));
    out.loops.push_back(std::move(loop));
  }

  // Face partition by crease edges.
  std::set<std::pair<int, int>> crease_set;
  for (int e : crease_edges) {
    crease_set.insert({adj.edges[e].f0, adj.edges[e].f1});
    crease_set.insert({adj.edges[e].f1, adj.edges[e].f0});
  }
  out.face_region.assign(mesh.triangles.size(), -1);
  int rc = 0;
  for (size_t seed = 0; seed < mesh.triangles.size(); ++seed) {
    if (out.face_region[seed] >= 0) continue;
    std::vector<int> stack{(int)seed};
    out.face_region[seed] = rc;
    while (!stack.empty()) {
      int f = stack.back();
      stack.pop_back();
      const auto& t = mesh.triangles[f];
      for (int i = 0; i < 3; ++i) {
        auto k = std::minmax(t[i], t[(i + 1) % 3]);
        auto it = adj.edge_index.find({k.first, k.second});
        if (it == adj.edge_index.end()) continue;
        const auto& ed = adj.edges[it->second];
        int g = ed.f0 == f ? ed.f1 : ed.f0;
        if (g < 0 || out.face_region[g] >= 0) continue;
        if (crease_set.count({f, g})) continue;
        out.face_region[g] = rc;
        stack.push_back(g);
      }
    }
    rc++;
  }
  out.region_count = rc;

  // Regions either side of each loop.
  for (auto& loop : out.loops) {
    int a = loop.vertices[0], b = loop.vertices[1];
    auto k = std::minmax(a, b);
    const auto& ed = adj.edges[adj.edge_index.at({k.first, k.second})];
    loop.sign = FoldSign::Positive;  // filled by caller via fold_sign
    out.loop_regions.push_back(
        {out.face_region[ed.f0], out.face_region[ed.f1]});
  }

  // Folding signs.
  for (size_t i = 0; i < out.loops.size(); ++i)
    out.loops[i].sign = fold_sign(mesh, out.loops[i]);
  return out;
}

namespace {

double turn_angle_sum(const std::vector<Vec2>& pts, bool closed) {
  double total = 0;
  size_t n = pts.size();
  size_t m = closed ? n : n - 2;
  for (size_t i = 0; i < m; ++i) {
    Vec2 a = pts[i % n];
    Vec2 b = pts[(i + 1) % n];
    Vec2 c = pts[(i + 2) % n];
    Vec2 u{b.x - a.x, b.y - a.y};
    Vec2 v{c.x - b.x, c.y - b.y};
    double lu = std::hypot(u.x, u.y), lv = std::hypot(v.x, v.y);
    if (lu == 0 || lv == 0) continue;
    double sin_t = cross2(u, v) / (lu * lv);
    double cos_t = (u.x * v.x + u.y * v.y) / (lu * lv);
    if (cos_t < -1.0 + 1e-12 && std::abs(sin_t) < 1e-9)
      throw AntipodalEdges("consecutive projected edges reverse direction");
    total += std::atan2(sin_t, cos_t);
  }
  return total;
}

}  // namespace

int discrete_turning(const std::vector<Vec2>& loop) {
  double total = turn_angle_sum(loop, true) / (2.0 * M_PI);
  double rounded = std::round(total);
  if (std::abs(total - rounded) > 1e-6)
    throw NonIntegerTurning("angle sum " + std::to_string(total) +
                            " is not within 1e-6 of an integer");
  return (int)rounded;
}

double partial_turning(const std::vector<Vec2>& polyline) {
  if (polyline.size() < 3) return 0.0;
  return turn_angle_sum(polyline, false) / (2.0 * M_PI);
}

FoldSign fold_sign(const TriMesh& mesh, const CreaseLoop& loop) {
  MeshAdjacency adj = build_adjacency(mesh);
  size_t n = loop.vertices.size();
  // Try a few edges and probe offsets until the sheets separate cleanly.
  for (size_t attempt = 0; attempt < n; ++attempt) {
    size_t i = (attempt * 7) % n;
    int a = loop.vertices[i];
    int b = loop.vertices[(i + 1) % n];
    auto k = std::minmax(a, b);
    auto it = adj.edge_index.find({k.first, k.second});
    if (it == adj.edge_index.end()) continue;
    const auto& ed = adj.edges[it->second];
    Vec2 pa = project(mesh.vertices[a]);
    Vec2 pb = project(mesh.vertices[b]);
    Vec2 mid{0.5 * (pa.x + pb.x), 0.5 * (pa.y + pb.y)};
    Vec2 dir{pb.x - pa.x, pb.y - pa.y};
    double len = std::hypot(dir.x, dir.y);
    if (len == 0) continue;
    // Material side: both face centroids project to it.
    Vec2 c0 = centroid2(mesh, ed.f0);
    double side = cross2(dir, {c0.x - mid.x, c0.y - mid.y}) > 0 ? 1.0 : -1.0;
    Vec2 normal{-dir.y / len * side, dir.x / len * side};
    for (double frac : {0.5, 0.25, 0.1, 0.05}) {
      Vec2 p{mid.x + normal.x * frac * len, mid.y + normal.y * frac * len};
      // Heights of the two sheets at p from the adjacent face planes.
      auto plane_z = [&](int f) -> std::optional<double> {
        const auto& t = mesh.triangles[f];
        Vec3 va = mesh.vertices[t[0]];
        Vec3 n3 = cross(mesh.vertices[t[1]] - va, mesh.vertices[t[2]] - va);
        if (std::abs(n3.z) < kNormalTol) return std::nullopt;
        return va.z - ((p.x - va.x) * n3.x + (p.y - va.y) * n3.y) / n3.z;
      };
      auto z0 = plane_z(ed.f0);
      auto z1 = plane_z(ed.f1);
      if (!z0 || !z1) continue;
      if (std::abs(*z0 - *z1) < 1e-12) continue;
      Vec3 probe{p.x, p.y, 0.5 * (*z0 + *z1)};
      auto crossings = kernels::ray_up_crossings(mesh, {probe});
      return crossings[0] % 2 == 1 ? FoldSign::Positive : FoldSign::Negative;
    }
  }
  throw AmbiguousProbe("could not separate the two sheets at any probe");
}

CreaseConfig extracted_config(const CreaseExtraction& ex) {
  CreaseConfig cfg;
  for (int r = 0; r < ex.region_count; ++r)
    cfg.regions.push_back({"R" + std::to_string(r), {}});
  for (size_t i = 0; i < ex.loops.size(); ++i) {
    CurveId id = "loop" + std::to_string(i);
    cfg.curves.push_back({id, 0});
    auto [r0, r1] = ex.loop_regions[i];
    cfg.regions[r0].boundary.push_back(id);
    if (r1 != r0) cfg.regions[r1].boundary.push_back(id);
  }
  return cfg;
}

RealizationReport verify_realization(const CreaseConfig& cfg, const Weighting& w,
                                     const TriMesh& mesh,
                                     const VerifyOptions& opts) {
  RealizationReport rep;
  auto add = [&](const std::string& name, bool pass, const std::string& detail) {
    rep.checks.push_back({name, pass, detail});
  };

  MeshChecks mc = check_mesh(mesh);
  add("closed", mc.closed, "");
  add("oriented", mc.oriented, "");
  add("euler_characteristic", mc.euler_characteristic == 2,
      "chi=" + std::to_string(mc.euler_characteristic));
  add("regular_faces", mc.min_abs_normal_z >= kNormalTol,
      "min |n_z| = " + std::to_string(mc.min_abs_normal_z));
  if (!mc.closed || !mc.oriented) return rep;

  CreaseExtraction ex;
  try {
    ex = extract_crease(mesh);
  } catch (const std::exception& e) {
    add("crease_extraction", false, e.what());
    return rep;
  }
  add("loop_count", ex.loops.size() == cfg.curves.size(),
      std::to_string(ex.loops.size()) + " loops vs " +
          std::to_string(cfg.curves.size()) + " curves");

  CreaseConfig got = extracted_config(ex);
  bool tree_ok = is_valid(got) && config_isomorphic(got, cfg);
  add("crease_tree_isomorphic", tree_ok, "");

  // Turning numbers in canonical curve order must match the weights.
  bool turn_ok = true;
  std::string turn_detail;
  try {
    std::map<CurveId, int> got_w;
    for (size_t i = 0; i < ex.loops.size(); ++i)
      got_w["loop" + std::to_string(i)] = discrete_turning(ex.loops[i].projected);
    CanonicalForm cf_in = config_canonical_form(cfg);
    CanonicalForm cf_got = config_canonical_form(got);
    if (cf_got.curve_order.size() != cf_in.curve_order.size()) {
      turn_ok = false;
    } else {
      int total = 0;
      for (size_t i = 0; i < cf_in.curve_order.size(); ++i) {
        int want = w.value(cf_in.curve_order[i]);
        int have = got_w.at(cf_got.curve_order[i]);
        total += have;
        if (want != have) {
          turn_ok = false;
          turn_detail += cf_in.curve_order[i] + ": want " +
                         std::to_string(want) + " got " + std::to_string(have) +
                         "; ";
        }
      }
      add("global_identity", 2 * total == 2, "2*sum = " + std::to_string(2 * total));
    }
  } catch (const std::exception& e) {
    turn_ok = false;
    turn_detail = e.what();
  }
  add("turning_numbers", turn_ok, turn_detail);

  if (opts.self_intersection_scan) {
    auto hits = kernels::self_intersections(mesh);
    add("embedded", hits.empty(),
        hits.empty() ? "" : std::to_string(hits.size()) + " intersecting pairs");
  }
  return rep;
}

}  // namespace creases
