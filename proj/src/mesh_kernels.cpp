#include "creases/mesh_kernels.hpp"

#include <algorithm>
#include <cmath>

#ifdef CREASES_HAVE_OPENMP
#include <omp.h>
#endif

namespace creases::kernels {

namespace {

inline Vec3 unit_normal(const TriMesh& m, size_t f) {
  const auto& t = m.triangles[f];
  Vec3 n = cross(m.vertices[t[1]] - m.vertices[t[0]],
                 m.vertices[t[2]] - m.vertices[t[0]]);
  double len = norm(n);
  if (len == 0) return {0, 0, 0};
  return {n.x / len, n.y / len, n.z / len};
}

// Upward ray from p against triangle f. Returns 1 for a strict interior
// crossing, 0 for a miss, -1 when the projected point is too close to the
// triangle boundary to decide (the caller perturbs and retries).
inline int ray_hits(const TriMesh& m, size_t f, const Vec3& p, double eps) {
  const auto& t = m.triangles[f];
  const Vec3& a = m.vertices[t[0]];
  const Vec3& b = m.vertices[t[1]];
  const Vec3& c = m.vertices[t[2]];
  double d1 = (b.x - a.x) * (p.y - a.y) - (b.y - a.y) * (p.x - a.x);
  double d2 = (c.x - b.x) * (p.y - b.y) - (c.y - b.y) * (p.x - b.x);
  double d3 = (a.x - c.x) * (p.y - c.y) - (a.y - c.y) * (p.x - c.x);
  bool has_neg = (d1 < -eps) || (d2 < -eps) || (d3 < -eps);
  bool has_pos = (d1 > eps) || (d2 > eps) || (d3 > eps);
  if (has_neg && has_pos) return 0;
  if (std::abs(d1) <= eps || std::abs(d2) <= eps || std::abs(d3) <= eps)
    return -1;  // grazing the boundary
  Vec3 n = cross(b - a, c - a);
  if (std::abs(n.z) < 1e-18) return -1;
  double z = a.z - ((p.x - a.x) * n.x + (p.y - a.y) * n.y) / n.z;
  return z > p.z ? 1 : 0;
}

// Counts crossings, nudging the probe sideways when it grazes an edge.
inline int count_crossings(const TriMesh& m, Vec3 p) {
  double scale = 0;
  for (const auto& v : m.vertices)
    scale = std::max({scale, std::abs(v.x), std::abs(v.y)});
  double eps = (scale * scale + 1e-30) * 1e-13;
  for (int attempt = 0; attempt < 8; ++attempt) {
    int cnt = 0;
    bool degenerate = false;
    for (size_t f = 0; f < m.triangles.size() && !degenerate; ++f) {
      int r = ray_hits(m, f, p, eps);
      if (r < 0)
        degenerate = true;
      else
        cnt += r;
    }
    if (!degenerate) return cnt;
    // Deterministic sideways nudge, growing per attempt.
    double step = scale * 1e-9 * (attempt + 1) * (attempt + 1);
    p.x += step * 0.7548776662;
    p.y += step * 0.5698402909;
  }
  // Fall back to the non-strict count.
  int cnt = 0;
  for (size_t f = 0; f < m.triangles.size(); ++f)
    if (ray_hits(m, f, p, 0) == 1) cnt++;
  return cnt;
}

// Segment-triangle intersection, strict interior crossings only.
bool segment_hits_triangle(const Vec3& p, const Vec3& q, const Vec3& a,
                           const Vec3& b, const Vec3& c) {
  Vec3 n = cross(b - a, c - a);
  double dp = dot(n, p - a), dq = dot(n, q - a);
  if (dp * dq >= 0) return false;
  double t = dp / (dp - dq);
  Vec3 x = p + t * (q - p);
  // Barycentric sign test.
  double d1 = dot(cross(b - a, x - a), n);
  double d2 = dot(cross(c - b, x - b), n);
  double d3 = dot(cross(a - c, x - c), n);
  return (d1 > 0 && d2 > 0 && d3 > 0) || (d1 < 0 && d2 < 0 && d3 < 0);
}

bool tri_tri_intersect(const TriMesh& m, int f, int g) {
  const auto& tf = m.triangles[f];
  const auto& tg = m.triangles[g];
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      if (tf[i] == tg[j]) return false;  // sharing a vertex: adjacent
  const Vec3 *fa = &m.vertices[tf[0]], *fb = &m.vertices[tf[1]],
             *fc = &m.vertices[tf[2]];
  const Vec3 *ga = &m.vertices[tg[0]], *gb = &m.vertices[tg[1]],
             *gc = &m.vertices[tg[2]];
  return segment_hits_triangle(*fa, *fb, *ga, *gb, *gc) ||
         segment_hits_triangle(*fb, *fc, *ga, *gb, *gc) ||
         segment_hits_triangle(*fc, *fa, *ga, *gb, *gc) ||
         segment_hits_triangle(*ga, *gb, *fa, *fb, *fc) ||
         segment_hits_triangle(*gb, *gc, *fa, *fb, *fc) ||
         segment_hits_triangle(*gc, *ga, *fa, *fb, *fc);
}

struct Box {
  double lo[3], hi[3];
};

Box face_box(const TriMesh& m, size_t f) {
  Box b;
  for (int k = 0; k < 3; ++k) {
    b.lo[k] = 1e300;
    b.hi[k] = -1e300;
  }
  for (int i = 0; i < 3; ++i) {
    const Vec3& v = m.vertices[m.triangles[f][i]];
    double c[3] = {v.x, v.y, v.z};
    for (int k = 0; k < 3; ++k) {
      b.lo[k] = std::min(b.lo[k], c[k]);
      b.hi[k] = std::max(b.hi[k], c[k]);
    }
  }
  return b;
}

inline bool boxes_overlap(const Box& a, const Box& b) {
  for (int k = 0; k < 3; ++k)
    if (a.hi[k] < b.lo[k] || b.hi[k] < a.lo[k]) return false;
  return true;
}

}  // namespace

std::vector<Vec3> face_normals_serial(const TriMesh& mesh) {
  std::vector<Vec3> out(mesh.triangles.size());
  for (size_t f = 0; f < mesh.triangles.size(); ++f) out[f] = unit_normal(mesh, f);
  return out;
}

std::vector<Vec3> face_normals_parallel(const TriMesh& mesh) {
  std::vector<Vec3> out(mesh.triangles.size());
#pragma omp parallel for schedule(static)
  for (long f = 0; f < (long)mesh.triangles.size(); ++f)
    out[f] = unit_normal(mesh, (size_t)f);
  return out;
}

std::vector<Vec3> face_normals(const TriMesh& mesh) {
#ifdef CREASES_HAVE_OPENMP
  return face_normals_parallel(mesh);
#else
  return face_normals_serial(mesh);
#endif
}

std::vector<int> normal_z_signs_serial(const TriMesh& mesh, double tol) {
  auto normals = face_normals_serial(mesh);
  std::vector<int> out(normals.size());
  for (size_t i = 0; i < normals.size(); ++i) {
    double z = normals[i].z;
    out[i] = std::abs(z) < tol ? 0 : (z > 0 ? 1 : -1);
  }
  return out;
}

std::vector<int> normal_z_signs_parallel(const TriMesh& mesh, double tol) {
  auto normals = face_normals_parallel(mesh);
  std::vector<int> out(normals.size());
#pragma omp parallel for schedule(static)
  for (long i = 0; i < (long)normals.size(); ++i) {
    double z = normals[i].z;
    out[i] = std::abs(z) < tol ? 0 : (z > 0 ? 1 : -1);
  }
  return out;
}

std::vector<int> normal_z_signs(const TriMesh& mesh, double tol) {
#ifdef CREASES_HAVE_OPENMP
  return normal_z_signs_parallel(mesh, tol);
#else
  return normal_z_signs_serial(mesh, tol);
#endif
}

std::vector<int> crease_edge_scan_serial(const TriMesh& mesh,
                                         const MeshAdjacency& adj,
                                         const std::vector<int>& signs) {
  (void)mesh;
  std::vector<int> out;
  for (size_t e = 0; e < adj.edges.size(); ++e) {
    const auto& ed = adj.edges[e];
    if (ed.f1 < 0) continue;
    if (signs[ed.f0] * signs[ed.f1] < 0) out.push_back((int)e);
  }
  return out;
}

std::vector<int> crease_edge_scan_parallel(const TriMesh& mesh,
                                           const MeshAdjacency& adj,
                                           const std::vector<int>& signs) {
  (void)mesh;
  std::vector<char> flag(adj.edges.size(), 0);
#pragma omp parallel for schedule(static)
  for (long e = 0; e < (long)adj.edges.size(); ++e) {
    const auto& ed = adj.edges[e];
    if (ed.f1 >= 0 && signs[ed.f0] * signs[ed.f1] < 0) flag[e] = 1;
  }
  std::vector<int> out;
  for (size_t e = 0; e < flag.size(); ++e)
    if (flag[e]) out.push_back((int)e);
  return out;
}

std::vector<int> crease_edge_scan(const TriMesh& mesh, const MeshAdjacency& adj,
                                  const std::vector<int>& signs) {
#ifdef CREASES_HAVE_OPENMP
  return crease_edge_scan_parallel(mesh, adj, signs);
#else
  return crease_edge_scan_serial(mesh, adj, signs);
#endif
}

std::vector<int> ray_up_crossings_serial(const TriMesh& mesh,
                                         const std::vector<Vec3>& probes) {
  std::vector<int> out(probes.size(), 0);
  for (size_t p = 0; p < probes.size(); ++p)
    out[p] = count_crossings(mesh, probes[p]);
  return out;
}

std::vector<int> ray_up_crossings_parallel(const TriMesh& mesh,
                                           const std::vector<Vec3>& probes) {
  std::vector<int> out(probes.size(), 0);
#pragma omp parallel for schedule(dynamic)
  for (long p = 0; p < (long)probes.size(); ++p)
    out[p] = count_crossings(mesh, probes[p]);
  return out;
}

std::vector<int> ray_up_crossings(const TriMesh& mesh,
                                  const std::vector<Vec3>& probes) {
#ifdef CREASES_HAVE_OPENMP
  return ray_up_crossings_parallel(mesh, probes);
#else
  return ray_up_crossings_serial(mesh, probes);
#endif
}

std::vector<std::pair<int, int>> self_intersections_serial(const TriMesh& mesh) {
  size_t n = mesh.triangles.size();
  std::vector<Box> boxes(n);
  for (size_t f = 0; f < n; ++f) boxes[f] = face_box(mesh, f);
  std::vector<std::pair<int, int>> out;
  for (size_t f = 0; f < n; ++f)
    for (size_t g = f + 1; g < n; ++g)
      if (boxes_overlap(boxes[f], boxes[g]) && tri_tri_intersect(mesh, (int)f, (int)g))
        out.push_back({(int)f, (int)g});
  return out;
}

std::vector<std::pair<int, int>> self_intersections_parallel(const TriMesh& mesh) {
  size_t n = mesh.triangles.size();
  std::vector<Box> boxes(n);
#pragma omp parallel for schedule(static)
  for (long f = 0; f < (long)n; ++f) boxes[f] = face_box(mesh, (size_t)f);
  std::vector<std::vector<std::pair<int, int>>> partial;
#ifdef CREASES_HAVE_OPENMP
  partial.resize(omp_get_max_threads());
#else
  partial.resize(1);
#endif
#pragma omp parallel for schedule(dynamic, 64)
  for (long f = 0; f < (long)n; ++f) {
#ifdef CREASES_HAVE_OPENMP
    auto& mine = partial[omp_get_thread_num()];
#else
    auto& mine = partial[0];
#endif
    for (size_t g = f + 1; g < n; ++g)
      if (boxes_overlap(boxes[f], boxes[g]) && tri_tri_intersect(mesh, (int)f, (int)g))
        mine.push_back({(int)f, (int)g});
  }
  std::vector<std::pair<int, int>> out;
  for (auto& p : partial) out.insert(out.end(), p.begin(), p.end());
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::pair<int, int>> self_intersections(const TriMesh& mesh) {
#ifdef CREASES_HAVE_OPENMP
  return self_intersections_parallel(mesh);
#else
  return self_intersections_serial(mesh);
#endif
}

}  // namespace creases::kernels
