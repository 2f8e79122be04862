#pragma once

#include <array>
#include <cmath>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace creases {

struct Vec2 {
  double x = 0, y = 0;
};

struct Vec3 {
  double x = 0, y = 0, z = 0;
};

inline Vec3 operator+(Vec3 a, Vec3 b) { return {a.x + b.x, a.y + b.y, a.z + b.z}; }
inline Vec3 operator-(Vec3 a, Vec3 b) { return {a.x - b.x, a.y - b.y, a.z - b.z}; }
inline Vec3 operator*(double s, Vec3 a) { return {s * a.x, s * a.y, s * a.z}; }
inline Vec3 cross(Vec3 a, Vec3 b) {
  return {a.y * b.z - a.z * b.y, a.z * b.x - a.x * b.z, a.x * b.y - a.y * b.x};
}
inline double dot(Vec3 a, Vec3 b) { return a.x * b.x + a.y * b.y + a.z * b.z; }
inline double norm(Vec3 a) { return std::sqrt(dot(a, a)); }

// Oriented triangle mesh in model units.
struct TriMesh {
  std::vector<Vec3> vertices;
  std::vector<std::array<int, 3>> triangles;  // CCW as seen from outside

  int add_vertex(Vec3 p);
  void add_triangle(int a, int b, int c);
  // Quad helper: splits (a,b,c,d) into two triangles.
  void add_quad(int a, int b, int c, int d);

  size_t face_count() const { return triangles.size(); }
};

// Edge-to-face adjacency for a closed oriented mesh.
struct MeshAdjacency {
  // Each undirected edge (a<b) with its two adjacent faces.
  struct Edge {
    int a, b;
    int f0 = -1, f1 = -1;
  };
  std::vector<Edge> edges;
  std::map<std::pair<int, int>, int> edge_index;
  bool closed = true;       // every edge has two faces
  bool orientable = true;   // each directed edge used exactly once
};

MeshAdjacency build_adjacency(const TriMesh& mesh);

struct MeshChecks {
  bool closed = false;
  bool oriented = false;
  long euler_characteristic = 0;
  double min_abs_normal_z = 0;
  double signed_volume = 0;
};

MeshChecks check_mesh(const TriMesh& mesh);

// Flip faces to a consistent orientation (BFS over the face adjacency).
// Returns false for a non-manifold or non-orientable mesh.
bool make_consistent(TriMesh& mesh);

// Flip all triangles so the signed volume is positive (outward normals).
void orient_outward(TriMesh& mesh);

}  // namespace creases
