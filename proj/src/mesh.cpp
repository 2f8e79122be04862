#include "creases/mesh.hpp"

#include <algorithm>
#include <cmath>

#include "creases/mesh_kernels.hpp"

namespace creases {

int TriMesh::add_vertex(Vec3 p) {
  vertices.push_back(p);
  return (int)vertices.size() - 1;
}

void TriMesh::add_triangle(int a, int b, int c) { triangles.push_back({a, b, c}); }

void TriMesh::add_quad(int a, int b, int c, int d) {
  add_triangle(a, b, c);
  add_triangle(a, c, d);
}

MeshAdjacency build_adjacency(const TriMesh& mesh) {
  MeshAdjacency adj;
  std::map<std::pair<int, int>, int> directed_count;
  for (size_t f = 0; f < mesh.triangles.size(); ++f) {
    const auto& t = mesh.triangles[f];
    for (int i = 0; i < 3; ++i) {
      int a = t[i], b = t[(i + 1) % 3];
      directed_count[{a, b}]++;
      auto key = std::minmax(a, b);
      auto it = adj.edge_index.find({key.first, key.second});
      if (it == adj.edge_index.end()) {
        adj.edge_index[{key.first, key.second}] = (int)adj.edges.size();
        adj.edges.push_back({key.first, key.second, (int)f, -1});
      } else {
        MeshAdjacency::Edge& e = adj.edges[it->second];
        if (e.f1 != -1) adj.orientable = false;  // non-manifold edge
        e.f1 = (int)f;
      }
    }
  }
  for (const auto& e : adj.edges)
    if (e.f1 == -1) adj.closed = false;
  for (const auto& [de, cnt] : directed_count)
    if (cnt > 1) adj.orientable = false;
  return adj;
}

MeshChecks check_mesh(const TriMesh& mesh) {
  MeshChecks out;
  MeshAdjacency adj = build_adjacency(mesh);
  out.closed = adj.closed;
  out.oriented = adj.orientable;
  out.euler_characteristic = (long)mesh.vertices.size() -
                             (long)adj.edges.size() +
                             (long)mesh.triangles.size();
  auto normals = kernels::face_normals(mesh);
  double mn = 1.0;
  for (const auto& n : normals) mn = std::min(mn, std::abs(n.z));
  out.min_abs_normal_z = mesh.triangles.empty() ? 0.0 : mn;
  double vol = 0;
  for (const auto& t : mesh.triangles) {
    const Vec3& a = mesh.vertices[t[0]];
    const Vec3& b = mesh.vertices[t[1]];
    const Vec3& c = mesh.vertices[t[2]];
    vol += dot(a, cross(b, c)) / 6.0;
  }
  out.signed_volume = vol;
  return out;
}

bool make_consistent(TriMesh& mesh) {
  // Undirected edge -> adjacent faces.
  std::map<std::pair<int, int>, std::vector<int>> efaces;
  for (size_t f = 0; f < mesh.triangles.size(); ++f) {
    const auto& t = mesh.triangles[f];
    for (int i = 0; i < 3; ++i) {
      auto key = std::minmax(t[i], t[(i + 1) % 3]);
      efaces[{key.first, key.second}].push_back((int)f);
    }
  }
  for (const auto& [e, fs] : efaces)
    if (fs.size() > 2) return false;

  auto has_directed = [&](int f, int a, int b) {
    const auto& t = mesh.triangles[f];
    for (int i = 0; i < 3; ++i)
      if (t[i] == a && t[(i + 1) % 3] == b) return true;
    return false;
  };

  std::vector<int> state(mesh.triangles.size(), 0);  // 0 unseen, 1 queued/done
  std::vector<int> stack;
  for (size_t seed = 0; seed < mesh.triangles.size(); ++seed) {
    if (state[seed]) continue;
    state[seed] = 1;
    stack.push_back((int)seed);
    while (!stack.empty()) {
      int f = stack.back();
      stack.pop_back();
      const auto t = mesh.triangles[f];
      for (int i = 0; i < 3; ++i) {
        int a = t[i], bb = t[(i + 1) % 3];
        auto key = std::minmax(a, bb);
        for (int g : efaces[{key.first, key.second}]) {
          if (g == f) continue;
          bool needs_flip = has_directed(g, a, bb);
          if (!state[g]) {
            if (needs_flip) std::swap(mesh.triangles[g][1], mesh.triangles[g][2]);
            state[g] = 1;
            stack.push_back(g);
          } else if (needs_flip) {
            return false;  // non-orientable
          }
        }
      }
    }
  }
  return true;
}

void orient_outward(TriMesh& mesh) {
  double vol = 0;
  for (const auto& t : mesh.triangles) {
    const Vec3& a = mesh.vertices[t[0]];
    const Vec3& b = mesh.vertices[t[1]];
    const Vec3& c = mesh.vertices[t[2]];
    vol += dot(a, cross(b, c)) / 6.0;
  }
  if (vol < 0)
    for (auto& t : mesh.triangles) std::swap(t[1], t[2]);
}

}  // namespace creases
