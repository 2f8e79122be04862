#include "creases/mesh_kernels.hpp"

#include "creases/emit.hpp"
#include "doctest.h"
#include "mesh_fixtures.hpp"

using namespace creases;

// The OpenMP kernels must agree exactly with their serial references.

TEST_CASE("face normals: parallel equals serial") {
  TriMesh m = mesh_fixtures::saucer(48);
  auto a = kernels::face_normals_serial(m);
  auto b = kernels::face_normals_parallel(m);
  REQUIRE(a.size() == b.size());
  for (size_t i = 0; i < a.size(); ++i) {
    CHECK(a[i].x == b[i].x);
    CHECK(a[i].y == b[i].y);
    CHECK(a[i].z == b[i].z);
  }
}

TEST_CASE("normal z signs and crease scan: parallel equals serial") {
  TriMesh m = mesh_fixtures::pleated_pancake(40);
  auto sa = kernels::normal_z_signs_serial(m, 1e-9);
  auto sb = kernels::normal_z_signs_parallel(m, 1e-9);
  CHECK(sa == sb);
  MeshAdjacency adj = build_adjacency(m);
  CHECK(kernels::crease_edge_scan_serial(m, adj, sa) ==
        kernels::crease_edge_scan_parallel(m, adj, sa));
}

TEST_CASE("ray crossings: parallel equals serial") {
  TriMesh m = mesh_fixtures::sphere(32);
  std::vector<Vec3> probes;
  for (int i = -4; i <= 4; ++i)
    for (int j = -4; j <= 4; ++j)
      probes.push_back({0.21 * i, 0.21 * j, -0.1});
  CHECK(kernels::ray_up_crossings_serial(m, probes) ==
        kernels::ray_up_crossings_parallel(m, probes));
}

TEST_CASE("ray parity detects inside and outside") {
  TriMesh m = mesh_fixtures::sphere(32);
  auto res = kernels::ray_up_crossings(m, {{0, 0, 0}, {2.5, 0, 0}, {0.2, 0.1, 0.3}});
  CHECK(res[0] % 2 == 1);
  CHECK(res[1] % 2 == 0);
  CHECK(res[2] % 2 == 1);
}

TEST_CASE("self intersections: parallel equals serial, clean meshes are clean") {
  TriMesh m = mesh_fixtures::saucer(20);
  auto a = kernels::self_intersections_serial(m);
  auto b = kernels::self_intersections_parallel(m);
  CHECK(a == b);
  CHECK(a.empty());

  // Two overlapping spheres in one mesh definitely intersect.
  TriMesh two = mesh_fixtures::sphere(16);
  TriMesh other = mesh_fixtures::sphere(16);
  int base = (int)two.vertices.size();
  for (auto v : other.vertices) two.add_vertex({v.x + 0.6, v.y, v.z});
  for (auto t : other.triangles)
    two.add_triangle(t[0] + base, t[1] + base, t[2] + base);
  CHECK_FALSE(kernels::self_intersections(two).empty());
}
