// Wall-clock comparison of the serial and OpenMP mesh kernels.

#include <chrono>
#include <cstdio>

#include "creases/emit.hpp"
#include "creases/mesh_kernels.hpp"
#include "creases/plan.hpp"

using namespace creases;
namespace chrono = std::chrono;

namespace {

template <typename F>
double time_ms(F&& f, int reps) {
  auto t0 = chrono::steady_clock::now();
  for (int i = 0; i < reps; ++i) f();
  auto t1 = chrono::steady_clock::now();
  return chrono::duration<double, std::milli>(t1 - t0).count() / reps;
}

}  // namespace

int main() {
  CreaseConfig cfg = make_path_config(5);
  TriMesh mesh = realize_config(cfg, 128);
  std::printf("mesh: %zu vertices, %zu faces\n", mesh.vertices.size(),
              mesh.triangles.size());
  MeshAdjacency adj = build_adjacency(mesh);

  double t_ser = time_ms([&] { kernels::face_normals_serial(mesh); }, 20);
  double t_par = time_ms([&] { kernels::face_normals_parallel(mesh); }, 20);
  std::printf("face_normals      serial %8.3f ms   parallel %8.3f ms\n", t_ser,
              t_par);

  auto signs = kernels::normal_z_signs_serial(mesh, 1e-9);
  t_ser = time_ms([&] { kernels::crease_edge_scan_serial(mesh, adj, signs); }, 20);
  t_par = time_ms([&] { kernels::crease_edge_scan_parallel(mesh, adj, signs); }, 20);
  std::printf("crease_edge_scan  serial %8.3f ms   parallel %8.3f ms\n", t_ser,
              t_par);

  std::vector<Vec3> probes;
  for (int i = 0; i < 256; ++i)
    probes.push_back({0.01 * i, 0.007 * i, 0.5});
  t_ser = time_ms([&] { kernels::ray_up_crossings_serial(mesh, probes); }, 3);
  t_par = time_ms([&] { kernels::ray_up_crossings_parallel(mesh, probes); }, 3);
  std::printf("ray_up_crossings  serial %8.3f ms   parallel %8.3f ms\n", t_ser,
              t_par);

  t_ser = time_ms([&] { kernels::self_intersections_serial(mesh); }, 1);
  t_par = time_ms([&] { kernels::self_intersections_parallel(mesh); }, 1);
  std::printf("self_intersections serial %8.3f ms   parallel %8.3f ms\n", t_ser,
              t_par);
  return 0;
}
