#pragma once

#include <vector>

#include "creases/mesh.hpp"

namespace creases::kernels {

// Data-parallel mesh kernels. Each has a serial reference implementation
// kept for testing; the default entry points dispatch to the OpenMP
// variant when built with it.

std::vector<Vec3> face_normals_serial(const TriMesh& mesh);
std::vector<Vec3> face_normals_parallel(const TriMesh& mesh);
std::vector<Vec3> face_normals(const TriMesh& mesh);

// Sign of each unit face normal's z component (-1, 0 below tolerance, +1).
std::vector<int> normal_z_signs_serial(const TriMesh& mesh, double tol);
std::vector<int> normal_z_signs_parallel(const TriMesh& mesh, double tol);
std::vector<int> normal_z_signs(const TriMesh& mesh, double tol);

// Indices of adjacency edges whose two faces have opposite normal z signs.
std::vector<int> crease_edge_scan_serial(const TriMesh& mesh,
                                         const MeshAdjacency& adj,
                                         const std::vector<int>& signs);
std::vector<int> crease_edge_scan_parallel(const TriMesh& mesh,
                                           const MeshAdjacency& adj,
                                           const std::vector<int>& signs);
std::vector<int> crease_edge_scan(const TriMesh& mesh, const MeshAdjacency& adj,
                                  const std::vector<int>& signs);

// Count crossings of the upward vertical ray from each probe point with
// the mesh (used for inside/outside parity tests).
std::vector<int> ray_up_crossings_serial(const TriMesh& mesh,
                                         const std::vector<Vec3>& probes);
std::vector<int> ray_up_crossings_parallel(const TriMesh& mesh,
                                           const std::vector<Vec3>& probes);
std::vector<int> ray_up_crossings(const TriMesh& mesh,
                                  const std::vector<Vec3>& probes);

// Pairs of non-adjacent triangles that intersect (quadratic scan with a
// bounding-box reject; optional verification step).
std::vector<std::pair<int, int>> self_intersections_serial(const TriMesh& mesh);
std::vector<std::pair<int, int>> self_intersections_parallel(const TriMesh& mesh);
std::vector<std::pair<int, int>> self_intersections(const TriMesh& mesh);

}  // namespace creases::kernels
