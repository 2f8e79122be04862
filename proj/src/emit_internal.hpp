#pragma once

// Shared internals of the mesh emitter: ring registry, slab triangulation,
// collars, caps, and the level-to-z map. Used by emit.cpp and twist.cpp.

#include <array>
#include <map>
#include <string>
#include <vector>

#include "creases/mesh.hpp"
#include "creases/plan.hpp"

namespace creases::emitdetail {

// Triangulates a polygon with holes given as index loops into `pts`
// (outer counter-clockwise, holes clockwise). Returns triangles indexing
// the same list.
std::vector<std::array<int, 3>> triangulate_with_holes(
    const std::vector<Vec2>& pts, const std::vector<int>& outer,
    const std::vector<std::vector<int>>& holes);

struct Builder {
  const StackPlan& plan;
  int resolution;
  TriMesh mesh;

  // z per layout level.
  std::vector<double> level_z;

  // Ring registry: ring of `resolution` mesh vertices for (curve, token).
  // Tokens name the ring role: "rim@<level>", "cap".
  std::map<std::pair<CurveId, std::string>, std::vector<int>> rings;

  explicit Builder(const StackPlan& p, int res);

  double z_of_level(int level) const { return level_z.at(level); }
  double min_level_gap(int level) const;

  // Ring of vertices on the circle of `curve` at the given radius/height.
  const std::vector<int>& ring(const CurveId& curve, const std::string& token,
                               double radius, double z);

  // Fold collar between two rims of the same curve. `outward` selects
  // whether the crease bulges beyond the rim radius or inside it.
  void add_collar(const CurveId& curve, double rim_radius, bool outward,
                  const std::string& token_a, double z_a,
                  const std::string& token_b, double z_b);

  // Graph-disk cap over the rim ring (direction +1 above, -1 below).
  void add_cap(const CurveId& curve, const std::string& rim_token,
               double rim_radius, double rim_z, int direction, double height);

  // Flat slab for one region at its level; rims must exist already.
  void add_slab(const StackPlan::RegionPlan& rp);

  void finalize();  // orientation + sanity checks
};

}  // namespace creases::emitdetail
