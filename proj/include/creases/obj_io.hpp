#pragma once

#include <iosfwd>
#include <string>

#include "creases/mesh.hpp"

namespace creases {

// ASCII OBJ: `v x y z` lines then `f i j k` (1-based, CCW outward).
void write_obj(std::ostream& os, const TriMesh& mesh);
void write_obj_file(const std::string& path, const TriMesh& mesh);

TriMesh read_obj(std::istream& is);
TriMesh read_obj_file(const std::string& path);

}  // namespace creases
