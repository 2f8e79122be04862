#include "creases/obj_io.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace creases {

void write_obj(std::ostream& os, const TriMesh& mesh) {
  char buf[128];
  for (const auto& v : mesh.vertices) {
    std::snprintf(buf, sizeof buf, "v %.12g %.12g %.12g\n", v.x, v.y, v.z);
    os << buf;
  }
  for (const auto& t : mesh.triangles) {
    std::snprintf(buf, sizeof buf, "f %d %d %d\n", t[0] + 1, t[1] + 1, t[2] + 1);
    os << buf;
  }
}

void write_obj_file(const std::string& path, const TriMesh& mesh) {
  std::ofstream f(path);
  if (!f) throw std::runtime_error("cannot open " + path + " for writing");
  write_obj(f, mesh);
}

TriMesh read_obj(std::istream& is) {
  TriMesh mesh;
  std::string line;
  while (std::getline(is, line)) {
    std::istringstream ss(line);
    std::string tag;
    ss >> tag;
    if (tag == "v") {
      Vec3 v;
      ss >> v.x >> v.y >> v.z;
      mesh.vertices.push_back(v);
    } else if (tag == "f") {
      int idx[3];
      for (int i = 0; i < 3; ++i) {
        std::string tok;
        ss >> tok;
        idx[i] = std::stoi(tok.substr(0, tok.find('/'))) - 1;
      }
      mesh.add_triangle(idx[0], idx[1], idx[2]);
    }
  }
  return mesh;
}

TriMesh read_obj_file(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw std::runtime_error("cannot open " + path);
  return read_obj(f);
}

}  // namespace creases
