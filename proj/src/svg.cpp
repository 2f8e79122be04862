#include "creases/svg.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace creases {

namespace {

struct Frame {
  double min_x = 1e300, min_y = 1e300, max_x = -1e300, max_y = -1e300;
  void take(double x, double y) {
    min_x = std::min(min_x, x);
    max_x = std::max(max_x, x);
    min_y = std::min(min_y, y);
    max_y = std::max(max_y, y);
  }
  std::string viewbox() const {
    double pad = 0.05 * std::max(max_x - min_x, max_y - min_y) + 1e-6;
    std::ostringstream ss;
    ss << (min_x - pad) << " " << (min_y - pad) << " "
       << (max_x - min_x + 2 * pad) << " " << (max_y - min_y + 2 * pad);
    return ss.str();
  }
  double stroke() const {
    return 0.004 * std::max(max_x - min_x, max_y - min_y) + 1e-9;
  }
};

const char* kHeader = "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";

}  // namespace

std::string svg_crease_projection(const StackPlan& plan,
                                  const SignAssignment* signs) {
  Frame fr;
  for (const auto& [cid, c] : plan.circles) {
    fr.take(c.center.x - c.r, c.center.y - c.r);
    fr.take(c.center.x + c.r, c.center.y + c.r);
  }
  std::ostringstream ss;
  ss << kHeader << "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\""
     << fr.viewbox() << "\">\n";
  for (const auto& [cid, c] : plan.circles) {
    std::string color = "#666666";
    if (signs && signs->signs.count(cid))
      color = signs->signs.at(cid) == FoldSign::Positive ? "#1f5fbf" : "#bf1f1f";
    ss << "  <circle cx=\"" << c.center.x << "\" cy=\"" << c.center.y
       << "\" r=\"" << c.r << "\" fill=\"none\" stroke=\"" << color
       << "\" stroke-width=\"" << fr.stroke() << "\"><title>" << cid
       << "</title></circle>\n";
  }
  ss << "</svg>\n";
  return ss.str();
}

std::string svg_extraction(const CreaseExtraction& ex) {
  Frame fr;
  for (const auto& loop : ex.loops)
    for (const auto& p : loop.projected) fr.take(p.x, p.y);
  std::ostringstream ss;
  ss << kHeader << "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\""
     << fr.viewbox() << "\">\n";
  for (const auto& loop : ex.loops) {
    ss << "  <polygon fill=\"none\" stroke=\""
       << (loop.sign == FoldSign::Positive ? "#1f5fbf" : "#bf1f1f")
       << "\" stroke-width=\"" << fr.stroke() << "\" points=\"";
    for (const auto& p : loop.projected) ss << p.x << "," << p.y << " ";
    ss << "\"/>\n";
  }
  ss << "</svg>\n";
  return ss.str();
}

std::string svg_ltg_layout(const Ltg& ltg, const LtgLayout& layout,
                           const Labeling& labeling) {
  // Vertices spread horizontally by canonical index, vertically by height.
  Frame fr;
  std::map<RegionId, Vec2> pos;
  for (size_t i = 0; i < ltg.vertices.size(); ++i) {
    double x = 10.0 * i;
    double y = -8.0 * layout.height.at(ltg.vertices[i].id);
    pos[ltg.vertices[i].id] = {x, y};
    fr.take(x, y);
  }
  std::ostringstream ss;
  ss << kHeader << "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\""
     << fr.viewbox() << "\">\n";
  for (const auto& e : ltg.edges) {
    Vec2 a = pos[ltg.vertices[e.ends[0]].id];
    Vec2 b = pos[ltg.vertices[e.ends[1]].id];
    bool marked = labeling.marked.count(e.id) > 0;
    ss << "  <line x1=\"" << a.x << "\" y1=\"" << a.y << "\" x2=\"" << b.x
       << "\" y2=\"" << b.y << "\" stroke=\""
       << (e.weight > 0 ? "#1f5fbf" : "#bf1f1f") << "\" stroke-width=\""
       << (marked ? 0.8 : 0.3) << "\"><title>" << e.id << " w=" << e.weight
       << "</title></line>\n";
  }
  for (const auto& v : ltg.vertices) {
    Vec2 p = pos[v.id];
    ss << "  <circle cx=\"" << p.x << "\" cy=\"" << p.y
       << "\" r=\"1.5\" fill=\"#ffffff\" stroke=\"#333333\" stroke-width=\"0.3\">"
       << "<title>" << v.id << " chi=" << v.chi << "</title></circle>\n";
  }
  ss << "</svg>\n";
  return ss.str();
}

}  // namespace creases
