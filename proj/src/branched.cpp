#include "creases/branched.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>
#include <functional>

namespace creases::branched {

std::string folding_name(Folding f) {
  switch (f) {
    case Folding::F1:
      return "f1";
    case Folding::F2:
      return "f2";
    case Folding::F3:
      return "f3";
  }
  return "?";
}

std::map<int, std::vector<std::pair<int, int>>> BranchedDiagram::passages() const {
  std::map<int, std::vector<std::pair<int, int>>> out;
  for (size_t w = 0; w < words.size(); ++w)
    for (size_t p = 0; p < words[w].size(); ++p)
      out[words[w][p]].push_back({(int)w, (int)p});
  return out;
}

int BranchedDiagram::double_point_count() const {
  std::set<int> dps;
  for (const auto& w : words) dps.insert(w.begin(), w.end());
  return (int)dps.size();
}

const Component* BranchedDiagram::find_component(const std::string& name) const {
  for (const auto& c : components)
    if (c.name == name) return &c;
  return nullptr;
}

namespace {

// Linear position of an attach point along the component's word, with the
// basepoint cut at position 0.
constexpr double kMissingAttach = -1e9;

double attach_position(const BranchedDiagram& d, const Component& comp,
                       const AttachPoint& ap) {
  auto passages = d.passages();
  auto it = passages.find(ap.anchor.dp);
  if (it == passages.end()) return kMissingAttach;
  if (ap.anchor.occ < 0 || ap.anchor.occ >= (int)it->second.size())
    return kMissingAttach;
  auto [w, p] = it->second[ap.anchor.occ];
  if (w != comp.word) return kMissingAttach;
  if (ap.at_vertex) return (double)p;
  return (double)p + (ap.before ? -ap.frac : ap.frac);
}

// Connected clusters of interior structure: strands sharing interior
// vertices belong to one cluster.
std::vector<std::vector<int>> strand_clusters(const Component& comp) {
  int n = (int)comp.strands.size();
  std::vector<int> parent(n);
  for (int i = 0; i < n; ++i) parent[i] = i;
  std::function<int(int)> find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  std::map<int, std::vector<int>> by_vertex;
  for (int i = 0; i < n; ++i)
    for (int v : comp.strands[i].via) by_vertex[v].push_back(i);
  for (const auto& [v, ss] : by_vertex)
    for (size_t i = 1; i < ss.size(); ++i)
      parent[find(ss[i])] = find(ss[0]);
  std::map<int, std::vector<int>> groups;
  for (int i = 0; i < n; ++i) groups[find(i)].push_back(i);
  std::vector<std::vector<int>> out;
  for (auto& [root, ss] : groups) out.push_back(ss);
  return out;
}

struct ClusterSpan {
  double lo = 0, hi = 0;
  std::vector<double> attach_positions;
  std::set<InstanceRef> vertex_attaches;
};

ClusterSpan cluster_span(const BranchedDiagram& d, const Component& comp,
                         const std::vector<int>& cluster) {
  ClusterSpan out;
  out.lo = 1e300;
  out.hi = -1e300;
  for (int si : cluster) {
    for (const auto& ap : comp.strands[si].ends) {
      double pos = attach_position(d, comp, ap);
      out.attach_positions.push_back(pos);
      out.lo = std::min(out.lo, pos);
      out.hi = std::max(out.hi, pos);
      if (ap.at_vertex) out.vertex_attaches.insert(ap.anchor);
    }
  }
  return out;
}

}  // namespace

std::map<int, int> strand_germs(const Component& comp) {
  std::map<int, int> germs;
  for (const auto& s : comp.strands) {
    for (size_t i = 0; i < s.via.size(); ++i) {
      bool terminus = !s.closed && s.ends.size() == 1 && i + 1 == s.via.size();
      germs[s.via[i]] += terminus ? 1 : 2;
    }
  }
  return germs;
}

std::vector<DiagramViolation> validate_diagram(const BranchedDiagram& d) {
  std::vector<DiagramViolation> out;
  auto fail = [&](const std::string& s) { out.push_back({s}); };

  // Words: every double point appears exactly twice across all words.
  std::map<int, int> occurrences;
  for (const auto& w : d.words)
    for (int dp : w) occurrences[dp]++;
  for (const auto& [dp, n] : occurrences)
    if (n != 2)
      fail("double point " + std::to_string(dp) + " appears " +
           std::to_string(n) + " times in the words");

  // Component roster and geography per folding assignment.
  std::map<std::string, std::pair<bool, bool>> want;  // name -> (disk, has_b)
  switch (d.folding) {
    case Folding::F1:
      want = {{"A-", {false, true}}, {"D+", {true, false}}};
      break;
    case Folding::F2:
      want = {{"A+", {false, true}}, {"A-", {false, true}}};
      break;
    case Folding::F3:
      want = {{"A+", {false, true}},
              {"A-", {false, true}},
              {"D+", {true, false}},
              {"D-", {true, false}}};
      break;
  }
  if (d.components.size() != want.size())
    fail("expected " + std::to_string(want.size()) + " components");
  for (const auto& comp : d.components) {
    auto it = want.find(comp.name);
    if (it == want.end()) {
      fail("unexpected component " + comp.name);
      continue;
    }
    if (comp.is_disk != it->second.first)
      fail("component " + comp.name + " has the wrong kind");
    if (comp.has_b_boundary != it->second.second)
      fail("component " + comp.name + " has the wrong boundary membership");
    if (comp.word < 0 || comp.word >= (int)d.words.size())
      fail("component " + comp.name + " references a missing word");
  }
  if (!out.empty()) return out;

  // Instance bound: each double point appears at most six times as a
  // vertex of the trace graph.
  std::map<int, int> instance_count;
  for (const auto& comp : d.components) {
    for (int dp : d.words[comp.word]) instance_count[dp]++;
    for (const auto& iv : comp.ivertices) instance_count[iv.dp]++;
  }
  for (const auto& [dp, n] : instance_count)
    if (n > 6)
      fail("double point " + std::to_string(dp) + " has " + std::to_string(n) +
           " vertex instances");

  // Strand structure per component.
  for (const auto& comp : d.components) {
    std::set<int> ids;
    for (const auto& iv : comp.ivertices)
      if (!ids.insert(iv.id).second)
        fail("component " + comp.name + " repeats interior vertex id");
    for (const auto& s : comp.strands) {
      if (s.closed && !s.ends.empty())
        fail("closed strand with endpoints in " + comp.name);
      if (!s.closed && (s.ends.empty() || s.ends.size() > 2))
        fail("strand with " + std::to_string(s.ends.size()) + " ends in " +
             comp.name);
      for (const auto& ap : s.ends) {
        if (attach_position(d, comp, ap) < -1e8)
          fail("attach anchor missing from the word in " + comp.name);
        if (!ap.at_vertex && (ap.frac <= 0 || ap.frac >= 1))
          fail("mid-edge attach fraction out of range in " + comp.name);
      }
      for (int v : s.via)
        if (!ids.count(v))
          fail("strand references unknown interior vertex in " + comp.name);
      // Half strands end at their last interior vertex.
      if (!s.closed && s.ends.size() == 1 && s.via.empty())
        fail("half strand without interior terminus in " + comp.name);
    }
    auto germs = strand_germs(comp);
    for (const auto& iv : comp.ivertices)
      if (germs.find(iv.id) == germs.end())
        fail("interior vertex " + std::to_string(iv.id) + " of " + comp.name +
             " has no strands");

    // Planarity of the supported class: cluster spans must stay off the
    // basepoint slot and form a laminar family (disjoint or nested).
    auto clusters = strand_clusters(comp);
    std::vector<ClusterSpan> spans;
    for (const auto& cl : clusters) spans.push_back(cluster_span(d, comp, cl));
    double len = (double)d.words[comp.word].size();
    for (const auto& sp : spans) {
      if (!sp.attach_positions.empty() &&
          (sp.lo <= -0.5 || sp.hi >= len - 0.5))
        fail("interior cluster reaches the basepoint slot of " + comp.name);
    }
    for (size_t i = 0; i < spans.size(); ++i) {
      for (size_t j = i + 1; j < spans.size(); ++j) {
        bool disjoint =
            spans[i].hi < spans[j].lo || spans[j].hi < spans[i].lo;
        bool nested = (spans[i].lo < spans[j].lo && spans[j].hi < spans[i].hi) ||
                      (spans[j].lo < spans[i].lo && spans[i].hi < spans[j].hi);
        if (!disjoint && !nested)
          fail("interior clusters cross along the boundary of " + comp.name);
      }
    }
  }
  return out;
}

bool diagram_valid(const BranchedDiagram& d) { return validate_diagram(d).empty(); }

namespace {

struct InstanceStatus {
  bool eligible = false;  // component has a B-side boundary
  bool blocked_attach = false;
  bool blocked_pocket = false;
  bool close() const {
    return eligible && !blocked_attach && !blocked_pocket;
  }
};

std::map<InstanceRef, InstanceStatus> component_status(const BranchedDiagram& d,
                                                       const Component& comp) {
  std::map<InstanceRef, InstanceStatus> st;
  const auto& word = d.words[comp.word];
  auto passages = d.passages();
  // Boundary instances in word order.
  std::vector<InstanceRef> order;
  for (size_t p = 0; p < word.size(); ++p) {
    int dp = word[p];
    int occ = 0;
    const auto& ps = passages.at(dp);
    for (size_t k = 0; k < ps.size(); ++k)
      if (ps[k] == std::make_pair(comp.word, (int)p)) occ = (int)k;
    InstanceRef ref{dp, occ};
    st[ref].eligible = comp.has_b_boundary;
    order.push_back(ref);
  }
  auto clusters = strand_clusters(comp);
  for (const auto& cl : clusters) {
    ClusterSpan span = cluster_span(d, comp, cl);
    for (const auto& va : span.vertex_attaches)
      if (st.count(va)) st[va].blocked_attach = true;
    for (size_t p = 0; p < order.size(); ++p) {
      double pos = (double)p;
      if (pos > span.lo && pos < span.hi && !span.vertex_attaches.count(order[p]))
        st[order[p]].blocked_pocket = true;
    }
  }
  return st;
}

}  // namespace

Complexity compute_complexity(const BranchedDiagram& d) {
  Complexity out;
  for (const auto& comp : d.components) {
    auto st = component_status(d, comp);
    for (const auto& [ref, s] : st) {
      if (s.close())
        out.n2++;
      else
        out.n1++;
    }
    out.n1 += (long)comp.ivertices.size();
  }
  return out;
}

std::set<InstanceRef> partial_close_vertices(const BranchedDiagram& d,
                                             const std::string& component) {
  const Component* comp = d.find_component(component);
  if (!comp) throw std::invalid_argument("unknown component " + component);
  std::set<InstanceRef> out;
  for (const auto& [ref, s] : component_status(d, *comp))
    if (s.close()) out.insert(ref);
  return out;
}

BranchedDiagram canonical_model(ModelLabel label) {
  BranchedDiagram d;
  switch (label) {
    case ModelLabel::Saucer: {
      d.folding = Folding::F1;
      d.words = {{}};
      Component am{"A-", false, true, 0, {}, {}};
      Component dp{"D+", true, false, 0, {}, {}};
      d.components = {am, dp};
      break;
    }
    case ModelLabel::Mushroom: {
      d.folding = Folding::F2;
      d.words = {{}};
      Component ap{"A+", false, true, 0, {}, {}};
      Component am{"A-", false, true, 0, {}, {}};
      d.components = {ap, am};
      break;
    }
    case ModelLabel::Toric: {
      d.folding = Folding::F3;
      d.words = {{1}, {1}};
      auto annulus = [&](const std::string& name, int word, int occ) {
        Component c{name, false, true, word, {}, {}};
        c.ivertices.push_back({1, 1});
        Strand spoke;  // boundary vertex to the interior instance
        spoke.ends = {AttachPoint{true, {1, occ}, 0}};
        spoke.via = {1};
        Strand loop;  // loop bounding a disk at the interior instance
        loop.closed = true;
        loop.via = {1};
        c.strands = {spoke, loop};
        return c;
      };
      d.components = {annulus("A+", 0, 0), annulus("A-", 1, 1),
                      Component{"D+", true, false, 0, {}, {}},
                      Component{"D-", true, false, 1, {}, {}}};
      d.next_fresh_dp = 2;
      break;
    }
  }
  assert(diagram_valid(d));
  return d;
}

}  // namespace creases::branched
