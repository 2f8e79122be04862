#include "creases/ltg.hpp"

#include <algorithm>
#include <cassert>
#include <functional>
#include <list>
#include <stdexcept>

namespace creases {

int Ltg::vertex_index(const RegionId& id) const {
  for (size_t i = 0; i < vertices.size(); ++i)
    if (vertices[i].id == id) return (int)i;
  throw std::out_of_range("unknown ltg vertex " + id);
}

int Ltg::edge_index(const CurveId& id) const {
  for (size_t i = 0; i < edges.size(); ++i)
    if (edges[i].id == id) return (int)i;
  throw std::out_of_range("unknown ltg edge " + id);
}

int Ltg::other_end(int edge, int vertex) const {
  const Edge& e = edges[edge];
  return e.ends[0] == vertex ? e.ends[1] : e.ends[0];
}

Ltg build_ltg(const CreaseConfig& cfg, const Weighting& w) {
  for (const auto& c : cfg.curves)
    if (c.corner_count > 0)
      throw CorneredConfig("build_ltg requires a corner-free configuration");
  if (!w.covers(cfg))
    throw std::invalid_argument("weighting does not cover the configuration");

  CanonicalForm cf = config_canonical_form(cfg);
  Ltg g;
  std::map<RegionId, int> vidx;
  for (const auto& rid : cf.region_order) {
    vidx[rid] = (int)g.vertices.size();
    g.vertices.push_back({rid, region_euler(cfg, rid), {}});
  }
  for (const auto& cid : cf.curve_order) {
    auto regs = cfg.incident_regions(cid);
    Ltg::Edge e;
    e.id = cid;
    e.weight = w.value(cid);
    e.ends[0] = vidx.at(regs[0]);
    e.ends[1] = vidx.at(regs[1]);
    int ei = (int)g.edges.size();
    g.edges.push_back(e);
    g.vertices[e.ends[0]].edges.push_back(ei);
    g.vertices[e.ends[1]].edges.push_back(ei);
  }
  return g;
}

bool labeling_valid(const Ltg& ltg, const Labeling& l) {
  for (const auto& m : l.marked) {
    bool found = false;
    for (const auto& e : ltg.edges)
      if (e.id == m) found = true;
    if (!found) return false;
  }
  for (const auto& v : ltg.vertices) {
    if (v.chi > 0) continue;
    int cnt = 0;
    for (int ei : v.edges)
      if (l.marked.count(ltg.edges[ei].id)) cnt++;
    if (cnt != 1) return false;
  }
  return true;
}

namespace {

// Feasibility of completing a partial marked/unmarked assignment.
// assignment[i] in {-1 undecided, 0 unmarked, 1 marked}.
bool completion_feasible(const Ltg& ltg, const std::vector<int>& assignment) {
  if (ltg.vertices.empty()) return true;
  // DP over the tree rooted at 0: options(v, parent_edge_mark).
  // Returns the set of workable parent-edge marks for the subtree at v.
  std::function<std::pair<bool, bool>(int, int)> options = [&](int v, int pe)
      -> std::pair<bool, bool> {
    std::vector<std::pair<bool, bool>> kid_opts;
    std::vector<int> kid_edges;
    for (int ei : ltg.vertices[v].edges) {
      if (ei == pe) continue;
      int w = ltg.other_end(ei, v);
      kid_opts.push_back(options(w, ei));
      kid_edges.push_back(ei);
    }
    auto allowed = [&](int ei, int mark) {
      return assignment[ei] < 0 || assignment[ei] == mark;
    };
    auto feasible_with = [&](int parent_mark) -> bool {
      if (pe >= 0 && !allowed(pe, parent_mark)) return false;
      bool constrained = ltg.vertices[v].chi <= 0;
      int need = constrained ? 1 - parent_mark : -1;
      if (constrained && need < 0) return false;
      // Child i may take mark m when allowed(edge, m) and subtree workable.
      std::vector<std::pair<bool, bool>> can(kid_edges.size());
      for (size_t i = 0; i < kid_edges.size(); ++i) {
        can[i].first = allowed(kid_edges[i], 0) && kid_opts[i].first;
        can[i].second = allowed(kid_edges[i], 1) && kid_opts[i].second;
        if (!can[i].first && !can[i].second) return false;
      }
      if (!constrained) return true;
      if (need == 0) {
        for (auto& c : can)
          if (!c.first) return false;
        return true;
      }
      // need == 1: one child marked, the rest unmarked.
      for (size_t j = 0; j < can.size(); ++j) {
        if (!can[j].second) continue;
        bool rest = true;
        for (size_t i = 0; i < can.size(); ++i)
          if (i != j && !can[i].first) rest = false;
        if (rest) return true;
      }
      return false;
    };
    // The root has no parent edge; only the unmarked branch is real.
    return {feasible_with(0), pe >= 0 && feasible_with(1)};
  };
  auto root = options(0, -1);
  return root.first;
}

}  // namespace

Labeling black_square_labeling(const Ltg& ltg) {
  std::vector<int> assignment(ltg.edges.size(), -1);
  if (!completion_feasible(ltg, assignment))
    throw NoLabelingFound("no consistent labeling exists");
  for (size_t i = 0; i < ltg.edges.size(); ++i) {
    assignment[i] = 0;
    if (!completion_feasible(ltg, assignment)) assignment[i] = 1;
  }
  Labeling out;
  for (size_t i = 0; i < ltg.edges.size(); ++i)
    if (assignment[i] == 1) out.marked.insert(ltg.edges[i].id);
  assert(labeling_valid(ltg, out));
  return out;
}

std::vector<Labeling> all_labelings(const Ltg& ltg) {
  std::vector<Labeling> out;
  size_t n = ltg.edges.size();
  if (n > 24) throw std::invalid_argument("all_labelings: graph too large");
  for (size_t mask = 0; mask < (size_t(1) << n); ++mask) {
    Labeling l;
    for (size_t i = 0; i < n; ++i)
      if (mask & (size_t(1) << i)) l.marked.insert(ltg.edges[i].id);
    if (labeling_valid(ltg, l)) out.push_back(l);
  }
  return out;
}

namespace {

// Vertex types realizing the star conditions: along every edge the type
// alternates; a positive edge rises from its type-A endpoint, a negative
// edge falls from it.
std::vector<int> vertex_types(const Ltg& ltg) {
  std::vector<int> type(ltg.vertices.size(), -1);
  std::vector<int> stack{0};
  type[0] = 0;
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    for (int ei : ltg.vertices[v].edges) {
      int w = ltg.other_end(ei, v);
      if (type[w] < 0) {
        type[w] = 1 - type[v];
        stack.push_back(w);
      }
    }
  }
  return type;
}

}  // namespace

LtgLayout layout_ltg(const Ltg& ltg, const Labeling& labeling) {
  if (!labeling_valid(ltg, labeling))
    throw std::invalid_argument("layout_ltg: invalid labeling");
  LtgLayout out;
  if (ltg.vertices.empty()) return out;
  if (ltg.vertices.size() == 1) {
    out.height[ltg.vertices[0].id] = 0;
    return out;
  }

  std::vector<int> type = vertex_types(ltg);
  // Edge direction: true when the edge rises from `v`.
  auto rises_from = [&](int ei, int v) {
    bool positive = ltg.edges[ei].weight > 0;
    bool type_a = type[v] == 0;
    return positive == type_a;
  };

  // Global bottom-to-top order under construction.
  std::list<int> order;
  std::map<int, std::list<int>::iterator> pos;

  std::vector<char> placed(ltg.vertices.size(), 0);

  // Insert `v` immediately above or below `anchor`.
  auto insert_adjacent = [&](int v, int anchor, bool above) {
    auto it = pos.at(anchor);
    if (above) ++it;
    pos[v] = order.insert(it, v);
    placed[v] = 1;
  };

  // Component membership helper: vertices reachable from `start` without
  // crossing placed vertices.
  auto component_of = [&](int start) {
    std::set<int> comp;
    std::vector<int> st{start};
    comp.insert(start);
    while (!st.empty()) {
      int v = st.back();
      st.pop_back();
      for (int ei : ltg.vertices[v].edges) {
        int w = ltg.other_end(ei, v);
        if (!placed[w] && comp.insert(w).second) st.push_back(w);
      }
    }
    return comp;
  };

  std::function<void(const std::set<int>&, int, int)> lay_component =
      [&](const std::set<int>& comp, int host, int connecting_edge) {
        // Single vertex: place it next to the host inside the interval.
        if (comp.size() == 1) {
          int v = *comp.begin();
          if (host < 0) {
            pos[v] = order.insert(order.end(), v);
            placed[v] = 1;
          } else {
            insert_adjacent(v, host, rises_from(connecting_edge, host));
          }
          return;
        }
        // Maximal directed (alternating) path through the canonically
        // least vertex of the component.
        int v0 = *comp.begin();
        std::vector<int> down, up;
        {
          int v = v0;
          int via = -1;
          while (true) {
            int pick = -1;
            for (int ei : ltg.vertices[v].edges) {
              int w = ltg.other_end(ei, v);
              if (!comp.count(w) || ei == via) continue;
              if (!rises_from(ei, v)) {
                pick = ei;
                break;
              }
            }
            if (pick < 0) break;
            down.push_back(pick);
            v = ltg.other_end(pick, v);
            via = pick;
          }
          v = v0;
          via = -1;
          while (true) {
            int pick = -1;
            for (int ei : ltg.vertices[v].edges) {
              int w = ltg.other_end(ei, v);
              if (!comp.count(w) || ei == via) continue;
              if (rises_from(ei, v)) {
                pick = ei;
                break;
              }
            }
            if (pick < 0) break;
            up.push_back(pick);
            v = ltg.other_end(pick, v);
            via = pick;
          }
        }
        std::vector<int> path_edges;
        for (auto it = down.rbegin(); it != down.rend(); ++it)
          path_edges.push_back(*it);
        for (int ei : up) path_edges.push_back(ei);
        std::vector<int> path_vertices;
        {
          int v = v0;
          for (auto it = down.begin(); it != down.end(); ++it)
            v = ltg.other_end(*it, v);
          path_vertices.push_back(v);
          for (int ei : path_edges) {
            v = ltg.other_end(ei, v);
            path_vertices.push_back(v);
          }
        }

        // Place the path: bottom to top, adjacent block. If nested, it goes
        // just above/below the host, inside the interval of the nesting edge.
        if (host < 0) {
          for (int v : path_vertices) {
            pos[v] = order.insert(order.end(), v);
            placed[v] = 1;
          }
        } else {
          bool above = rises_from(connecting_edge, host);
          if (above) {
            int anchor = host;
            for (int v : path_vertices) {
              insert_adjacent(v, anchor, true);
              anchor = v;
            }
          } else {
            // Insert the block below the host, preserving internal order.
            int anchor = host;
            for (auto it = path_vertices.rbegin(); it != path_vertices.rend();
                 ++it) {
              insert_adjacent(*it, anchor, false);
              anchor = *it;
            }
          }
        }

        LtgLayout::Path rec;
        for (int v : path_vertices) rec.vertices.push_back(ltg.vertices[v].id);
        for (int ei : path_edges) rec.edges.push_back(ltg.edges[ei].id);
        int this_path_index = (int)out.paths.size();
        out.paths.push_back(rec);

        // Process attachments along the path.
        std::set<int> on_path(path_vertices.begin(), path_vertices.end());
        for (size_t pi = 0; pi < path_vertices.size(); ++pi) {
          int v = path_vertices[pi];
          for (int ei : ltg.vertices[v].edges) {
            if (pi > 0 && ei == path_edges[pi - 1]) continue;
            if (pi + 1 < path_vertices.size() && ei == path_edges[pi]) continue;
            int w = ltg.other_end(ei, v);
            if (!comp.count(w) || on_path.count(w)) continue;
            // Same-direction path edge at v (exists by maximality).
            int nest = -1;
            for (size_t k = 0; k < path_edges.size(); ++k) {
              int pe = path_edges[k];
              if (pe != ei &&
                  (path_vertices[k] == v || path_vertices[k + 1] == v) &&
                  rises_from(pe, v) == rises_from(ei, v)) {
                nest = pe;
                break;
              }
            }
            std::set<int> sub = component_of(w);
            LtgLayout::Attachment att;
            att.host = ltg.vertices[v].id;
            att.connecting = ltg.edges[ei].id;
            att.nesting = nest >= 0 ? ltg.edges[nest].id : CurveId{};
            if (sub.size() == 1 && ltg.vertices[w].edges.size() == 1) {
              att.path_index = -1;
              att.leaf = ltg.vertices[w].id;
              insert_adjacent(w, v, rises_from(ei, v));
              out.attachments.push_back(att);
            } else {
              att.path_index = (int)out.paths.size();
              out.attachments.push_back(att);
              lay_component(sub, v, ei);
            }
          }
        }
        (void)this_path_index;
      };

  std::set<int> all;
  for (size_t i = 0; i < ltg.vertices.size(); ++i) all.insert((int)i);
  lay_component(all, -1, -1);

  int h = 0;
  for (int v : order) out.height[ltg.vertices[v].id] = h++;
  for (const auto& e : ltg.edges) {
    int h0 = out.height.at(ltg.vertices[e.ends[0]].id);
    int h1 = out.height.at(ltg.vertices[e.ends[1]].id);
    LtgLayout::EdgeSpan span;
    span.id = e.id;
    span.lo = std::min(h0, h1);
    span.hi = std::max(h0, h1);
    // Rising direction agrees with weight sign at the type-A endpoint.
    int a_end = type[e.ends[0]] == 0 ? 0 : 1;
    int a_h = a_end == 0 ? h0 : h1;
    bool a_is_lower = a_h == span.lo;
    span.slope_sign = (a_is_lower == (e.weight > 0)) ? 1 : -1;
    out.spans.push_back(span);
  }
  return out;
}

StarCheck verify_star(const Ltg& ltg, const LtgLayout& layout) {
  StarCheck out;
  // star-0: distinct heights.
  std::set<int> hs;
  for (const auto& v : ltg.vertices) {
    auto it = layout.height.find(v.id);
    if (it == layout.height.end()) {
      out.violations.push_back("missing height for " + v.id);
      continue;
    }
    if (!hs.insert(it->second).second)
      out.violations.push_back("duplicate height " + std::to_string(it->second));
  }
  if (!out.violations.empty()) return out;

  // star-1: nonzero slope.
  for (const auto& e : ltg.edges) {
    int h0 = layout.height.at(ltg.vertices[e.ends[0]].id);
    int h1 = layout.height.at(ltg.vertices[e.ends[1]].id);
    if (h0 == h1)
      out.violations.push_back("edge " + e.id + " has zero slope");
  }
  if (!out.violations.empty()) return out;

  // star-2 plus the a/b split across each edge. valid[v] = set of patterns
  // consistent at v (bit0: positives rise, bit1: positives fall).
  std::vector<int> valid(ltg.vertices.size(), 0);
  for (size_t vi = 0; vi < ltg.vertices.size(); ++vi) {
    const auto& v = ltg.vertices[vi];
    bool pat_a = true, pat_b = true;
    for (int ei : v.edges) {
      const auto& e = ltg.edges[ei];
      int hv = layout.height.at(v.id);
      int hw = layout.height.at(ltg.vertices[ltg.other_end(ei, (int)vi)].id);
      bool up = hw > hv;
      bool positive = e.weight > 0;
      if (up != positive) pat_a = false;
      if (up == positive) pat_b = false;
    }
    valid[vi] = (pat_a ? 1 : 0) | (pat_b ? 2 : 0);
    if (!valid[vi])
      out.violations.push_back("vertex " + v.id + " violates star-2");
  }
  if (!out.violations.empty()) return out;

  for (const auto& e : ltg.edges) {
    int u = e.ends[0], v = e.ends[1];
    bool split_possible = (valid[u] & 1 && valid[v] & 2) ||
                          (valid[u] & 2 && valid[v] & 1);
    if (!split_possible)
      out.violations.push_back("edge " + e.id + " lacks a 2a/2b split");
  }
  return out;
}

}  // namespace creases
