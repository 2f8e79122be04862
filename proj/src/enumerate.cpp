#include "creases/enumerate.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>
#include <stdexcept>

#include "creases/weighting.hpp"

namespace creases {

namespace {

// Unlabeled trees as parent vectors (vertex 0 is the root of the pool
// representation; isomorphism handled by canonical signatures).
struct RawTree {
  // parent[i] for i >= 1; vertex count = parent.size() + 1
  std::vector<int> parent;
};

CreaseConfig tree_to_config(const RawTree& t,
                            const std::vector<int>& edge_corners) {
  CreaseConfig cfg;
  int n = (int)t.parent.size() + 1;
  for (int v = 0; v < n; ++v)
    cfg.regions.push_back({"K" + std::to_string(v), {}});
  for (int i = 1; i < n; ++i) {
    CurveId c = "c" + std::to_string(i - 1);
    cfg.curves.push_back({c, edge_corners.empty() ? 0 : edge_corners[i - 1]});
    cfg.regions[t.parent[i - 1]].boundary.push_back(c);
    cfg.regions[i].boundary.push_back(c);
  }
  return cfg;
}

// All unlabeled trees with exactly `edges` edges, one per isomorphism
// class, generated by extending smaller trees with one leaf.
std::vector<RawTree> unlabeled_trees(int edges) {
  std::vector<std::vector<RawTree>> by_size(edges + 1);
  by_size[0].push_back(RawTree{});  // single vertex
  std::set<std::string> seen;
  for (int e = 1; e <= edges; ++e) {
    seen.clear();
    for (const RawTree& t : by_size[e - 1]) {
      int n = (int)t.parent.size() + 1;
      for (int attach = 0; attach < n; ++attach) {
        RawTree nt = t;
        nt.parent.push_back(attach);
        CreaseConfig cfg = tree_to_config(nt, {});
        std::string sig = config_canonical_form(cfg).signature;
        if (seen.insert(sig).second) by_size[e].push_back(nt);
      }
    }
  }
  return by_size[edges];
}

// Even corner-count vectors over `edges` entries with total <= budget.
void corner_distributions(int edges, int budget, std::vector<int>& cur,
                          std::vector<std::vector<int>>& out) {
  if ((int)cur.size() == edges) {
    out.push_back(cur);
    return;
  }
  for (int c = 0; c <= budget; c += 2) {
    cur.push_back(c);
    corner_distributions(edges, budget - c, cur, out);
    cur.pop_back();
  }
}

}  // namespace

bool weightable_exists(const CreaseConfig& cfg) {
  std::vector<CurveId> cornered;
  for (const auto& c : cfg.curves)
    if (c.corner_count > 0) cornered.push_back(c.id);
  if (cornered.empty())
    return std::holds_alternative<Weighting>(solve_weighting(cfg));

  // Try every corner-type multiset per cornered curve. Only the signed
  // delta (three-quarters minus quarters) matters, so walk deltas in steps
  // of two and materialize a matching corner list.
  CreaseConfig work = cfg;
  std::function<bool(size_t)> rec = [&](size_t i) -> bool {
    if (i == cornered.size())
      return std::holds_alternative<Weighting>(solve_weighting(work));
    const Curve* c = work.find_curve(cornered[i]);
    int n = c->corner_count;
    for (int tq = 0; tq <= n; ++tq) {
      CornerData cd;
      cd.reference_side = work.incident_regions(c->id).front();
      for (int j = 0; j < tq; ++j) cd.corners.push_back(CornerKind::ThreeQuarter);
      for (int j = tq; j < n; ++j) cd.corners.push_back(CornerKind::Quarter);
      work.corner_data[c->id] = cd;
      if (rec(i + 1)) return true;
    }
    work.corner_data.erase(c->id);
    return false;
  };
  return rec(0);
}

std::vector<CreaseConfig> enumerate_configs(int max_curves, int max_corners,
                                            bool weightable_only) {
  if (max_curves < 1) throw std::invalid_argument("max_curves must be >= 1");
  if (max_corners < 0) throw std::invalid_argument("max_corners must be >= 0");

  struct Entry {
    int curves;
    int corners;
    std::string sig;
    CreaseConfig cfg;
  };
  std::vector<Entry> entries;
  std::set<std::string> seen;

  for (int e = 1; e <= max_curves; ++e) {
    for (const RawTree& t : unlabeled_trees(e)) {
      std::vector<std::vector<int>> dists;
      std::vector<int> cur;
      corner_distributions(e, max_corners, cur, dists);
      for (const auto& d : dists) {
        CreaseConfig cfg = tree_to_config(t, d);
        CanonicalForm cf = config_canonical_form(cfg);
        if (!seen.insert(cf.signature).second) continue;
        if (weightable_only && !weightable_exists(cfg)) continue;
        int total = 0;
        for (int x : d) total += x;
        entries.push_back({e, total, cf.signature, canonicalize(cfg)});
      }
    }
  }
  std::sort(entries.begin(), entries.end(), [](const Entry& a, const Entry& b) {
    if (a.curves != b.curves) return a.curves < b.curves;
    if (a.corners != b.corners) return a.corners < b.corners;
    return a.sig < b.sig;
  });
  std::vector<CreaseConfig> out;
  for (auto& e : entries) out.push_back(std::move(e.cfg));
  return out;
}

}  // namespace creases
