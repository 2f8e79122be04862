#include "creases/config.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <queue>
#include <set>
#include <stdexcept>

namespace creases {

const Curve* CreaseConfig::find_curve(const CurveId& id) const {
  for (const auto& c : curves)
    if (c.id == id) return &c;
  return nullptr;
}

const Region* CreaseConfig::find_region(const RegionId& id) const {
  for (const auto& r : regions)
    if (r.id == id) return &r;
  return nullptr;
}

std::vector<RegionId> CreaseConfig::incident_regions(const CurveId& id) const {
  std::vector<RegionId> out;
  for (const auto& r : regions)
    for (const auto& c : r.boundary)
      if (c == id) out.push_back(r.id);
  return out;
}

std::vector<Violation> validate_config(const CreaseConfig& cfg) {
  std::vector<Violation> out;

  for (const auto& c : cfg.curves) {
    if (c.corner_count < 0 || c.corner_count % 2 != 0)
      out.push_back({ViolationKind::OddCornerCount,
                     "curve " + c.id + " has corner count " +
                         std::to_string(c.corner_count)});
  }

  // Incidence counts. A curve listed twice in one region would be a loop.
  std::map<CurveId, std::vector<RegionId>> incidence;
  std::set<RegionId> region_ids;
  bool dup_region = false;
  for (const auto& r : cfg.regions) {
    if (!region_ids.insert(r.id).second) dup_region = true;
    std::set<CurveId> seen;
    for (const auto& c : r.boundary) {
      if (!seen.insert(c).second)
        out.push_back({ViolationKind::CyclicIncidence,
                       "curve " + c + " listed twice on region " + r.id});
      incidence[c].push_back(r.id);
    }
  }
  if (dup_region)
    out.push_back({ViolationKind::DanglingCurve, "duplicate region id"});

  std::set<CurveId> curve_ids;
  for (const auto& c : cfg.curves) {
    if (!curve_ids.insert(c.id).second)
      out.push_back({ViolationKind::DanglingCurve, "duplicate curve id " + c.id});
    auto it = incidence.find(c.id);
    size_t n = it == incidence.end() ? 0 : it->second.size();
    if (n != 2)
      out.push_back({ViolationKind::DanglingCurve,
                     "curve " + c.id + " bounds " + std::to_string(n) +
                         " regions, expected 2"});
  }
  for (const auto& [cid, regs] : incidence) {
    if (!curve_ids.count(cid))
      out.push_back({ViolationKind::DanglingCurve,
                     "region boundary references unknown curve " + cid});
  }
  if (!out.empty()) return out;

  // Multi-edges: two curves joining the same region pair close a cycle.
  std::set<std::pair<RegionId, RegionId>> pairs;
  for (const auto& [cid, regs] : incidence) {
    auto p = std::minmax(regs[0], regs[1]);
    if (!pairs.insert({p.first, p.second}).second)
      out.push_back({ViolationKind::CyclicIncidence,
                     "regions " + p.first + " and " + p.second +
                         " share more than one curve"});
  }
  if (!out.empty()) return out;

  // Tree check: |E| = |V| - 1 plus connectivity.
  if (cfg.curves.size() + 1 != cfg.regions.size()) {
    out.push_back({ViolationKind::CyclicIncidence,
                   "incidence graph is not a tree: " +
                       std::to_string(cfg.curves.size()) + " curves, " +
                       std::to_string(cfg.regions.size()) + " regions"});
    return out;
  }
  if (!cfg.regions.empty()) {
    std::map<RegionId, std::vector<RegionId>> adj;
    for (const auto& [cid, regs] : incidence) {
      adj[regs[0]].push_back(regs[1]);
      adj[regs[1]].push_back(regs[0]);
    }
    std::set<RegionId> seen;
    std::queue<RegionId> q;
    q.push(cfg.regions.front().id);
    seen.insert(cfg.regions.front().id);
    while (!q.empty()) {
      RegionId r = q.front();
      q.pop();
      for (const auto& nb : adj[r])
        if (seen.insert(nb).second) q.push(nb);
    }
    if (seen.size() != cfg.regions.size())
      out.push_back({ViolationKind::DisconnectedIncidence,
                     "incidence graph is disconnected"});
  }

  // Corner data, when present, must match the declared counts.
  for (const auto& [cid, cd] : cfg.corner_data) {
    const Curve* c = cfg.find_curve(cid);
    if (!c) {
      out.push_back({ViolationKind::DanglingCurve,
                     "corner data for unknown curve " + cid});
      continue;
    }
    if ((int)cd.corners.size() != c->corner_count)
      out.push_back({ViolationKind::OddCornerCount,
                     "corner data size mismatch on curve " + cid});
  }
  return out;
}

bool is_valid(const CreaseConfig& cfg) { return validate_config(cfg).empty(); }

int region_euler(const CreaseConfig& cfg, const RegionId& region) {
  const Region* r = cfg.find_region(region);
  if (!r) throw std::out_of_range("unknown region " + region);
  return 2 - (int)r->boundary.size();
}

namespace {

struct TreeView {
  std::vector<std::vector<std::pair<int, int>>> adj;  // region -> (region, curve)
  std::vector<RegionId> region_ids;
  std::vector<CurveId> curve_ids;
  std::vector<int> corner_counts;  // per curve index
};

TreeView build_tree_view(const CreaseConfig& cfg) {
  TreeView tv;
  std::map<RegionId, int> ridx;
  for (const auto& r : cfg.regions) {
    ridx[r.id] = (int)tv.region_ids.size();
    tv.region_ids.push_back(r.id);
  }
  std::map<CurveId, int> cidx;
  for (const auto& c : cfg.curves) {
    cidx[c.id] = (int)tv.curve_ids.size();
    tv.curve_ids.push_back(c.id);
    tv.corner_counts.push_back(c.corner_count);
  }
  tv.adj.resize(tv.region_ids.size());
  std::map<CurveId, std::vector<int>> inc;
  for (const auto& r : cfg.regions)
    for (const auto& c : r.boundary) inc[c].push_back(ridx[r.id]);
  for (const auto& [cid, regs] : inc) {
    int e = cidx.at(cid);
    tv.adj[regs[0]].push_back({regs[1], e});
    tv.adj[regs[1]].push_back({regs[0], e});
  }
  return tv;
}

// AHU-style canonical encoding of the subtree rooted at `v` entered via
// edge `via` (-1 at the root). Fills preorder region/curve sequences as a
// side effect of the chosen canonical child order.
std::string encode(const TreeView& tv, int v, int parent,
                   std::vector<std::pair<std::string, std::pair<int, int>>>* kids_out) {
  std::vector<std::pair<std::string, std::pair<int, int>>> kids;
  for (auto [w, e] : tv.adj[v]) {
    if (w == parent) continue;
    std::string sub = encode(tv, w, v, nullptr);
    std::string dec = "[" + std::to_string(tv.corner_counts[e]) + sub + "]";
    kids.push_back({dec, {w, e}});
  }
  std::sort(kids.begin(), kids.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  std::string s = "(";
  for (const auto& k : kids) s += k.first;
  s += ")";
  if (kids_out) *kids_out = kids;
  return s;
}

void preorder(const TreeView& tv, int v, int parent, std::vector<int>* rout,
              std::vector<int>* cout_) {
  rout->push_back(v);
  std::vector<std::pair<std::string, std::pair<int, int>>> kids;
  encode(tv, v, parent, &kids);
  for (const auto& k : kids) {
    cout_->push_back(k.second.second);
    preorder(tv, k.second.first, v, rout, cout_);
  }
}

// Centroid(s) of the tree: one or two vertices minimizing the largest
// component of the complement.
std::vector<int> centroids(const TreeView& tv) {
  int n = (int)tv.region_ids.size();
  if (n == 1) return {0};
  std::vector<int> size(n, 1), best;
  std::vector<int> order;
  std::vector<int> par(n, -1);
  // iterative post-order from vertex 0
  {
    std::vector<std::pair<int, int>> st{{0, -1}};
    while (!st.empty()) {
      auto [v, p] = st.back();
      st.pop_back();
      order.push_back(v);
      par[v] = p;
      for (auto [w, e] : tv.adj[v])
        if (w != p) st.push_back({w, v});
    }
    for (auto it = order.rbegin(); it != order.rend(); ++it)
      if (par[*it] >= 0) size[par[*it]] += size[*it];
  }
  int best_max = n + 1;
  for (int v = 0; v < n; ++v) {
    int mx = n - size[v];
    for (auto [w, e] : tv.adj[v])
      if (w != par[v]) mx = std::max(mx, size[w]);
    if (mx < best_max) {
      best_max = mx;
      best = {v};
    } else if (mx == best_max) {
      best.push_back(v);
    }
  }
  // A tree has one or two centroids.
  if (best.size() > 2) best.resize(2);
  return best;
}

}  // namespace

CanonicalForm config_canonical_form(const CreaseConfig& cfg) {
  CanonicalForm cf;
  if (cfg.regions.empty()) return cf;
  TreeView tv = build_tree_view(cfg);
  std::vector<int> cs = centroids(tv);

  auto root_signature = [&](int root) { return encode(tv, root, -1, nullptr); };

  int chosen = cs[0];
  std::string sig = root_signature(cs[0]);
  if (cs.size() == 2) {
    std::string sig2 = root_signature(cs[1]);
    if (sig2 < sig) {
      sig = sig2;
      chosen = cs[1];
    } else if (sig2 == sig) {
      // For a bicentroidal tie, disambiguate by the central edge corners.
      chosen = cs[0];
    }
    // Record both halves so relabelings of symmetric trees coincide.
    int e_central = -1;
    for (auto [w, e] : tv.adj[cs[0]])
      if (w == cs[1]) e_central = e;
    sig = "<" + std::to_string(tv.corner_counts[e_central]) + ">" +
          std::min(root_signature(cs[0]), root_signature(cs[1])) +
          std::max(root_signature(cs[0]), root_signature(cs[1]));
  }
  cf.signature = sig;

  std::vector<int> rorder, corder;
  if (cs.size() == 1) {
    preorder(tv, chosen, -1, &rorder, &corder);
  } else {
    // Root at the lexicographically smaller half, walking the central edge
    // second so ordering is relabel-invariant.
    int a = cs[0], b = cs[1];
    if (root_signature(b) < root_signature(a)) std::swap(a, b);
    int e_central = -1;
    for (auto [w, e] : tv.adj[a])
      if (w == b) e_central = e;
    preorder(tv, a, b, &rorder, &corder);
    corder.push_back(e_central);
    preorder(tv, b, a, &rorder, &corder);
  }
  for (int r : rorder) cf.region_order.push_back(tv.region_ids[r]);
  for (int c : corder) cf.curve_order.push_back(tv.curve_ids[c]);
  return cf;
}

bool config_isomorphic(const CreaseConfig& a, const CreaseConfig& b) {
  return config_canonical_form(a).signature == config_canonical_form(b).signature;
}

CreaseConfig canonicalize(const CreaseConfig& cfg) {
  CanonicalForm cf = config_canonical_form(cfg);
  std::map<RegionId, RegionId> rmap;
  std::map<CurveId, CurveId> cmap;
  for (size_t i = 0; i < cf.region_order.size(); ++i)
    rmap[cf.region_order[i]] = "K" + std::to_string(i);
  for (size_t i = 0; i < cf.curve_order.size(); ++i)
    cmap[cf.curve_order[i]] = "c" + std::to_string(i);

  CreaseConfig out;
  for (const auto& cid : cf.curve_order) {
    const Curve* c = cfg.find_curve(cid);
    out.curves.push_back({cmap[cid], c->corner_count});
  }
  for (const auto& rid : cf.region_order) {
    const Region* r = cfg.find_region(rid);
    Region nr;
    nr.id = rmap[rid];
    for (const auto& b : r->boundary) nr.boundary.push_back(cmap[b]);
    std::sort(nr.boundary.begin(), nr.boundary.end(),
              [](const CurveId& x, const CurveId& y) {
                // numeric sort on the c<N> names
                return std::stoi(x.substr(1)) < std::stoi(y.substr(1));
              });
    out.regions.push_back(nr);
  }
  for (const auto& [cid, cd] : cfg.corner_data) {
    CornerData nd;
    nd.reference_side = rmap.at(cd.reference_side);
    nd.corners = cd.corners;
    out.corner_data[cmap.at(cid)] = nd;
  }
  return out;
}

CreaseConfig make_path_config(int curve_count) {
  CreaseConfig cfg;
  for (int i = 0; i < curve_count; ++i)
    cfg.curves.push_back({"c" + std::to_string(i), 0});
  for (int i = 0; i <= curve_count; ++i) {
    Region r;
    r.id = "K" + std::to_string(i);
    if (i > 0) r.boundary.push_back("c" + std::to_string(i - 1));
    if (i < curve_count) r.boundary.push_back("c" + std::to_string(i));
    cfg.regions.push_back(r);
  }
  return cfg;
}

CreaseConfig make_star_config(int leg_count) {
  CreaseConfig cfg;
  Region center;
  center.id = "K0";
  for (int i = 0; i < leg_count; ++i) {
    CurveId c = "c" + std::to_string(i);
    cfg.curves.push_back({c, 0});
    center.boundary.push_back(c);
    cfg.regions.push_back({"L" + std::to_string(i), {c}});
  }
  cfg.regions.insert(cfg.regions.begin(), center);
  return cfg;
}

}  // namespace creases
