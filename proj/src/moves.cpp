#include "creases/moves.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>
#include <functional>
#include <map>
#include <set>

namespace creases::branched {

namespace {

struct Clusters {
  std::vector<std::vector<int>> groups;  // strand indices
};

Clusters clusters_of(const Component& comp) {
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
    for (size_t i = 1; i < ss.size(); ++i) parent[find(ss[i])] = find(ss[0]);
  std::map<int, std::vector<int>> groups;
  for (int i = 0; i < n; ++i) groups[find(i)].push_back(i);
  Clusters out;
  for (auto& [root, ss] : groups) out.groups.push_back(ss);
  return out;
}

double attach_pos(const BranchedDiagram& d, const Component& comp,
                  const AttachPoint& ap) {
  auto passages = d.passages();
  auto [w, p] = passages.at(ap.anchor.dp).at(ap.anchor.occ);
  assert(w == comp.word);
  (void)w;
  if (ap.at_vertex) return (double)p;
  return (double)p + (ap.before ? -ap.frac : ap.frac);
}

// Boundary instance at integer position p of a component's word.
InstanceRef instance_at(const BranchedDiagram& d, const Component& comp, int p) {
  int dp = d.words[comp.word][p];
  auto passages = d.passages();
  const auto& ps = passages.at(dp);
  for (size_t k = 0; k < ps.size(); ++k)
    if (ps[k] == std::make_pair(comp.word, p)) return {dp, (int)k};
  throw std::logic_error("instance_at: passage not found");
}

// The other component seeing the same word: the pair (X+, X-) flanking
// the locus component.
const Component* opposite_component(const BranchedDiagram& d,
                                    const Component& comp) {
  for (const auto& other : d.components) {
    if (other.name == comp.name) continue;
    if (other.word == comp.word && !other.is_disk) return &other;
  }
  // Fall back to a disk partner (folding f1: the pair is A-, D+).
  for (const auto& other : d.components) {
    if (other.name == comp.name) continue;
    if (other.word == comp.word) return &other;
  }
  return nullptr;
}

std::set<InstanceRef> close_set(const BranchedDiagram& d,
                                const Component& comp) {
  return partial_close_vertices(d, comp.name);
}

}  // namespace

std::vector<PartialClosePinch> enumerate_partial_close_moves(
    const BranchedDiagram& d) {
  std::vector<PartialClosePinch> out;
  for (const auto& jcomp : d.components) {
    const Component* xcomp = opposite_component(d, jcomp);
    if (!xcomp) continue;
    std::set<InstanceRef> x_close = close_set(d, *xcomp);
    auto cls = clusters_of(jcomp);
    for (size_t ci = 0; ci < cls.groups.size(); ++ci) {
      const auto& cluster = cls.groups[ci];
      // All attaches must be vertex attaches; they define the arc.
      std::vector<double> positions;
      std::set<InstanceRef> vertex_attaches;
      bool all_vertex = true;
      for (int si : cluster) {
        for (const auto& ap : jcomp.strands[si].ends) {
          if (!ap.at_vertex) all_vertex = false;
          positions.push_back(attach_pos(d, jcomp, ap));
          vertex_attaches.insert(ap.anchor);
        }
      }
      if (!all_vertex || positions.empty()) continue;
      double lo = *std::min_element(positions.begin(), positions.end());
      double hi = *std::max_element(positions.begin(), positions.end());
      // The arc's instances: everything in [lo, hi] on the word.
      std::vector<InstanceRef> arc;
      bool arc_ok = true;
      for (int p = (int)std::ceil(lo); p <= (int)std::floor(hi); ++p)
        arc.push_back(instance_at(d, jcomp, p));
      // J attaches exactly at the arc's vertices.
      std::set<InstanceRef> arc_set(arc.begin(), arc.end());
      if (arc_set != vertex_attaches) arc_ok = false;
      // The whole arc must be boundary-close on the opposite side.
      for (const auto& inst : arc)
        if (!x_close.count(inst)) arc_ok = false;
      // No other cluster may intrude into the arc on either side.
      auto intrudes = [&](const Component& comp, size_t skip_cluster,
                          bool is_j_side) {
        auto cl2 = clusters_of(comp);
        for (size_t cj = 0; cj < cl2.groups.size(); ++cj) {
          if (is_j_side && cj == skip_cluster) continue;
          for (int si : cl2.groups[cj])
            for (const auto& ap : comp.strands[si].ends) {
              double pos = attach_pos(d, comp, ap);
              if (pos > lo - 1e-9 && pos < hi + 1e-9) return true;
            }
        }
        return false;
      };
      if (intrudes(jcomp, ci, true)) arc_ok = false;
      if (intrudes(*xcomp, 0, false)) arc_ok = false;
      if (!arc_ok) continue;

      PartialClosePinch move;
      move.j_component = jcomp.name;
      move.close_component = xcomp->name;
      move.cluster = (int)ci;
      std::set<int> dps;
      for (const auto& inst : arc) dps.insert(inst.dp);
      move.removed_dps.assign(dps.begin(), dps.end());
      move.arc_vertex_count = (int)arc.size();
      out.push_back(move);
    }
  }
  // Deterministic order: longest arc first, then smallest dp id, then
  // component name.
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    if (a.arc_vertex_count != b.arc_vertex_count)
      return a.arc_vertex_count > b.arc_vertex_count;
    if (a.removed_dps != b.removed_dps) return a.removed_dps < b.removed_dps;
    return a.j_component < b.j_component;
  });
  return out;
}

namespace {

// Splice rules shared by both moves: remove the given double points from
// words and components, keeping strands whose anchors survive.
BranchedDiagram remove_dps(const BranchedDiagram& d, const std::set<int>& gone) {
  BranchedDiagram out = d;
  for (auto& w : out.words) {
    std::vector<int> nw;
    for (int dp : w)
      if (!gone.count(dp)) nw.push_back(dp);
    w = nw;
  }
  for (auto& comp : out.components) {
    // Interior vertices of removed double points disappear; strands keep
    // flowing through them.
    std::set<int> dead_vertices;
    for (const auto& iv : comp.ivertices)
      if (gone.count(iv.dp)) dead_vertices.insert(iv.id);
    std::vector<InteriorVertex> keep_vs;
    for (const auto& iv : comp.ivertices)
      if (!dead_vertices.count(iv.id)) keep_vs.push_back(iv);
    comp.ivertices = keep_vs;

    std::vector<Strand> keep;
    for (const auto& s : comp.strands) {
      Strand ns = s;
      // Drop dead interior vertices from the walk.
      std::vector<int> via;
      for (int v : ns.via)
        if (!dead_vertices.count(v)) via.push_back(v);
      ns.via = via;
      // Half strands must still terminate somewhere.
      bool drop = false;
      if (!ns.closed && ns.ends.size() == 1 && ns.via.empty()) drop = true;
      if (ns.closed && ns.via.empty()) drop = true;
      // Anchors at removed instances lose their meaning; mid-edge
      // anchors ride along on the merged locus stretch.
      for (const auto& ap : ns.ends)
        if (gone.count(ap.anchor.dp)) drop = true;
      if (!drop) keep.push_back(ns);
    }
    // Interior vertices that lost their crossing partner vanish along
    // with their remaining half strands.
    bool changed = true;
    while (changed) {
      changed = false;
      Component probe = comp;
      probe.strands = keep;
      auto germs = strand_germs(probe);
      std::set<int> weak;
      for (const auto& iv : comp.ivertices)
        if (germs[iv.id] < 2) weak.insert(iv.id);
      if (weak.empty()) break;
      std::vector<InteriorVertex> vs2;
      for (const auto& iv : comp.ivertices)
        if (!weak.count(iv.id)) vs2.push_back(iv);
      comp.ivertices = vs2;
      std::vector<Strand> keep2;
      for (const auto& s : keep) {
        bool touches = false;
        for (int v : s.via)
          if (weak.count(v)) touches = true;
        if (!touches) keep2.push_back(s);
      }
      if (keep2.size() != keep.size() || !weak.empty()) changed = true;
      keep = keep2;
    }
    comp.strands = keep;
  }
  return out;
}

}  // namespace

BranchedDiagram apply_partial_close(const BranchedDiagram& d,
                                    const PartialClosePinch& move) {
  // Re-derive the move to guard the precondition.
  auto moves = enumerate_partial_close_moves(d);
  bool found = false;
  for (const auto& m : moves)
    if (m.j_component == move.j_component && m.cluster == move.cluster &&
        m.removed_dps == move.removed_dps)
      found = true;
  if (!found) throw PreconditionViolated("partial-close move not enumerable");

  const Component* jcomp = d.find_component(move.j_component);
  auto cls = clusters_of(*jcomp);
  std::set<int> j_strands(cls.groups[move.cluster].begin(),
                          cls.groups[move.cluster].end());

  BranchedDiagram pruned = d;
  // Remove the consumed cluster first.
  for (auto& comp : pruned.components) {
    if (comp.name != move.j_component) continue;
    std::vector<Strand> keep;
    for (size_t i = 0; i < comp.strands.size(); ++i)
      if (!j_strands.count((int)i)) keep.push_back(comp.strands[i]);
    comp.strands = keep;
    // Drop interior vertices belonging to the cluster.
    auto germs = strand_germs(comp);
    std::vector<InteriorVertex> vs;
    for (const auto& iv : comp.ivertices)
      if (germs.count(iv.id)) vs.push_back(iv);
    comp.ivertices = vs;
  }
  std::set<int> gone(move.removed_dps.begin(), move.removed_dps.end());
  BranchedDiagram out = remove_dps(pruned, gone);

  // Strict decrease of the measure and of the double point count.
  Complexity before = compute_complexity(d);
  Complexity after = compute_complexity(out);
  if (!(after.n1 < before.n1 ||
        (after.n1 == before.n1 && after.n1 + after.n2 < before.n1 + before.n2)))
    throw PreconditionViolated("partial close failed to reduce the measure");
  if (out.double_point_count() >= d.double_point_count())
    throw PreconditionViolated("partial close failed to remove double points");
  if (!diagram_valid(out))
    throw PreconditionViolated("partial close produced an invalid diagram");
  return out;
}

std::vector<DoubleCuspPinch> enumerate_double_cusp_moves(
    const BranchedDiagram& d) {
  std::vector<DoubleCuspPinch> out;
  auto passages = d.passages();

  auto neighbors = [&](std::pair<int, int> a, std::pair<int, int> b) {
    if (a.first != b.first) return false;
    int len = (int)d.words[a.first].size();
    return (a.second + 1) % len == b.second || (b.second + 1) % len == a.second;
  };
  auto instance_of = [&](int w, int p) -> InstanceRef {
    int dp = d.words[w][p];
    const auto& ps = passages.at(dp);
    for (size_t k = 0; k < ps.size(); ++k)
      if (ps[k] == std::make_pair(w, p)) return {dp, (int)k};
    throw std::logic_error("passage lookup failed");
  };

  // Supported pattern: a mid-edge chord in each of the two components over
  // the same word, attach spans interleaved (one overlay crossing). The
  // candidates slide a double point from inside the overlap past a target
  // double point determined by word adjacency.
  for (const auto& plus : d.components) {
    const Component* minus = opposite_component(d, plus);
    if (!minus || minus->is_disk || plus.is_disk) continue;
    if (plus.name > minus->name) continue;
    for (const auto& sp : plus.strands) {
      if (sp.ends.size() != 2 || sp.ends[0].at_vertex || sp.ends[1].at_vertex)
        continue;
      double p_lo = attach_pos(d, plus, sp.ends[0]);
      double p_hi = attach_pos(d, plus, sp.ends[1]);
      if (p_lo > p_hi) std::swap(p_lo, p_hi);
      for (const auto& sm : minus->strands) {
        if (sm.ends.size() != 2 || sm.ends[0].at_vertex || sm.ends[1].at_vertex)
          continue;
        double m_lo = attach_pos(d, *minus, sm.ends[0]);
        double m_hi = attach_pos(d, *minus, sm.ends[1]);
        if (m_lo > m_hi) std::swap(m_lo, m_hi);
        bool interleaved = (p_lo < m_lo && m_lo < p_hi && p_hi < m_hi) ||
                           (m_lo < p_lo && p_lo < m_hi && m_hi < p_hi);
        if (!interleaved) continue;
        double olo = std::max(p_lo, m_lo), ohi = std::min(p_hi, m_hi);
        int word_i = plus.word;
        int len = (int)d.words[word_i].size();
        for (int pos = (int)std::ceil(olo); pos <= (int)std::floor(ohi); ++pos) {
          if (pos < 0 || pos >= len) continue;
          InstanceRef d_on = instance_of(word_i, pos);
          int d_dp = d_on.dp;
          // Word neighbors of the slid point's off-arc passage.
          auto d_off = passages.at(d_dp).at(1 - d_on.occ);
          int dlen = (int)d.words[d_off.first].size();
          if (dlen < 2) continue;
          InstanceRef u = instance_of(d_off.first, (d_off.second + dlen - 1) % dlen);
          InstanceRef wv = instance_of(d_off.first, (d_off.second + 1) % dlen);
          if (u.dp == d_dp || wv.dp == d_dp) continue;
          // Target: u's other passage neighbors the target's off-arc
          // passage, w's other passage neighbors the target's on-arc one.
          auto u_other = passages.at(u.dp).at(1 - u.occ);
          auto w_other = passages.at(wv.dp).at(1 - wv.occ);
          for (int t_on_occ = 0; t_on_occ < 2; ++t_on_occ) {
            // Candidate targets: the instances adjacent to w_other.
            if (w_other.first != word_i) continue;
            int wlen = (int)d.words[word_i].size();
            for (int dir : {-1, +1}) {
              int tp = (w_other.second + dir + wlen) % wlen;
              InstanceRef t_on = instance_of(word_i, tp);
              if (t_on.dp == d_dp || t_on.dp == u.dp || t_on.dp == wv.dp)
                continue;
              if (t_on.occ != t_on_occ) continue;
              auto t_off = passages.at(t_on.dp).at(1 - t_on.occ);
              if (!neighbors(u_other, t_off)) continue;
              // The slid instance must sit next to the target on the arc;
              // s is its neighbor on the other side.
              int spos;
              if ((pos + 1) % wlen == tp)
                spos = (pos + wlen - 1) % wlen;
              else if ((tp + 1) % wlen == pos)
                spos = (pos + 1) % wlen;
              else
                continue;
              InstanceRef s = instance_of(word_i, spos);
              if (s.dp == t_on.dp || s.dp == d_dp) continue;
              DoubleCuspPinch move;
              move.plus_component = plus.name;
              move.minus_component = minus->name;
              move.slid_dp = d_dp;
              move.target_dp = t_on.dp;
              move.target_on_occ = t_on.occ;
              move.u_dp = u.dp;
              move.u_occ = u.occ;
              move.w_dp = wv.dp;
              move.w_occ = wv.occ;
              move.s_dp = s.dp;
              move.s_occ = s.occ;
              out.push_back(move);
            }
          }
        }
      }
    }
  }
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    if (a.slid_dp != b.slid_dp) return a.slid_dp < b.slid_dp;
    return a.target_dp < b.target_dp;
  });
  out.erase(std::unique(out.begin(), out.end(),
                        [](const auto& a, const auto& b) {
                          return a.slid_dp == b.slid_dp &&
                                 a.target_dp == b.target_dp &&
                                 a.plus_component == b.plus_component;
                        }),
            out.end());
  return out;
}

BranchedDiagram apply_double_cusp(const BranchedDiagram& d,
                                  const DoubleCuspPinch& move) {
  auto moves = enumerate_double_cusp_moves(d);
  bool found = false;
  for (const auto& m : moves)
    if (m.slid_dp == move.slid_dp && m.target_dp == move.target_dp &&
        m.plus_component == move.plus_component)
      found = true;
  if (!found) throw PreconditionViolated("double-cusp move not enumerable");

  BranchedDiagram out = d;
  auto passages = d.passages();
  int n1 = out.next_fresh_dp;
  int n2 = out.next_fresh_dp + 1;
  out.next_fresh_dp += 2;

  // Passages involved. The slid point's on-arc passage neighbors s; the
  // target's on-arc passage is given by the move.
  auto s_pass = passages.at(move.s_dp).at(move.s_occ);
  int d_on_occ = -1;
  for (int occ = 0; occ < 2; ++occ) {
    auto [w, p] = passages.at(move.slid_dp).at(occ);
    int len = (int)d.words[w].size();
    if (w == s_pass.first && ((p + 1) % len == s_pass.second ||
                              (s_pass.second + 1) % len == p))
      d_on_occ = occ;
  }
  if (d_on_occ < 0)
    throw PreconditionViolated("slid passage is not adjacent to s");
  auto d_off = passages.at(move.slid_dp).at(1 - d_on_occ);
  auto t_on = passages.at(move.target_dp).at(move.target_on_occ);
  auto t_off = passages.at(move.target_dp).at(1 - move.target_on_occ);
  auto u_other = passages.at(move.u_dp).at(1 - move.u_occ);
  auto w_other = passages.at(move.w_dp).at(1 - move.w_occ);

  // Stream-rebuild the words, recording where the fresh passages land.
  std::vector<std::vector<int>> nw(out.words.size());
  std::pair<int, int> slot_n1_a{-1, -1}, slot_n2_a{-1, -1};
  std::pair<int, int> slot_n1_b{-1, -1}, slot_n2_b{-1, -1};
  for (size_t w = 0; w < out.words.size(); ++w) {
    const auto& word = d.words[w];
    int len = (int)word.size();
    for (int p = 0; p < len; ++p) {
      int dp = word[p];
      auto here = std::make_pair((int)w, p);
      if (here == passages.at(move.slid_dp).at(d_on_occ)) continue;  // dropped
      if (here == d_off) {
        slot_n1_a = {(int)w, (int)nw[w].size()};
        nw[w].push_back(n1);
        slot_n2_a = {(int)w, (int)nw[w].size()};
        nw[w].push_back(n2);
        continue;
      }
      if (here == t_on) {
        bool w_before = w_other.first == (int)w &&
                        (w_other.second + 1) % len == p;
        if (w_before) {
          slot_n2_b = {(int)w, (int)nw[w].size()};
          nw[w].push_back(n2);
          nw[w].push_back(dp);
        } else {
          nw[w].push_back(dp);
          slot_n2_b = {(int)w, (int)nw[w].size()};
          nw[w].push_back(n2);
        }
        continue;
      }
      if (here == t_off) {
        bool u_after =
            u_other.first == (int)w && (p + 1) % len == u_other.second;
        if (u_after) {
          nw[w].push_back(dp);
          slot_n1_b = {(int)w, (int)nw[w].size()};
          nw[w].push_back(n1);
        } else {
          slot_n1_b = {(int)w, (int)nw[w].size()};
          nw[w].push_back(n1);
          nw[w].push_back(dp);
        }
        continue;
      }
      nw[w].push_back(dp);
    }
  }
  out.words = nw;

  // Occurrence indices of the fresh passages. Surviving instances keep
  // their occurrence order: insertions and the single removal never swap
  // the relative order of an existing pair of passages.
  auto new_passages = out.passages();
  auto occ_at = [&](int dp, std::pair<int, int> slot) {
    const auto& ps = new_passages.at(dp);
    for (size_t k = 0; k < ps.size(); ++k)
      if (ps[k] == slot) return (int)k;
    throw std::logic_error("fresh passage not found after rewrite");
  };
  InstanceRef n1_a{n1, occ_at(n1, slot_n1_a)};
  InstanceRef n1_b{n1, occ_at(n1, slot_n1_b)};
  InstanceRef n2_a{n2, occ_at(n2, slot_n2_a)};
  InstanceRef n2_b{n2, occ_at(n2, slot_n2_b)};

  // Interior rebuild for the two carrier components: clusters touching
  // the move's double points are consumed; three vertex chords appear on
  // each side.
  std::set<int> touched = {move.slid_dp, move.target_dp, move.u_dp,
                           move.w_dp,    move.s_dp};
  for (auto& comp : out.components) {
    if (comp.name != move.plus_component && comp.name != move.minus_component)
      continue;
    const Component* old_comp = d.find_component(comp.name);
    std::vector<Strand> keep;
    for (const auto& s : old_comp->strands) {
      bool t = false;
      for (const auto& ap : s.ends)
        if (touched.count(ap.anchor.dp)) t = true;
      for (int v : s.via)
        for (const auto& iv : old_comp->ivertices)
          if (iv.id == v && touched.count(iv.dp)) t = true;
      if (!t) keep.push_back(s);
    }
    comp.strands = keep;
    auto germs = strand_germs(comp);
    comp.ivertices.clear();
    for (const auto& iv : old_comp->ivertices)
      if (germs[iv.id] >= 2) comp.ivertices.push_back(iv);

    auto vertex_chord = [&](InstanceRef a, InstanceRef b) {
      Strand s;
      s.ends = {AttachPoint{true, a, 0}, AttachPoint{true, b, 0}};
      comp.strands.push_back(s);
    };
    if (comp.name == move.plus_component) {
      vertex_chord({move.u_dp, move.u_occ}, n1_a);
      vertex_chord(n2_a, {move.w_dp, move.w_occ});
      vertex_chord({move.target_dp, move.target_on_occ}, {move.s_dp, move.s_occ});
    } else {
      vertex_chord({move.w_dp, 1 - move.w_occ}, n2_b);
      vertex_chord(n1_b, {move.u_dp, 1 - move.u_occ});
      vertex_chord({move.s_dp, 1 - move.s_occ},
                   {move.target_dp, 1 - move.target_on_occ});
    }
  }

  Complexity before = compute_complexity(d);
  Complexity after = compute_complexity(out);
  if (!(after.n1 < before.n1))
    throw PreconditionViolated("double cusp failed to reduce N1");
  if (!diagram_valid(out))
    throw PreconditionViolated("double cusp produced an invalid diagram");
  return out;
}

}  // namespace creases::branched
