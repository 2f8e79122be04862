#include "creases/classify.hpp"

#include <algorithm>
#include <cassert>
#include <set>
#include <sstream>

namespace creases::branched {

std::string dump_diagram(const BranchedDiagram& d) {
  std::ostringstream ss;
  ss << folding_name(d.folding) << "; words:";
  for (const auto& w : d.words) {
    ss << " [";
    for (size_t i = 0; i < w.size(); ++i) ss << (i ? "," : "") << w[i];
    ss << "]";
  }
  for (const auto& c : d.components) {
    ss << "; " << c.name << ": " << c.ivertices.size() << " interior, "
       << c.strands.size() << " strands";
  }
  return ss.str();
}

ClassifyResult classify(const BranchedDiagram& d) {
  if (!diagram_valid(d))
    throw std::invalid_argument("classify: invalid diagram");
  ClassifyResult out;
  out.initial = compute_complexity(d);
  BranchedDiagram cur = d;

  auto measure = [](const Complexity& c) {
    return std::make_pair(c.n1, c.n1 + c.n2);
  };

  while (cur.double_point_count() > (cur.folding == Folding::F3 ? 1 : 0)) {
    Complexity before = compute_complexity(cur);
    auto pc = enumerate_partial_close_moves(cur);
    ClassifyStep step;
    step.before = before;
    if (!pc.empty()) {
      step.kind = "partial-close";
      step.removed_dps = pc.front().removed_dps;
      cur = apply_partial_close(cur, pc.front());
    } else {
      auto dc = enumerate_double_cusp_moves(cur);
      if (dc.empty())
        throw Stuck("no pinching move on a non-minimal diagram",
                    dump_diagram(cur));
      step.kind = "double-cusp";
      step.removed_dps = {dc.front().slid_dp};
      step.added_dps = {cur.next_fresh_dp, cur.next_fresh_dp + 1};
      cur = apply_double_cusp(cur, dc.front());
    }
    step.after = compute_complexity(cur);
    if (!(measure(step.after) < measure(before)))
      throw Stuck("measure failed to decrease", dump_diagram(cur));
    out.trace.push_back(step);
  }

  switch (cur.folding) {
    case Folding::F1:
      out.label = ModelLabel::Saucer;
      break;
    case Folding::F2:
      out.label = ModelLabel::Mushroom;
      break;
    case Folding::F3:
      out.label = ModelLabel::Toric;
      break;
  }
  out.terminal = cur;
  return out;
}

namespace {

// Positions strictly inside any cluster span, per annulus component.
std::vector<std::pair<double, double>> blocked_spans(const BranchedDiagram& d) {
  std::vector<std::pair<double, double>> out;
  auto passages = d.passages();
  for (const auto& comp : d.components) {
    for (const auto& s : comp.strands) {
      double lo = 1e300, hi = -1e300;
      for (const auto& ap : s.ends) {
        auto [w, p] = passages.at(ap.anchor.dp).at(ap.anchor.occ);
        double pos = (double)p + (ap.at_vertex ? 0.0 : ap.frac);
        lo = std::min(lo, pos);
        hi = std::max(hi, pos);
      }
      if (!s.ends.empty()) out.push_back({lo, hi});
    }
  }
  return out;
}

}  // namespace

BranchedDiagram random_diagram(Folding folding, int max_dps, unsigned seed) {
  if (folding == Folding::F3)
    throw std::invalid_argument("random_diagram supports f1 and f2 only");
  BranchedDiagram d = canonical_model(
      folding == Folding::F1 ? ModelLabel::Saucer : ModelLabel::Mushroom);
  std::mt19937 rng(seed);

  int budget = max_dps;
  while (budget > 0) {
    int k = std::min<int>(budget, 1 + (int)(rng() % 3));
    // J side: a disk is allowed to carry clusters for f1; the close side
    // must have a boundary on the surface side.
    std::string j_side, close_side;
    if (folding == Folding::F1) {
      j_side = "D+";
      close_side = "A-";
    } else {
      bool flip = rng() % 2;
      j_side = flip ? "A+" : "A-";
      close_side = flip ? "A-" : "A+";
    }

    const auto& word = d.words[0];
    int len = (int)word.size();
    auto spans = blocked_spans(d);
    auto free_slot = [&](double pos) {
      for (auto [lo, hi] : spans)
        if (pos > lo - 0.5 && pos < hi + 0.5) return false;
      return true;
    };
    // Insertion slots: index i means before word position i (avoid 0 so
    // the basepoint gap stays clear of attachments).
    std::vector<int> slots;
    for (int i = 1; i <= len; ++i)
      if (free_slot(i - 0.5)) slots.push_back(i);
    if (len == 0) slots.push_back(0);
    if (slots.empty()) break;
    int run_at = slots[rng() % slots.size()];

    std::vector<int> fresh;
    for (int i = 0; i < k; ++i) fresh.push_back(d.next_fresh_dp++);

    // Insert the run, then each partner at a random free slot. The run's
    // start index is tracked explicitly across insertions.
    BranchedDiagram nd = d;
    auto& w0 = nd.words[0];
    w0.insert(w0.begin() + run_at, fresh.begin(), fresh.end());
    int run_start = run_at;
    for (int i = 0; i < k; ++i) {
      int len2 = (int)w0.size();
      std::vector<int> s2;
      auto spans2 = blocked_spans(nd);
      auto free2 = [&](double pos) {
        for (auto [lo, hi] : spans2)
          if (pos > lo - 0.5 && pos < hi + 0.5) return false;
        return true;
      };
      for (int p2 = 1; p2 <= len2; ++p2) {
        if (!free2(p2 - 0.5)) continue;
        if (p2 > run_start && p2 < run_start + k) continue;  // inside the run
        s2.push_back(p2);
      }
      if (s2.empty()) s2.push_back(len2);
      int slot = s2[rng() % s2.size()];
      w0.insert(w0.begin() + slot, fresh[i]);
      if (slot <= run_start) run_start++;
    }

    auto passages = nd.passages();
    Component* jc = nullptr;
    for (auto& c : nd.components)
      if (c.name == j_side) jc = &c;
    assert(jc);
    int ivid = 1;
    for (const auto& iv : jc->ivertices) ivid = std::max(ivid, iv.id + 1);
    jc->ivertices.push_back({ivid, fresh[0]});
    // The run occupies [run_start, run_start + k): pick each fresh id's
    // passage inside that window.
    auto arc_instance = [&](int dp) -> InstanceRef {
      const auto& ps = passages.at(dp);
      for (size_t occ = 0; occ < ps.size(); ++occ) {
        auto [w2, p2] = ps[occ];
        if (w2 == 0 && p2 >= run_start && p2 < run_start + k)
          return {dp, (int)occ};
      }
      return {dp, 0};
    };
    if (k == 1) {
      // Spoke plus loop keeps the interior instance crossing-complete.
      Strand spoke;
      spoke.ends = {AttachPoint{true, arc_instance(fresh[0]), 0}};
      spoke.via = {ivid};
      jc->strands.push_back(spoke);
      Strand loop;
      loop.closed = true;
      loop.via = {ivid};
      jc->strands.push_back(loop);
    } else {
      Strand full;
      full.ends = {AttachPoint{true, arc_instance(fresh[0]), 0},
                   AttachPoint{true, arc_instance(fresh[k - 1]), 0}};
      full.via = {ivid};
      jc->strands.push_back(full);
      for (int i = 1; i + 1 < k; ++i) {
        Strand half;
        half.ends = {AttachPoint{true, arc_instance(fresh[i]), 0}};
        half.via = {ivid};
        jc->strands.push_back(half);
      }
    }
    if (!diagram_valid(nd)) {
      // Rare collision with an existing structure: skip this push.
      d.next_fresh_dp = nd.next_fresh_dp;
      continue;
    }
    d = nd;
    budget -= k;
    (void)close_side;
  }
  assert(diagram_valid(d));
  return d;
}

}  // namespace creases::branched
