#pragma once

// Shared test fixtures: the running thirteen-curve example, the H-shaped
// five-curve configuration, and small helpers.

#include <map>
#include <random>
#include <string>
#include <vector>

#include "creases/config.hpp"

namespace fixtures {

using creases::CreaseConfig;
using creases::Region;

// Thirteen curves: eight disk-bounding circles (weight +1), four weight -3
// curves and one weight +5 curve, arranged as two pants pairs hanging off
// a central chain.
inline CreaseConfig thirteen_curve_example() {
  CreaseConfig cfg;
  for (int i = 1; i <= 13; ++i)
    cfg.curves.push_back({"g" + std::to_string(i), 0});
  auto add = [&](const std::string& id, std::vector<std::string> boundary) {
    Region r;
    r.id = id;
    for (auto& b : boundary) r.boundary.push_back(b);
    cfg.regions.push_back(r);
  };
  add("D1", {"g1"});
  add("D2", {"g2"});
  add("D3", {"g3"});
  add("D4", {"g4"});
  add("P5", {"g1", "g2", "g5"});
  add("P6", {"g3", "g4", "g6"});
  add("M", {"g5", "g6", "g7"});
  add("Mp", {"g7", "g8", "g9"});
  add("P8", {"g10", "g11", "g8"});
  add("P9", {"g12", "g13", "g9"});
  add("D10", {"g10"});
  add("D11", {"g11"});
  add("D12", {"g12"});
  add("D13", {"g13"});
  return cfg;
}

// Two pants joined along a middle curve, four disk-bounding curves.
inline CreaseConfig h_configuration() {
  CreaseConfig cfg;
  for (auto id : {"g1", "g2", "g3", "g4", "g5"})
    cfg.curves.push_back({id, 0});
  cfg.regions = {{"D1", {"g1"}},
                 {"D2", {"g2"}},
                 {"D3", {"g3"}},
                 {"D4", {"g4"}},
                 {"PL", {"g1", "g2", "g5"}},
                 {"PR", {"g3", "g4", "g5"}}};
  return cfg;
}

// Spider with legs 2, 2, 1: the five-curve tree whose center has one leaf.
inline CreaseConfig spider221() {
  CreaseConfig cfg;
  for (auto id : {"e1", "f1", "e2", "f2", "g"})
    cfg.curves.push_back({id, 0});
  cfg.regions = {{"C", {"e1", "e2", "g"}}, {"M1", {"e1", "f1"}},
                 {"L1", {"f1"}},           {"M2", {"e2", "f2"}},
                 {"L2", {"f2"}},           {"L3", {"g"}}};
  return cfg;
}

// Shuffle all ids with a seeded generator; preserves the structure.
inline CreaseConfig shuffle_ids(const CreaseConfig& cfg, unsigned seed) {
  std::mt19937 rng(seed);
  std::vector<std::string> cids, rids;
  for (const auto& c : cfg.curves) cids.push_back(c.id);
  for (const auto& r : cfg.regions) rids.push_back(r.id);
  auto scramble = [&](std::vector<std::string> ids, const std::string& prefix) {
    std::vector<std::string> fresh;
    for (size_t i = 0; i < ids.size(); ++i)
      fresh.push_back(prefix + std::to_string(i));
    std::shuffle(fresh.begin(), fresh.end(), rng);
    std::map<std::string, std::string> m;
    for (size_t i = 0; i < ids.size(); ++i) m[ids[i]] = fresh[i];
    return m;
  };
  auto cm = scramble(cids, "x");
  auto rm = scramble(rids, "y");
  CreaseConfig out;
  for (const auto& c : cfg.curves) out.curves.push_back({cm[c.id], c.corner_count});
  std::shuffle(out.curves.begin(), out.curves.end(), rng);
  for (const auto& r : cfg.regions) {
    Region nr;
    nr.id = rm[r.id];
    for (const auto& b : r.boundary) nr.boundary.push_back(cm[b]);
    std::shuffle(nr.boundary.begin(), nr.boundary.end(), rng);
    out.regions.push_back(nr);
  }
  std::shuffle(out.regions.begin(), out.regions.end(), rng);
  for (const auto& [cid, cd] : cfg.corner_data) {
    creases::CornerData nd;
    nd.reference_side = rm[cd.reference_side];
    nd.corners = cd.corners;
    out.corner_data[cm[cid]] = nd;
  }
  return out;
}

}  // namespace fixtures
