#pragma once

// Test-only oracles kept independent of the library implementations they
// check: a Pruefer-sequence tree generator with naive dedup for the
// enumeration counts, and a brute-force linear solver for weightings.

#include <algorithm>
#include <cmath>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "creases/config.hpp"

namespace oracles {

using creases::CreaseConfig;

// All labeled trees on n vertices via Pruefer decoding, reduced to one
// representative per isomorphism class with a naive quadratic refinement
// check (degree-sequence refinement plus backtracking matching).
inline bool trees_isomorphic(const std::vector<std::pair<int, int>>& a,
                             const std::vector<std::pair<int, int>>& b, int n) {
  if (a.size() != b.size()) return false;
  std::vector<std::vector<int>> adj_a(n), adj_b(n);
  for (auto [u, v] : a) {
    adj_a[u].push_back(v);
    adj_a[v].push_back(u);
  }
  for (auto [u, v] : b) {
    adj_b[u].push_back(v);
    adj_b[v].push_back(u);
  }
  // Backtracking isomorphism via rooted tries on all root pairs.
  std::function<bool(int, int, int, int, std::map<std::pair<int, int>, bool>&)>
      match = [&](int ra, int pa, int rb, int pb,
                  std::map<std::pair<int, int>, bool>& memo) -> bool {
    std::vector<int> ka, kb;
    for (int x : adj_a[ra])
      if (x != pa) ka.push_back(x);
    for (int x : adj_b[rb])
      if (x != pb) kb.push_back(x);
    if (ka.size() != kb.size()) return false;
    // Try all assignments of children (sizes are tiny).
    std::sort(kb.begin(), kb.end());
    do {
      bool ok = true;
      for (size_t i = 0; i < ka.size() && ok; ++i)
        ok = match(ka[i], ra, kb[i], rb, memo);
      if (ok) return true;
    } while (std::next_permutation(kb.begin(), kb.end()));
    return false;
  };
  for (int rb = 0; rb < n; ++rb) {
    std::map<std::pair<int, int>, bool> memo;
    if (match(0, -1, rb, -1, memo)) return true;
  }
  return false;
}

inline std::vector<std::vector<std::pair<int, int>>> all_trees_upto_iso(int n) {
  std::vector<std::vector<std::pair<int, int>>> reps;
  if (n == 1) return {{}};
  if (n == 2) return {{{0, 1}}};
  std::vector<int> pruefer(n - 2, 0);
  while (true) {
    // Decode.
    std::vector<int> degree(n, 1);
    for (int x : pruefer) degree[x]++;
    std::vector<std::pair<int, int>> edges;
    std::set<int> leaves;
    for (int i = 0; i < n; ++i)
      if (degree[i] == 1) leaves.insert(i);
    std::vector<int> deg = degree;
    std::set<int> lv = leaves;
    for (int x : pruefer) {
      int leaf = *lv.begin();
      lv.erase(lv.begin());
      edges.push_back({leaf, x});
      if (--deg[x] == 1) lv.insert(x);
    }
    int u = *lv.begin();
    int v = *std::next(lv.begin());
    edges.push_back({u, v});

    bool fresh = true;
    for (const auto& rep : reps)
      if (trees_isomorphic(rep, edges, n)) {
        fresh = false;
        break;
      }
    if (fresh) reps.push_back(edges);

    // Next Pruefer sequence.
    int i = (int)pruefer.size() - 1;
    while (i >= 0 && pruefer[i] == n - 1) pruefer[i--] = 0;
    if (i < 0) break;
    pruefer[i]++;
  }
  return reps;
}

inline CreaseConfig config_from_edges(const std::vector<std::pair<int, int>>& edges,
                                      int n) {
  CreaseConfig cfg;
  for (size_t e = 0; e < edges.size(); ++e)
    cfg.curves.push_back({"c" + std::to_string(e), 0});
  for (int v = 0; v < n; ++v) cfg.regions.push_back({"K" + std::to_string(v), {}});
  for (size_t e = 0; e < edges.size(); ++e) {
    cfg.regions[edges[e].first].boundary.push_back("c" + std::to_string(e));
    cfg.regions[edges[e].second].boundary.push_back("c" + std::to_string(e));
  }
  return cfg;
}

// Naive Gaussian elimination over rationals for the corner-free weight
// system; returns the weights or nullopt.
inline std::optional<std::map<std::string, int>> brute_force_weights(
    const CreaseConfig& cfg) {
  int m = (int)cfg.curves.size();
  int n = (int)cfg.regions.size();
  std::map<std::string, int> col;
  for (int j = 0; j < m; ++j) col[cfg.curves[j].id] = j;
  std::vector<std::vector<double>> a(n, std::vector<double>(m + 1, 0));
  for (int i = 0; i < n; ++i) {
    for (const auto& c : cfg.regions[i].boundary) a[i][col[c]] += 1;
    a[i][m] = 2.0 - (double)cfg.regions[i].boundary.size();
  }
  int row = 0;
  std::vector<int> pivot_col(n, -1);
  for (int j = 0; j < m && row < n; ++j) {
    int p = -1;
    for (int i = row; i < n; ++i)
      if (std::abs(a[i][j]) > 1e-9) {
        p = i;
        break;
      }
    if (p < 0) continue;
    std::swap(a[p], a[row]);
    for (int i = 0; i < n; ++i) {
      if (i == row || std::abs(a[i][j]) < 1e-9) continue;
      double f = a[i][j] / a[row][j];
      for (int k = j; k <= m; ++k) a[i][k] -= f * a[row][k];
    }
    pivot_col[row] = j;
    row++;
  }
  for (int i = row; i < n; ++i)
    if (std::abs(a[i][m]) > 1e-6) return std::nullopt;  // inconsistent
  std::map<std::string, int> out;
  for (int i = 0; i < row; ++i) {
    int j = pivot_col[i];
    double v = a[i][m] / a[i][j];
    out[cfg.curves[j].id] = (int)std::llround(v);
  }
  if ((int)out.size() != m) return std::nullopt;  // underdetermined
  return out;
}

}  // namespace oracles
