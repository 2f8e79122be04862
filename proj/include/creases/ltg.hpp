#pragma once

#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "creases/config.hpp"
#include "creases/weighting.hpp"

namespace creases {

// Labeled tree graph of a weighted corner-free configuration: regions as
// vertices labeled by Euler characteristic, curves as edges labeled by
// weight.
struct Ltg {
  struct Vertex {
    RegionId id;
    int chi;
    std::vector<int> edges;  // indices into `edges`
  };
  struct Edge {
    CurveId id;
    int weight;
    int ends[2];  // vertex indices
  };
  std::vector<Vertex> vertices;
  std::vector<Edge> edges;

  int vertex_index(const RegionId& id) const;
  int edge_index(const CurveId& id) const;
  int other_end(int edge, int vertex) const;
};

struct CorneredConfig : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

Ltg build_ltg(const CreaseConfig& cfg, const Weighting& w);

// A consistent labeling: set of marked ("black square") curves such that
// every vertex with chi <= 0 is incident to exactly one marked edge.
struct Labeling {
  std::set<CurveId> marked;
};

struct NoLabelingFound : std::runtime_error {
  using std::runtime_error::runtime_error;
};

bool labeling_valid(const Ltg& ltg, const Labeling& l);

// Lexicographically least valid labeling by canonical edge order (edges
// ordered as in `ltg.edges`, which build_ltg emits in canonical order;
// "least" compares the characteristic vector, unmarked first). Throws
// NoLabelingFound when no valid labeling exists.
Labeling black_square_labeling(const Ltg& ltg);

// All valid labelings (exhaustive; intended for small graphs in tests).
std::vector<Labeling> all_labelings(const Ltg& ltg);

// Height layout. Heights are distinct integer levels; each edge records
// its endpoint interval and a slope sign (+1 when the rising direction
// agrees with the edge weight's sign pattern of the vertex types).
struct LtgLayout {
  std::map<RegionId, int> height;
  struct EdgeSpan {
    CurveId id;
    int lo, hi;
    int slope_sign;
  };
  std::vector<EdgeSpan> spans;

  // Decomposition bookkeeping used downstream by the stacking step:
  // maximal alternating paths in decomposition order plus, per nested
  // component or leaf, where it attaches.
  struct Path {
    std::vector<RegionId> vertices;  // bottom to top
    std::vector<CurveId> edges;      // vertices.size()-1 entries
  };
  std::vector<Path> paths;
  struct Attachment {
    RegionId host;        // vertex on an earlier path
    CurveId connecting;   // edge from host into the component / leaf
    CurveId nesting;      // same-direction path edge at host (empty for leaves
                          // attached beyond a path endpoint)
    int path_index;       // nested component's first path; -1 for a leaf
    RegionId leaf;        // set for leaf attachments
  };
  std::vector<Attachment> attachments;
};

// Lay the tree out with distinct integer heights satisfying the star
// conditions; later paths nest inside the interval support of the
// same-direction edge at their attachment vertex.
LtgLayout layout_ltg(const Ltg& ltg, const Labeling& labeling);

struct StarCheck {
  std::vector<std::string> violations;
  bool ok() const { return violations.empty(); }
};

StarCheck verify_star(const Ltg& ltg, const LtgLayout& layout);

}  // namespace creases
