#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <variant>
#include <vector>

namespace creases::branched {

// Folding assignments over (inner, middle, outer). The assignment with a
// single positive disk-bounding curve cannot occur and is rejected at
// parse/validation time.
enum class Folding { F1, F2, F3 };

std::string folding_name(Folding f);

// A vertex instance on the branching locus: double point id plus which of
// its two passages along the words.
struct InstanceRef {
  int dp = 0;
  int occ = 0;  // 0 or 1, order of appearance across the words
  auto operator<=>(const InstanceRef&) const = default;
};

// Where an interior strand meets the component's locus boundary: either
// at a vertex instance or part-way along a locus edge next to one (after
// it by default, before it when `before` is set).
struct AttachPoint {
  bool at_vertex = true;
  InstanceRef anchor;
  double frac = 0;     // in (0,1) for mid-edge attaches
  bool before = false;
  auto operator<=>(const AttachPoint&) const = default;
};

struct InteriorVertex {
  int id = 0;  // unique within the component
  int dp = 0;  // counted as an instance of this double point
};

// A visible stretch of the locus inside the component: a walk from one
// attach point to another (or ending at an interior vertex, or closed),
// passing through interior vertices.
struct Strand {
  std::vector<AttachPoint> ends;  // 0 (closed), 1 (half strand) or 2
  std::vector<int> via;            // interior vertex ids along the strand
  bool closed = false;
};

struct Component {
  std::string name;      // "A+", "A-", "D+", "D-"
  bool is_disk = false;  // disk or annulus
  bool has_b_boundary = false;
  int word = 0;  // index of the locus word forming the L-side boundary
  std::vector<InteriorVertex> ivertices;
  std::vector<Strand> strands;
};

struct BranchedDiagram {
  Folding folding = Folding::F1;
  // One cyclic id sequence per branching-locus component; position 0 of
  // each word is its basepoint slot.
  std::vector<std::vector<int>> words;
  std::vector<Component> components;
  int next_fresh_dp = 1;

  // Occurrence bookkeeping: per dp, its one or two (word, position)
  // passages in encounter order.
  std::map<int, std::vector<std::pair<int, int>>> passages() const;
  int double_point_count() const;
  const Component* find_component(const std::string& name) const;
};

// Edge-germ count at each interior vertex: passing strands contribute
// two, a half-strand terminus one.
std::map<int, int> strand_germs(const Component& comp);

struct DiagramViolation {
  std::string detail;
};

std::vector<DiagramViolation> validate_diagram(const BranchedDiagram& d);
bool diagram_valid(const BranchedDiagram& d);

// Lexicographic complexity (N1, N2): counts of vertex instances of the
// trace graph that are not / are boundary-close in their component.
struct Complexity {
  long n1 = 0;
  long n2 = 0;
  auto operator<=>(const Complexity&) const = default;
};

Complexity compute_complexity(const BranchedDiagram& d);

// The boundary-close instances of one component.
std::set<InstanceRef> partial_close_vertices(const BranchedDiagram& d,
                                             const std::string& component);

// Canonical minimal diagrams.
enum class ModelLabel { Saucer, Mushroom, Toric };
BranchedDiagram canonical_model(ModelLabel label);

}  // namespace creases::branched
