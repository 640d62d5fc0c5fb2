#pragma once

#include <array>
#include <map>
#include <string>
#include <vector>

#include "khoskein/errors.hpp"

namespace khoskein {

// One crossing of an oriented diagram. The quadruple (a,b,c,d) lists the four
// arc ends around the crossing starting from the incoming under-strand a, so
// the under-strand runs a -> c. The sign is +1 when the over-strand runs
// b -> d and -1 when it runs d -> b; this is the reading of the PD convention
// that reproduces the reference homology tables (see the golden tests).
struct Crossing {
  std::array<int, 4> quad{};
  int sign = 0;
  friend bool operator==(const Crossing&, const Crossing&) = default;
};

// A vertex of the resolution cube: one bit per crossing, '0' or '1'.
struct Resolution {
  std::string bits;
};

// Circles of a fully resolved diagram. Edge-bearing circles are indexed
// 0..edge_circle_count-1 ordered by their minimal edge id; crossing-free
// circles of the diagram occupy the remaining indices.
struct CircleSet {
  int count = 0;
  int edge_circle_count = 0;
  std::map<int, int> circle_of_edge;
};

class LinkDiagram {
 public:
  std::vector<Crossing> crossings;
  int free_circles = 0;

  // Derived component data. Edge-bearing components are indexed by ascending
  // minimal edge id; free circles follow them.
  std::map<int, int> component_of_edge;
  int n_edged_components = 0;
  std::vector<int> ordering;           // beta-order: position -> component index
  std::map<int, int> basepoints;       // edged component -> basepoint edge id

  int n_crossings() const { return static_cast<int>(crossings.size()); }
  int n_components() const { return n_edged_components + free_circles; }
  int n_plus() const;
  int n_minus() const;

  // Position of a component in the beta-ordering (0 = first / topmost).
  int order_position(int component) const;

  int under_component(int p) const;
  int over_component(int p) const;

  // True when the head (arrival end) of the arc in this slot is here.
  bool occ_is_head(int crossing, int slot) const;

  std::vector<int> component_edges(int component) const;
  std::vector<int> all_edges() const;

  LinkDiagram with_ordering(const std::vector<int>& new_ordering) const;
  LinkDiagram with_basepoint(int component, int edge) const;

  friend bool operator==(const LinkDiagram&, const LinkDiagram&) = default;
};

// Smoothing result carrying the arc correspondence needed to match circles
// between the cube of the smoothed diagram and the cube of the original.
struct SmoothResult {
  LinkDiagram diagram;
  // Surviving old arc id -> new arc id. Arcs absorbed into closed circles or
  // deleted do not appear.
  std::map<int, int> edge_map;
  // Old arcs of each circle closed off by the smoothing, sorted by minimal
  // member; the k-th entry becomes free circle index
  // (old free_circles + k) of the new diagram.
  std::vector<std::vector<int>> closed_classes;
};

LinkDiagram parse_pd(const std::string& text);
std::string serialize(const LinkDiagram& d);
std::string diagram_to_json(const LinkDiagram& d);

CircleSet resolve(const LinkDiagram& d, const Resolution& r);

LinkDiagram switch_crossing(const LinkDiagram& d, int p);

// Orientation-preserving smoothing (the Conway L0): 0-smoothing at a positive
// crossing, 1-smoothing at a negative one. Component ordering and basepoints
// are inherited; a merged component takes the number and basepoint of the
// smaller-in-order component involved.
SmoothResult smooth_oriented(const LinkDiagram& d, int p);
LinkDiagram smooth_crossing(const LinkDiagram& d, int p);

// The other smoothing of the crossing. The result is not orientable by
// inheritance; every component through the crossing is reoriented to follow
// the original direction of its lowest-id arc.
SmoothResult smooth_disoriented(const LinkDiagram& d, int p);

std::vector<int> mixed_crossings(const LinkDiagram& d);
std::vector<int> cmix(const LinkDiagram& d);

// Sub-diagram of one component: crossings with any other component are
// removed and the strand runs straight through.
LinkDiagram extract_component(const LinkDiagram& d, int component);

LinkDiagram disjoint_union(const LinkDiagram& a, const LinkDiagram& b);

}  // namespace khoskein
