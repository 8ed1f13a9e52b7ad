#pragma once

// Planar crossing diagrams for numerator closures of tangle expressions.
//
// Each crossing has four ports at compass slots NW, NE, SW, SE (local
// frame); the two strands run along the diagonals NW-SE and SW-NE.  The
// crossing sign says which diagonal is the overpass: +1 puts SW-NE on top
// (a right-handed horizontal / left-handed vertical half twist, matching a
// positive box entry), -1 puts NW-SE on top.
//
// Twist regions are laid out with horizontal twists appended on the right
// and vertical twists at the bottom; sums are glued side by side; the
// numerator closure joins the top pair and the bottom pair of endpoints.
// Twist boxes are expanded one crossing per entry unit and never
// simplified.

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "tanglekit/expr.hpp"

namespace tanglekit::oracle {

constexpr int kSlotNW = 0;
constexpr int kSlotNE = 1;
constexpr int kSlotSW = 2;
constexpr int kSlotSE = 3;

inline int opposite_slot(int s) { return 3 - s; }

struct CrossingCapExceeded : std::runtime_error {
  explicit CrossingCapExceeded(const std::string& what)
      : std::runtime_error(what) {}
};

struct Diagram {
  std::vector<std::int8_t> sign;   // per crossing, +1 or -1
  std::vector<std::int32_t> match; // port -> port along arcs; size 4*crossings
  int free_loops = 0;              // crossing-free closed components

  int crossings() const { return static_cast<int>(sign.size()); }
  int ports() const { return 4 * crossings(); }

  // One crossing per line: id, the four arc-neighbour port ids (NW NE SW SE),
  // and the crossing sign.
  std::string export_crossing_list() const;
};

// Default state-sum cap; override per call or with TANGLEKIT_CROSSING_CAP.
int default_crossing_cap();

// Numerator closure N(e).  Throws CrossingCapExceeded past the cap.
Diagram diagram_of_closure(const ExprPtr& e, int crossing_cap = -1);

// N(-1/p1 + -1/p2 + -1/p3): three vertical twist regions closed up.
Diagram pretzel_diagram(std::int64_t p1, std::int64_t p2, std::int64_t p3,
                        int crossing_cap = -1);

// The closures N(U+P) and N(U+R) built over one copy of U: crossings
// [0, shared) are U's in both diagrams, so orientations can be compared
// strand by strand outside the surgered disk.
struct ClosurePair {
  Diagram with_p;
  Diagram with_r;
  int shared = 0;
};
ClosurePair closure_pair(const ExprPtr& u, const ExprPtr& p, const ExprPtr& r,
                         int crossing_cap = -1);

}  // namespace tanglekit::oracle
