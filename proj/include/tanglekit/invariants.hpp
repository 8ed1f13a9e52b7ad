#pragma once

// Orientation-aware diagram invariants: component tracing, crossing signs,
// writhe, linking number, and the link signature from a checkerboard
// Goeritz matrix with the Gordon-Litherland orientation correction.

#include <array>
#include <cstdint>
#include <vector>

#include "tanglekit/diagram.hpp"

namespace tanglekit::oracle {

// Strand passes run along the two diagonals of a crossing:
// diagonal 0 through slots {NW, SE}, diagonal 1 through {SW, NE}.
// sign = +1 means diagonal 1 is the overpass.
inline int diagonal_of_slot(int slot) {
  return (slot == kSlotNW || slot == kSlotSE) ? 0 : 1;
}

struct Analysis {
  int traced = 0;      // components that visit crossings
  int n_comp = 0;      // traced + free loops
  // Per crossing and diagonal: the component id and the exit slot under the
  // forward (as-traced) direction.
  std::array<std::vector<int>, 2> pass_comp;
  std::array<std::vector<std::int8_t>, 2> fwd_exit;
};

Analysis analyze(const Diagram& d);

// An orientation is a flip flag per traced component.
using Orientation = std::vector<bool>;

int crossing_sign(const Diagram& d, const Analysis& a, const Orientation& o,
                  int crossing);
int writhe(const Diagram& d, const Analysis& a, const Orientation& o);

// Half the signed sum over crossings involving both components; requires
// exactly two components.
int linking_number(const Diagram& d, const Analysis& a, const Orientation& o);

// Gordon-Litherland: sig(Goeritz) minus the type II correction.
int signature(const Diagram& d, const Analysis& a, const Orientation& o);

// |det L| from the Goeritz matrix; 0 for split diagrams.
std::int64_t link_determinant(const Diagram& d);

}  // namespace tanglekit::oracle
