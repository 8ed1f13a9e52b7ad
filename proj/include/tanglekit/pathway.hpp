#pragma once

// The stepwise unlinking pathway T(2,2k) -> T(2,2k-1) -> ... -> trefoil ->
// Hopf -> unknot -> unlink, annotated with the one step characterized here
// and citation markers for the externally characterized ones.

#include <cstdint>
#include <string>
#include <vector>

#include "tanglekit/fraction.hpp"

namespace tanglekit::solver {

struct PathwayStep {
  std::string from, to;     // torus-link labels
  bool solved_here = false; // solution produced by this solver
  std::string solution;     // U, when solved_here
  std::string citation;     // external characterization marker otherwise
};

std::vector<PathwayStep> pathway_check(std::int64_t k, std::int64_t w = -1);

}  // namespace tanglekit::solver
