#include "tanglekit/pathway.hpp"

#include <stdexcept>

#include "tanglekit/band_solver.hpp"

namespace tanglekit::solver {

namespace {

std::string torus_label(std::int64_t j) {
  if (j == 0) return "unlink";
  if (j == 1) return "unknot";
  if (j == 2) return "hopf";
  if (j == 3) return "trefoil";
  return "T(2," + std::to_string(j) + ")";
}

}  // namespace

std::vector<PathwayStep> pathway_check(std::int64_t k, std::int64_t w) {
  if (k < 1) throw std::domain_error("k >= 1 required");
  std::vector<PathwayStep> out;
  for (std::int64_t j = 2 * k; j >= 1; --j) {
    PathwayStep step;
    step.from = torus_label(j);
    step.to = torus_label(j - 1);
    if (j == 3) {
      step.solved_here = true;
      step.solution = "U = " + solve_trefoil_hopf(w).to_string();
    } else if (j == 2) {
      step.citation = "external: [Thompson], [HS]";
    } else if (j == 1) {
      step.citation = "external: [Sc]";
    } else if (j == 4) {
      step.citation = "external: [HS]";
    } else {
      step.citation = "external: [SIV]";
    }
    out.push_back(std::move(step));
  }
  return out;
}

}  // namespace tanglekit::solver
