#pragma once

// Solvers for N(U+0) = N(a/b), N(U+t/w) = N(z/v) with |t| > 1, where U is a
// generalized M-tangle: the rational case (a), the sum case (b) with its
// finite divisor search (t, p, pb-qa all divide z -+ a), the two-parameter
// non-band families over (v', h), and the (-1/3, -4/3) move solver they
// induce.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "tanglekit/expr.hpp"
#include "tanglekit/two_bridge.hpp"

namespace tanglekit::solver {

struct GenMSolution {
  char case_tag;  // 'a' or 'b'
  // case (a)
  std::int64_t b_prime = 0;
  // case (b)
  std::int64_t sigma = 0, eps = 0, p = 0, q = 0, x = 0;  // x = pb - qa
  std::int64_t d = 0, j = 0, h = 0;
  bool swapped = false;
  ExprPtr U;
  std::optional<TangleFraction> U_value;
};

// Fixed move t/w with |t| > 1; returns every generalized-M solution U.
// Rejects |t| <= 1 and unreduced inputs.
std::vector<GenMSolution> solve_generalized_M(const TangleFraction& ab,
                                              const TangleFraction& tw,
                                              const TangleFraction& zv);

struct NonBandInstance {
  std::int64_t v_prime, h;
  TangleFraction tw;  // (z-2k v')/(v'-(z-2k v')h)
  TangleFraction U;   // 2k/(2k h + 1)
};

struct NonBandFamily {
  std::int64_t k;
  TangleFraction zv;
  std::vector<std::int64_t> residues;  // v' = +-v^{+-1} mod z, in [0,z)
  std::string tw_form;                 // printed closed forms
  std::string u_form;

  std::vector<NonBandInstance> instances(std::int64_t h_lo,
                                         std::int64_t h_hi) const;
};

// The rational solution family for N(U+0) = N(2k), N(U+t/w) = N(z/v) with
// z odd (knot product).
NonBandFamily solve_nonband_family(std::int64_t k, const TangleFraction& zv);

struct PsiSolution {
  std::int64_t v_prime, h;
  TangleFraction U_zero;  // solution of the translated (0,9/5) system
  TangleFraction U_psi;   // U_zero o (1,2,0)
};

// Solutions of N(U+(-1/3)) = N(2k), N(U+(-4/3)) = N(z/v); empty means no
// solution.  Complete for every k: the move is (0,9/w)-equivalent with
// w = 5 mod 9, never +-1 mod 9, so all solutions are rational.
std::vector<PsiSolution> psi_move_solve(std::int64_t k,
                                        const TangleFraction& zv);

struct DivisorScanHit {
  std::int64_t sigma, eps, t, p, x, q;
  bool closure_match;
};

// Exhaustive case-(b) scan over factorizations t*p*(pb-qa) = sigma*z - eps*a
// for the substrate N(2k), all |t|,|p|,|pb-qa| > 1: non-rational candidate
// solutions.  An empty result certifies only rational families exist.
std::vector<DivisorScanHit> scan_nonrational_genM(std::int64_t k,
                                                  const TangleFraction& zv);

}  // namespace tanglekit::solver
