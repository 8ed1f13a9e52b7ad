#pragma once

// Coherent band surgery between the genus-one two-bridge knots
// N((4mn-1)/2m) and the (2,2k)-torus links: the four solution cases, the
// signature exclusion for linking number +k with |k| > 2, and the derived
// catenane solvers.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "tanglekit/expr.hpp"
#include "tanglekit/two_bridge.hpp"

namespace tanglekit::solver {

struct OrientedTorusLink2 {
  std::int64_t k;   // the torus link N(2k)
  std::int64_t lk;  // its linking number, +-k
};

enum class BandOutcome {
  Solutions,       // the listed cases apply (possibly none matched k)
  Obstructed,      // lk = +k, |k| > 2: signature obstruction
  Unknown,         // lk = +k, |k| = 2: open in the source material
};

struct BandSolution {
  int case_id;              // 1..4
  std::string case_label;   // "k=m", "k=n", "k=m+n+1", "k=m+n-1"
  bool swapped;             // the reversed-sum variant of cases 3/4
  bool symmetric_dup;       // m = n: the swap coincides and is emitted once
  ExprPtr U;
  std::optional<TangleFraction> U_value;  // set when U is rational
};

struct BandSolveResult {
  BandOutcome outcome;
  std::string reason;
  std::vector<BandSolution> solutions;
  TangleFraction substrate{0, 1};  // (4mn-1)/2m
};

// Solves N(U+0) = N((4mn-1)/2m), N(U+1/w) = N(2k) with the target's
// orientation, assuming the surgery is a coherent banding.  m = 0 or n = 0
// is rejected (out of scope here); |k| <= 1 targets are solvable for either
// orientation of the torus link.
BandSolveResult band_solve_coherent(std::int64_t m, std::int64_t n,
                                 std::int64_t w,
                                 const OrientedTorusLink2& target);

// Crossing number of N((4mn-1)/2m): 2(|m|+|n|)-1 for mn > 0 and
// 2(|m|+|n|) for mn < 0.
std::int64_t crossing_number_genus1(std::int64_t m, std::int64_t n);

struct XerFamily {
  std::int64_t m, n;
  ExprPtr U;
  std::optional<TangleFraction> U_value;
  TangleFraction product;  // (4mn-1)/2m
  TwoBridgeLink product_link = TwoBridgeLink::unknot();
  std::optional<KnotName> product_name;
  bool symmetric_dup;  // m = n: ordered swap coincides
};

// N(U+0) = N(2k) with lk -k, N(U+1/w) a (2k+1)-crossing knot: enumerates
// all (m,n) with mn > 0 and |m+n| = k+1, both chirality classes, with
// U = (-1/(2m-1) + -1/(2n-1)) o (-w-1, 0) and the swapped sum.
std::vector<XerFamily> solve_2k_to_2k1(std::int64_t k, std::int64_t w);

// N(U+0) = trefoil, N(U+1/w) = Hopf link: U = 3/(-3w-2).
TangleFraction solve_trefoil_hopf(std::int64_t w);

}  // namespace tanglekit::solver
