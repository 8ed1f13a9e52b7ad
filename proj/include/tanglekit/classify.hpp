#pragma once

// Oracle-backed identification of numerator closures: match component count,
// determinant, Jones, signature, and linking data against canonical diagrams
// of two-bridge fractions.  Ties or misses come back Unrecognized rather
// than guessed.

#include <optional>
#include <string>
#include <vector>

#include "tanglekit/bracket.hpp"
#include "tanglekit/diagram.hpp"
#include "tanglekit/expr.hpp"
#include "tanglekit/invariants.hpp"
#include "tanglekit/two_bridge.hpp"

namespace tanglekit::oracle {

struct OrientationClass {
  Orientation flips;
  int writhe = 0;
  int sigma = 0;
  int lk = 0;  // 0 unless two components
  LaurentPoly jones;
};

struct LinkInvariants {
  int n_comp = 0;
  std::int64_t det = 0;
  LaurentPoly bracket;
  // one entry for knots, two (relative orientations) for 2-component links,
  // empty beyond two components
  std::vector<OrientationClass> classes;
};

LinkInvariants invariants_of(const Diagram& d);

// Cached invariants of the canonical alternating diagram of b(p,q).
const LinkInvariants& candidate_invariants(std::int64_t p, std::int64_t q);

struct ClassifyResult {
  bool recognized = false;
  TwoBridgeLink link = TwoBridgeLink::unknot();
  std::string reason;  // set when unrecognized

  std::string to_string() const;
};

ClassifyResult classify_diagram(const Diagram& d);
ClassifyResult classify_closure(const ExprPtr& e, int crossing_cap = -1);

// Oracle check of one rational tangle surgery N(U+P)=left, N(U+R)=right.
// Orientations of the two closures are matched strand-by-strand on the
// shared part of the diagram (coherence off the surgered disk); lk values
// are reported for 2-component sides under that coherent orientation.
struct SurgeryCheck {
  bool ok = false;
  bool cap_exceeded = false;
  ClassifyResult left, right;
  bool coherent_found = false;
  std::optional<int> left_lk, right_lk;
  std::optional<int> left_sigma, right_sigma;  // under the coherent pair
  std::string detail;
};

SurgeryCheck verify_surgery(const ExprPtr& u, const ExprPtr& p,
                            const ExprPtr& r,
                            const TwoBridgeLink& expected_left,
                            const TwoBridgeLink& expected_right,
                            std::optional<int> expected_left_lk,
                            std::optional<int> expected_right_lk,
                            int crossing_cap = -1);

}  // namespace tanglekit::oracle
