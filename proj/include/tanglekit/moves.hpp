#pragma once

// Rational tangle surgery moves (P,R) and their reduction to (0, t/w) form.

#include <cstdint>
#include <optional>

#include "tanglekit/fraction.hpp"

namespace tanglekit::solver {

struct Move {
  TangleFraction P, R;
  Move(const TangleFraction& p, const TangleFraction& r) : P(p), R(r) {
    if (p == r) throw std::domain_error("(P,R) move needs P != R");
  }
};

// (0, t/w) is equivalent to (0, c/d) iff c/d = t/(w - h*t) for some integer
// h (as reduced fractions, joint sign flip allowed).  Returns that h.
std::optional<std::int64_t> move_equiv_zero(std::int64_t t, std::int64_t w,
                                            std::int64_t c, std::int64_t d);

struct ZeroForm {
  std::int64_t t_raw, w_raw;  // one Bezout witness' (t,w)
  std::int64_t e1, i1;        // the witness: g1*e1 - f1*i1 = 1
  std::int64_t t, w;          // canonical family member: t > 0, w in [0,t)
};

// Reduction of an (f1/g1, f2/g2) move to an equivalent (0, t/w) move.
ZeroForm move_to_zero_form(const Move& m);

}  // namespace tanglekit::solver
