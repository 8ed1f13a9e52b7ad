#include "tanglekit/moves.hpp"

#include <numeric>

namespace tanglekit::solver {

std::optional<std::int64_t> move_equiv_zero(std::int64_t t, std::int64_t w,
                                            std::int64_t c, std::int64_t d) {
  TangleFraction tw(t, w), cd(c, d);
  if (tw.num() == cd.num() && tw.den() == cd.den() && tw.num() == 0)
    return 0;  // degenerate equal zero moves
  if (cd.num() == tw.num()) {
    // d = w - h t
    std::int64_t diff = tw.den() - cd.den();
    if (tw.num() != 0 && diff % tw.num() == 0) return diff / tw.num();
    return std::nullopt;
  }
  if (cd.num() == -tw.num()) {
    // c/d = t/(-d): need -d = w - h t
    std::int64_t diff = tw.den() + cd.den();
    if (tw.num() != 0 && diff % tw.num() == 0) return diff / tw.num();
    return std::nullopt;
  }
  return std::nullopt;
}

ZeroForm move_to_zero_form(const Move& m) {
  const std::int64_t f1 = m.P.num(), g1 = m.P.den();
  const std::int64_t f2 = m.R.num(), g2 = m.R.den();
  // smallest non-negative e1 with integral i1 = (g1*e1 - 1)/f1; for f1 = 0
  // (P an integer multiple of the 0 tangle) g1 = 1 forces e1 = 1, i1 free.
  ZeroForm out{};
  if (f1 == 0) {
    out.e1 = 1;
    out.i1 = 0;
  } else {
    std::int64_t abs_f1 = f1 < 0 ? -f1 : f1;
    for (std::int64_t e1 = 0;; ++e1) {
      if (((g1 * e1 - 1) % abs_f1 + abs_f1) % abs_f1 == 0) {
        out.e1 = e1;
        out.i1 = (g1 * e1 - 1) / f1;
        break;
      }
    }
  }
  out.t_raw = g1 * f2 - g2 * f1;
  out.w_raw = out.e1 * g2 - out.i1 * f2;
  // canonical representative of the equivalence family
  std::int64_t t = out.t_raw, w = out.w_raw;
  if (t < 0) {
    t = -t;
    w = -w;
  }
  if (t != 0) w = ((w % t) + t) % t;
  out.t = t;
  out.w = w;
  return out;
}

}  // namespace tanglekit::solver
