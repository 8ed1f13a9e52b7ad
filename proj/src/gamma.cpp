#include "tanglekit/gamma.hpp"

#include <cstdlib>
#include <stdexcept>

#include "tanglekit/classify.hpp"

namespace tanglekit::solver {

namespace {

bool pair_is(std::int64_t p, std::int64_t q, std::int64_t a, std::int64_t b) {
  return (p == a && q == b) || (p == -a && q == -b);
}

// (p,q) = +-(F_i, F_{i+1}) or +-(F_{i+1}, -F_i): the trivial gamma_b set on
// the figure-eight surface m = 1, n = -1.
bool fig8_trivial(std::int64_t p, std::int64_t q) {
  std::int64_t a = 0, b = 1;  // F_0, F_1
  while (true) {
    if (pair_is(p, q, a, b) || pair_is(p, q, b, -a)) return true;
    std::int64_t c = a + b;
    if (b > (std::int64_t(1) << 61) / 2) return false;
    a = b;
    b = c;
    if (a > std::llabs(p) && a > std::llabs(q)) return false;
  }
}

// The six-pair set for the trefoil surface m = n = 1.
bool trefoil_trivial(std::int64_t p, std::int64_t q) {
  return pair_is(p, q, 0, 1) || pair_is(p, q, 1, 0) || pair_is(p, q, 1, 1) ||
         pair_is(p, q, 1, -1) || pair_is(p, q, 2, -1) || pair_is(p, q, 1, -2);
}

}  // namespace

bool gamma_unknot_classify(const GammaParams& g) {
  if (g.m == 0 || g.n == 0)
    throw std::domain_error("gamma_b needs m, n nonzero");
  if (g.p == 0 && g.q == 0) return false;
  // (1): small linking with both annulus cores
  if (std::llabs(g.p) <= 1 && std::llabs(g.q) <= 1) return true;
  // (2),(3) and their (m,p)<->(n,q) swaps: trivial for any other parameter
  if (g.n == 1 && pair_is(g.p, g.q, 1, -2)) return true;
  if (g.n == -1 && pair_is(g.p, g.q, 1, 2)) return true;
  if (g.m == 1 && pair_is(g.p, g.q, -2, 1)) return true;
  if (g.m == -1 && pair_is(g.p, g.q, 2, 1)) return true;
  // |m| = |n| = 1: the full classifications, transported by the symmetries
  // (m,n,p,q) -> (n,m,q,p) and (m,n,p,q) -> (-m,-n,p,-q).
  if (std::llabs(g.m) == 1 && std::llabs(g.n) == 1) {
    if (g.m == 1 && g.n == 1) return trefoil_trivial(g.p, g.q);
    if (g.m == -1 && g.n == -1) return trefoil_trivial(g.p, -g.q);
    if (g.m == 1 && g.n == -1) return fig8_trivial(g.p, g.q);
    return fig8_trivial(g.q, g.p);  // m = -1, n = 1
  }
  return false;
}

ObstructionReport signature_obstruction(const OrientedLinkSpec& l,
                                        const OrientedLinkSpec& lb,
                                        int crossing_cap) {
  auto sigma_of = [&](const OrientedLinkSpec& spec) -> int {
    using namespace tanglekit::oracle;
    Diagram d = diagram_of_closure(TangleExpr::leaf(spec.link.fraction()),
                                   crossing_cap);
    if (d.crossings() == 0) return 0;
    Analysis a = analyze(d);
    if (spec.link.components() == 2 && spec.lk) {
      for (int cls = 0; cls < 2; ++cls) {
        Orientation o(a.traced, false);
        if (cls == 1 && a.traced >= 2) o[1] = true;
        if (linking_number(d, a, o) == *spec.lk) return signature(d, a, o);
      }
      throw std::domain_error("requested linking number is not realizable");
    }
    return signature(d, a, Orientation(a.traced, false));
  };
  ObstructionReport rep{};
  rep.sigma_l = sigma_of(l);
  rep.sigma_lb = sigma_of(lb);
  rep.verdict = std::abs(rep.sigma_l - rep.sigma_lb) >= 2
                    ? Obstruction::Obstructed
                    : Obstruction::Passes;
  return rep;
}

}  // namespace tanglekit::solver
