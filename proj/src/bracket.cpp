#include "tanglekit/bracket.hpp"

#include <numeric>

namespace tanglekit::oracle {

namespace {

// delta = -A^2 - A^{-2}
LaurentPoly delta_power(int k) {
  LaurentPoly d;
  d.add_term(2, -1);
  d.add_term(-2, -1);
  LaurentPoly out = LaurentPoly::one();
  for (int i = 0; i < k; ++i) out = out * d;
  return out;
}

}  // namespace

LaurentPoly kauffman_bracket(const Diagram& d) {
  const int c = d.crossings();
  if (c == 0) return delta_power(d.free_loops - 1);
  if (c > 30) throw CrossingCapExceeded("state sum over 2^c needs c <= 30");

  // Within-crossing port pairings for the two smoothings, calibrated so a
  // writhe +1 curl contributes -A^3: for a +1 crossing (SW-NE over) the
  // A-smoothing is the horizontal pairing {NW-NE, SW-SE}, the B-smoothing
  // the vertical one; a -1 crossing swaps them.
  const int n_ports = d.ports();
  std::vector<std::uint8_t> smooth[2];  // [0] = A, [1] = B
  smooth[0].resize(n_ports);
  smooth[1].resize(n_ports);
  constexpr int vertical[4] = {kSlotSW, kSlotSE, kSlotNW, kSlotNE};
  constexpr int horizontal[4] = {kSlotNE, kSlotNW, kSlotSE, kSlotSW};
  for (int i = 0; i < c; ++i) {
    const int* a_pair = d.sign[i] > 0 ? horizontal : vertical;
    const int* b_pair = d.sign[i] > 0 ? vertical : horizontal;
    for (int s = 0; s < 4; ++s) {
      smooth[0][4 * i + s] = static_cast<std::uint8_t>(4 * i + a_pair[s]);
      smooth[1][4 * i + s] = static_cast<std::uint8_t>(4 * i + b_pair[s]);
    }
  }
  std::vector<std::uint8_t> match(n_ports);
  for (int p = 0; p < n_ports; ++p)
    match[p] = static_cast<std::uint8_t>(d.match[p]);

  // counts[a][l]: states with a A-smoothings resolving into l loops
  std::vector<std::vector<std::int64_t>> counts(
      c + 1, std::vector<std::int64_t>(c + 2, 0));
  const std::uint64_t n_states = std::uint64_t(1) << c;
  for (std::uint64_t state = 0; state < n_states; ++state) {
    std::uint64_t vis[2] = {0, 0};
    int loops = 0;
    for (int p0 = 0; p0 < n_ports; ++p0) {
      if ((vis[p0 >> 6] >> (p0 & 63)) & 1) continue;
      int p = p0;
      do {
        vis[p >> 6] |= std::uint64_t(1) << (p & 63);
        int q = match[p];
        vis[q >> 6] |= std::uint64_t(1) << (q & 63);
        p = smooth[(state >> (q >> 2)) & 1][q];
      } while (p != p0);
      ++loops;
    }
    counts[c - __builtin_popcountll(state)][loops] += 1;
  }

  LaurentPoly bracket;
  for (int a = 0; a <= c; ++a) {
    for (int l = 1; l <= c + 1; ++l) {
      if (counts[a][l] == 0) continue;
      LaurentPoly term = delta_power(l - 1 + d.free_loops);
      for (const auto& [e, coeff] : term.terms())
        bracket.add_term(e + 2 * a - c, coeff * counts[a][l]);
    }
  }
  return bracket;
}

LaurentPoly jones_from_bracket(const LaurentPoly& bracket, int writhe) {
  LaurentPoly norm =
      LaurentPoly::mono(writhe % 2 == 0 ? 1 : -1, -3 * writhe);
  return (norm * bracket).mirrored();
}

LaurentPoly jones(const Diagram& d, const Analysis& a, const Orientation& o) {
  return jones_from_bracket(kauffman_bracket(d),
                            d.crossings() ? writhe(d, a, o) : 0);
}

std::string jones_to_string(const LaurentPoly& jones_q) {
  if (jones_q.is_zero()) return "0";
  std::string out;
  for (const auto& [e, coeff] : jones_q.terms()) {
    if (!out.empty()) out += " + ";
    out += std::to_string(coeff) + "*t^";
    if (e % 4 == 0) {
      out += std::to_string(e / 4);
    } else {
      int g = std::gcd(std::abs(e), 4);
      out +=
          "(" + std::to_string(e / g) + "/" + std::to_string(4 / g) + ")";
    }
  }
  return out;
}

}  // namespace tanglekit::oracle
