#pragma once

// Unknottedness of the band core curve gamma_b on the genus-one Seifert
// surface, parametrized by (p,q) = (lk(gamma_b, c_M), lk(gamma_b, c_N)),
// plus the Murasugi signature obstruction for coherent banding.

#include <cstdint>
#include <optional>
#include <string>

#include "tanglekit/two_bridge.hpp"

namespace tanglekit::solver {

struct GammaParams {
  std::int64_t m, n;  // surface twist parameters, nonzero
  std::int64_t p, q;  // linking numbers with c_M, c_N
};

bool gamma_unknot_classify(const GammaParams& g);

// Signature ranges quoted for the obstruction: |sigma(N(2k), lk=k)| = 2|k|-1
// and |sigma(N((4mn-1)/2m))| in {0,2}.
struct SignatureFacts {
  static std::int64_t torus_coherent_abs(std::int64_t k) {
    return 2 * (k < 0 ? -k : k) - 1;
  }
  static bool genus1_abs_in_range(std::int64_t sigma_abs) {
    return sigma_abs == 0 || sigma_abs == 2;
  }
};

struct OrientedLinkSpec {
  TwoBridgeLink link = TwoBridgeLink::unknot();
  std::optional<std::int64_t> lk;  // required orientation for 2-comp links
};

enum class Obstruction { Passes, Obstructed };

struct ObstructionReport {
  Obstruction verdict;
  int sigma_l, sigma_lb;
};

// |sigma(L) - sigma(L_b)| >= 2 obstructs a coherent banding; signatures are
// computed by the diagram oracle on canonical diagrams at the requested
// orientations.
ObstructionReport signature_obstruction(const OrientedLinkSpec& l,
                                        const OrientedLinkSpec& lb,
                                        int crossing_cap = -1);

}  // namespace tanglekit::solver
