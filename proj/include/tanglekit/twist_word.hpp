#pragma once

// Twist words (c_1,...,c_n) and their continued-fraction calculus.
//
// A word of even length starts from the vertical base tangle 1/0, an odd
// word from the horizontal base 0/1.  Entry i is a horizontal twist region
// when i = n (mod 2) and a vertical one otherwise, so the last entry is
// always horizontal and the value of the word is the continued fraction
//   c_n + 1/(c_{n-1} + 1/(... + 1/c_1)).
// Vertical twists are left-handed for positive entries, horizontal twists
// right-handed; both contribute crossings of the same local sign.

#include <cstdint>
#include <vector>

#include "tanglekit/fraction.hpp"

namespace tanglekit {

using TwistWord = std::vector<std::int64_t>;

enum class TwistAxis { Horizontal, Vertical };

inline TwistAxis axis_of_entry(std::size_t i, std::size_t n) {
  // i is 1-based
  return ((n - i) % 2 == 0) ? TwistAxis::Horizontal : TwistAxis::Vertical;
}

TangleFraction apply_twist(const TangleFraction& f, std::int64_t c,
                           TwistAxis axis);

// Folds apply_twist over the word, first entry innermost.
TangleFraction circle_product_fraction(const TangleFraction& f,
                                       const TwistWord& word);

// Value of a bare word; the empty word is the vertical base 1/0.
TangleFraction cf_to_fraction(const TwistWord& word);

// Canonical all-same-sign expansion: every entry nonzero with the sign of
// the fraction except possibly the last, and the round trip through
// cf_to_fraction is the identity.  1/0 maps to the empty word, 0/1 to (0).
TwistWord fraction_to_cf(const TangleFraction& f);

// Sum over |entries|: the crossing count of the alternating diagram the
// word describes.
std::int64_t word_crossings(const TwistWord& word);

std::string word_to_string(const TwistWord& word);

}  // namespace tanglekit
