#include "tanglekit/twist_word.hpp"

#include <cstdlib>

namespace tanglekit {

TangleFraction apply_twist(const TangleFraction& f, std::int64_t c,
                           TwistAxis axis) {
  return axis == TwistAxis::Horizontal ? f.horizontal(c) : f.vertical(c);
}

TangleFraction circle_product_fraction(const TangleFraction& f,
                                       const TwistWord& word) {
  TangleFraction out = f;
  const std::size_t n = word.size();
  for (std::size_t i = 1; i <= n; ++i)
    out = apply_twist(out, word[i - 1], axis_of_entry(i, n));
  return out;
}

TangleFraction cf_to_fraction(const TwistWord& word) {
  const TangleFraction base = (word.size() % 2 == 0)
                                  ? TangleFraction::infinity()
                                  : TangleFraction(0, 1);
  return circle_product_fraction(base, word);
}

TwistWord fraction_to_cf(const TangleFraction& f) {
  if (f.is_infinity()) return {};
  if (f.num() == 0) return {0};
  const std::int64_t sign = f.num() > 0 ? 1 : -1;
  // Positive continued fraction |a|/b = q_0 + 1/(q_1 + 1/(...)) by Euclid;
  // the word reads innermost first, so reverse the quotients.
  std::int64_t x = sign * f.num(), y = f.den();
  TwistWord quotients;
  while (y != 0) {
    quotients.push_back(x / y);
    std::int64_t r = x % y;
    x = y;
    y = r;
  }
  TwistWord word(quotients.rbegin(), quotients.rend());
  for (auto& c : word) c *= sign;
  return word;
}

std::int64_t word_crossings(const TwistWord& word) {
  std::int64_t total = 0;
  for (auto c : word) total += std::llabs(c);
  return total;
}

std::string word_to_string(const TwistWord& word) {
  std::string out = "(";
  for (std::size_t i = 0; i < word.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(word[i]);
  }
  out += ")";
  return out;
}

}  // namespace tanglekit
