#pragma once

// Exact extended rationals a/b naming rational tangles (Conway fractions).
// Canonical form: gcd(|a|,|b|) = 1, b >= 0, and the infinity tangle is
// exactly 1/0. (0,0) is not a fraction.

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>

namespace tanglekit {

class TangleFraction {
 public:
  constexpr TangleFraction() : num_(0), den_(1) {}
  TangleFraction(std::int64_t num, std::int64_t den) : num_(num), den_(den) {
    normalize();
  }

  static TangleFraction infinity() { return TangleFraction(1, 0); }
  static TangleFraction integer(std::int64_t n) { return TangleFraction(n, 1); }

  std::int64_t num() const { return num_; }
  std::int64_t den() const { return den_; }

  bool is_infinity() const { return den_ == 0; }
  bool is_integer() const { return den_ == 1; }

  // Mirror image of the tangle a/b is -a/b.
  TangleFraction mirror() const {
    return is_infinity() ? *this : TangleFraction(-num_, den_);
  }

  // Horizontal twists on the right: f + c.  1/0 absorbs.
  TangleFraction horizontal(std::int64_t c) const {
    return TangleFraction(num_ + c * den_, den_);
  }

  // Vertical twists at the bottom: f -> 1/(c + 1/f) = a/(c*a + b).
  TangleFraction vertical(std::int64_t c) const {
    return TangleFraction(num_, c * num_ + den_);
  }

  bool operator==(const TangleFraction& o) const {
    return num_ == o.num_ && den_ == o.den_;
  }
  bool operator!=(const TangleFraction& o) const { return !(*this == o); }

  std::string to_string() const {
    if (is_infinity()) return "1/0";
    if (den_ == 1) return std::to_string(num_);
    return std::to_string(num_) + "/" + std::to_string(den_);
  }

 private:
  void normalize() {
    if (num_ == 0 && den_ == 0)
      throw std::domain_error("0/0 is not a tangle fraction");
    if (den_ < 0) {
      num_ = -num_;
      den_ = -den_;
    }
    std::int64_t g = std::gcd(num_ < 0 ? -num_ : num_, den_);
    if (g > 1) {
      num_ /= g;
      den_ /= g;
    }
    if (den_ == 0) num_ = 1;  // (-1,0) and (1,0) are the same tangle
    if (num_ == 0) den_ = 1;
  }

  std::int64_t num_;
  std::int64_t den_;
};

// Parses "p/q" or "p".  Rejects zero-denominator literals other than "1/0".
TangleFraction parse_fraction(const std::string& text);

}  // namespace tanglekit
