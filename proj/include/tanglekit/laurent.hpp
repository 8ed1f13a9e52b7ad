#pragma once

// Sparse integer Laurent polynomials in one formal variable.  No zero
// coefficients are stored; arithmetic is exact.

#include <cstdint>
#include <map>
#include <string>

namespace tanglekit {

class LaurentPoly {
 public:
  LaurentPoly() = default;
  static LaurentPoly mono(std::int64_t coeff, int exp) {
    LaurentPoly p;
    p.add_term(exp, coeff);
    return p;
  }
  static LaurentPoly one() { return mono(1, 0); }

  void add_term(int exp, std::int64_t coeff) {
    if (coeff == 0) return;
    auto it = terms_.find(exp);
    if (it == terms_.end()) {
      terms_.emplace(exp, coeff);
    } else {
      it->second += coeff;
      if (it->second == 0) terms_.erase(it);
    }
  }

  LaurentPoly& operator+=(const LaurentPoly& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
  }

  LaurentPoly operator*(const LaurentPoly& o) const {
    LaurentPoly out;
    for (const auto& [e1, c1] : terms_)
      for (const auto& [e2, c2] : o.terms_) out.add_term(e1 + e2, c1 * c2);
    return out;
  }

  // x^k -> x^{-k}; the bracket/Jones mirror image.
  LaurentPoly mirrored() const {
    LaurentPoly out;
    for (const auto& [e, c] : terms_) out.add_term(-e, c);
    return out;
  }

  bool is_zero() const { return terms_.empty(); }
  bool operator==(const LaurentPoly& o) const { return terms_ == o.terms_; }
  bool operator!=(const LaurentPoly& o) const { return !(*this == o); }
  const std::map<int, std::int64_t>& terms() const { return terms_; }

  // Sorted "coeff*x^k" terms, ascending exponent.
  std::string to_string(const std::string& var = "x") const {
    if (terms_.empty()) return "0";
    std::string out;
    for (const auto& [e, c] : terms_) {
      if (!out.empty()) out += " + ";
      out += std::to_string(c) + "*" + var + "^" + std::to_string(e);
    }
    return out;
  }

 private:
  std::map<int, std::int64_t> terms_;
};

}  // namespace tanglekit
