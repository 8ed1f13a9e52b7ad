#pragma once

// Kauffman bracket by brute-force state sum over all 2^c smoothings, and the
// writhe-normalized Jones polynomial.
//
// The bracket lives in the variable A.  Jones polynomials are returned in
// the variable q = t^{1/4} (exponent k means t^{k/4}); knots use exponents
// divisible by 4, two-component links exponents divisible by 2.

#include "tanglekit/diagram.hpp"
#include "tanglekit/invariants.hpp"
#include "tanglekit/laurent.hpp"

namespace tanglekit::oracle {

LaurentPoly kauffman_bracket(const Diagram& d);

// (-A)^{-3w} * bracket, re-expressed in q = t^{1/4}.
LaurentPoly jones_from_bracket(const LaurentPoly& bracket, int writhe);

LaurentPoly jones(const Diagram& d, const Analysis& a, const Orientation& o);

// Renders a Jones polynomial in powers of t, e.g. "-1*t^-4 + 1*t^-3 + 1*t^-1"
// or half-integer powers "t^(1/2)" for links.
std::string jones_to_string(const LaurentPoly& jones_q);

}  // namespace tanglekit::oracle
