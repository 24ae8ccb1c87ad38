#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace projendo {

/// Arbitrary-precision rational, always kept canonical (gcd 1, positive denominator).
using Rational = mpq_class;
using Integer = mpz_class;

inline bool is_zero(const Rational& x) { return sgn(x) == 0; }

/// Throws Error("division-by-zero") on 0.
Rational inverse(const Rational& x);

/// "p/q", or "p" when q = 1.
std::string to_string(const Rational& x);

/// Accepts "p", "-p", "p/q". Throws Error("parse-error") otherwise or on q = 0.
Rational parse_rational(std::string_view text);

} // namespace projendo
