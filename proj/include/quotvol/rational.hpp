#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace quotvol {

using Integer = mpz_class;

// mpq_class keeps values canonical (lowest terms, positive denominator)
// after every arithmetic operation.
using Rational = mpq_class;

/// Parses "p" or "p/q" (optional sign, decimal digits). Throws
/// std::invalid_argument on malformed text or a zero denominator.
Rational parse_rational(std::string_view text);

/// Canonical text form: "p" for integers, "p/q" otherwise.
std::string to_string(const Rational& x);

bool is_integer(const Rational& x);

Rational factorial(long n);

/// g(g-1)...(g-k+1); 1 for k = 0 and 0 for k > g.
Rational falling_factorial(long g, long k);

/// Generalized binomial e(e-1)...(e-k+1)/k!, valid for negative e.
Rational binomial(const Rational& e, long k);

/// Integer power; a negative exponent of zero throws ComputationError.
Rational power(const Rational& base, long e);

}  // namespace quotvol
