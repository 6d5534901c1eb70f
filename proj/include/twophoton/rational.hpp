#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace twophoton {

/// Arbitrary precision rational, always canonical (lowest terms, q > 0).
using Rational = mpq_class;

Rational make_rational(long num, long den = 1);

/// Canonical text form "p/q" (the denominator is always printed).
std::string to_string(const Rational &q);

/// Accepts "p", "p/q", "-p/q" and finite decimals such as "0.125" or "-1e-3";
/// all are converted exactly.
Rational parse_rational(std::string_view text);

Rational factorial(unsigned n);

} // namespace twophoton
