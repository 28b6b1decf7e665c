#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace metric_lines {

// Exact rational scalar. GMP keeps values canonical (lowest terms, positive
// denominator) after every arithmetic operation.
using Rational = mpq_class;

// Accepts `p` or `p/q` with q > 0 and gcd(p, q) = 1. Throws Error(Parse) with
// a column-relative message on malformed input.
Rational parse_rational(std::string_view text);

// `p/q`, or bare `p` when the denominator is 1.
std::string to_string(const Rational& value);

Rational make_rational(long numerator, unsigned long denominator = 1);

}  // namespace metric_lines
