#pragma once

#include <gmpxx.h>

#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace ricepath {

/// Arbitrary-precision rational; all cancellation-sensitive sums run on it.
using Rational = mpq_class;
using Integer = mpz_class;

/// Parses "p/q", "p" or "-p/q" (no whitespace inside).
Rational parse_rational(std::string_view text);

/// Comma separated list of rationals, e.g. "1/2,1/2".
std::vector<Rational> parse_rational_list(std::string_view text, char sep = ',');

/// Canonical "p/q" form; integers print without denominator.
std::string to_string(const Rational& value);

double to_double(const Rational& value);

/// Binomial coefficient C(n, k) as an exact integer (0 outside 0 <= k <= n).
Integer binomial(long n, long k);

/// Row n of Pascal's triangle, C(n, 0..n).
std::vector<Integer> pascal_row(long n);

}  // namespace ricepath
