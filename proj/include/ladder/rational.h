#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>
#include <string_view>

namespace ladder {

// mpq_class keeps values in lowest terms with a positive denominator after
// every arithmetic operation.
using Rational = mpq_class;

Rational make_rational(long num, long den = 1);

/// Accepts "7", "-3/4", "0.125"; throws std::invalid_argument otherwise.
Rational parse_rational(std::string_view text);

std::string to_string(const Rational& q);
double to_double(const Rational& q);
bool is_integer(const Rational& q);

/// Rational square root when q is the square of a rational.
std::optional<Rational> exact_sqrt(const Rational& q);

/// Falling factorial x (x-1) ... (x-n+1).
Rational falling_factorial(const Rational& x, int n);

Rational binomial(int n, int k);

}  // namespace ladder
