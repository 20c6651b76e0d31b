#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>
#include <string_view>

namespace ellwall {

using Integer = mpz_class;
using Rational = mpq_class;

/// Parses "p/q" or "p". Decimal points and exponents are rejected.
Rational parse_rational(std::string_view text);

/// Canonical form: "p" for integers, "p/q" otherwise.
std::string format_rational(const Rational& x);

int sign(const Rational& x);
double to_double(const Rational& x);

/// Exact square root when x is the square of a rational.
std::optional<Rational> exact_sqrt(const Rational& x);

inline Rational rat(long num, long den = 1) {
    Rational r(num, den);
    r.canonicalize();
    return r;
}

inline Rational abs_value(const Rational& x) { return x < 0 ? Rational(-x) : x; }

}  // namespace ellwall
