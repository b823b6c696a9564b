#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <string_view>

namespace scrollacm {

// Exact arithmetic used across the library. Ranks and Chern data grow
// like products of generalized Fibonacci numbers under mutation, so
// machine integers overflow after a handful of braid steps.
using Integer = mpz_class;
using Rational = mpq_class;

Rational make_rational(const Integer& num, const Integer& den);

/// Parses "p", "-p", "p/q" into a canonical rational. Throws std::invalid_argument.
Rational parse_rational(std::string_view text);

std::string to_string(const Integer& value);
/// Renders p/q, or just p when the denominator is 1.
std::string to_string(const Rational& value);

Integer floor_div(const Integer& num, const Integer& den);
Integer ceil_div(const Integer& num, const Integer& den);

inline int sign(const Integer& v) { return sgn(v); }
inline int sign(const Rational& v) { return sgn(v); }

bool fits_int64(const Integer& v);
std::int64_t to_int64(const Integer& v);

}  // namespace scrollacm
