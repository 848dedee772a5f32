#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <string_view>

namespace virg {

// Arbitrary-precision rational, always kept canonical (gcd 1, positive denominator).
using Rational = mpq_class;
using Integer = mpz_class;

Rational make_rational(std::int64_t num, std::int64_t den = 1);

// Accepts "3", "-7", "5/12", "-5/12".
Rational parse_rational(std::string_view text);

// "3", "-5/12".
std::string to_string(const Rational& q);

inline bool is_zero(const Rational& q) { return sgn(q) == 0; }

} // namespace virg
