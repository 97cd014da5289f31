#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include <boost/multiprecision/gmp.hpp>

namespace phaseless {

/// Exact rational scalar used throughout the library.
using Rational = boost::multiprecision::mpq_rational;
using Integer = boost::multiprecision::mpz_int;

/// Parses "p/q", "p", or a finite decimal such as "-0.125".
/// Throws std::invalid_argument on malformed text or a zero denominator.
Rational parse_rational(std::string_view text);

/// Lowest-terms "p/q" with q > 0. Integers are written with q = 1.
std::string format_rational(const Rational& value);

std::int64_t floor_to_int(const Rational& value);
std::int64_t ceil_to_int(const Rational& value);

inline bool is_integer(const Rational& value) {
    return boost::multiprecision::denominator(value) == 1;
}

inline Rational abs(const Rational& value) { return value < 0 ? Rational(-value) : value; }

inline int sign(const Rational& value) { return value > 0 ? 1 : (value < 0 ? -1 : 0); }

}  // namespace phaseless
