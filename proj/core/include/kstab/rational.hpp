#pragma once

#include <boost/multiprecision/cpp_bin_float.hpp>
#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace kstab {

using BigInt = boost::multiprecision::cpp_int;

/// Exact rational scalar. Always stored reduced with positive denominator;
/// every quantity that feeds a stability verdict lives in this type.
using Rational = boost::multiprecision::cpp_rational;

/// Software binary float with a 64-decimal-digit (~212 bit) mantissa. Used
/// only by the numeric minimizer and by sanity cross-checks, never by
/// verdicts.
using BigFloat =
    boost::multiprecision::number<boost::multiprecision::cpp_bin_float<64>>;

BigFloat to_bigfloat(const Rational& x);

/// x^e for integer e (negative allowed; x must be nonzero then).
Rational rational_pow(const Rational& x, long e);

BigInt factorial(unsigned n);

BigInt gcd(const BigInt& a, const BigInt& b);

/// True if x is an integer (denominator 1).
bool is_integer(const Rational& x);

/// Largest integer <= x.
BigInt rational_floor(const Rational& x);

/// Parses "a/b" or "a". Throws std::invalid_argument on malformed input.
Rational parse_rational(const std::string& text);

/// "n/d" (or "n" when d = 1).
std::string to_string(const Rational& x);

/// Fixed-point decimal rendering with the given number of fractional digits,
/// rounded toward zero.
std::string to_decimal_string(const Rational& x, unsigned digits = 12);

/// The unique rational with the smallest denominator in [lo, hi]
/// (Stern-Brocot descent). Requires lo <= hi.
Rational simplest_rational_in(const Rational& lo, const Rational& hi);

}  // namespace kstab
