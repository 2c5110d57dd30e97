#include "kstab/rational.hpp"

#include <boost/multiprecision/integer.hpp>

#include <stdexcept>

namespace kstab {

namespace mp = boost::multiprecision;

BigFloat to_bigfloat(const Rational& x) {
  return BigFloat(numerator(x)) / BigFloat(denominator(x));
}

Rational rational_pow(const Rational& x, long e) {
  if (e == 0) return Rational(1);
  if (x == 0) {
    if (e < 0) throw std::domain_error("rational_pow: 0 to a negative power");
    return Rational(0);
  }
  const unsigned k = static_cast<unsigned>(e < 0 ? -e : e);
  Rational r(mp::pow(numerator(x), k), mp::pow(denominator(x), k));
  if (e < 0) r = Rational(1) / r;
  return r;
}

BigInt factorial(unsigned n) {
  BigInt r = 1;
  for (unsigned k = 2; k <= n; ++k) r *= k;
  return r;
}

BigInt gcd(const BigInt& a, const BigInt& b) { return mp::gcd(a, b); }

bool is_integer(const Rational& x) { return denominator(x) == 1; }

BigInt rational_floor(const Rational& x) {
  BigInt q = numerator(x) / denominator(x);
  if (numerator(x) < 0 && q * denominator(x) != numerator(x)) --q;
  return q;
}

Rational parse_rational(const std::string& text) {
  const auto strip = [](std::string s) {
    const auto b = s.find_first_not_of(" \t");
    const auto e = s.find_last_not_of(" \t");
    if (b == std::string::npos) return std::string();
    return s.substr(b, e - b + 1);
  };
  const std::string s = strip(text);
  if (s.empty()) throw std::invalid_argument("empty rational literal");
  try {
    const auto slash = s.find('/');
    if (slash == std::string::npos) return Rational(BigInt(s));
    const BigInt num(strip(s.substr(0, slash)));
    const BigInt den(strip(s.substr(slash + 1)));
    if (den == 0) throw std::invalid_argument("zero denominator");
    return Rational(num, den);
  } catch (const std::exception&) {
    throw std::invalid_argument("malformed rational literal: '" + text + "'");
  }
}

std::string to_string(const Rational& x) {
  if (denominator(x) == 1) return numerator(x).str();
  return numerator(x).str() + "/" + denominator(x).str();
}

std::string to_decimal_string(const Rational& x, unsigned digits) {
  const bool neg = x < 0;
  const BigInt n = neg ? BigInt(-numerator(x)) : numerator(x);
  const BigInt d = denominator(x);
  BigInt ip = n / d;
  BigInt rem = n % d;
  std::string out = (neg && (ip != 0 || rem != 0)) ? "-" : "";
  out += ip.str();
  if (digits == 0) return out;
  out += '.';
  for (unsigned k = 0; k < digits; ++k) {
    rem *= 10;
    out += static_cast<char>('0' + static_cast<int>(rem / d));
    rem %= d;
  }
  return out;
}

Rational simplest_rational_in(const Rational& lo, const Rational& hi) {
  if (lo > hi) throw std::invalid_argument("simplest_rational_in: empty interval");
  if (lo <= 0 && 0 <= hi) return Rational(0);
  if (hi < 0) return -simplest_rational_in(-hi, -lo);
  // 0 < lo <= hi: take the integer part, recurse on the inverted remainder.
  const BigInt fl = rational_floor(lo);
  if (Rational(fl + 1) <= hi || Rational(fl) == lo)
    return (Rational(fl) == lo) ? lo : Rational(fl + 1);
  const Rational flo = lo - Rational(fl);
  const Rational fhi = hi - Rational(fl);
  return Rational(fl) + Rational(1) / simplest_rational_in(Rational(1) / fhi,
                                                           Rational(1) / flo);
}

}  // namespace kstab
