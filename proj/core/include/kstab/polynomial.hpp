#pragma once

#include <string>
#include <utility>
#include <vector>

#include "kstab/errors.hpp"
#include "kstab/rational.hpp"

namespace kstab {

/// Dense univariate polynomial over Rational in one formal variable s,
/// stored by ascending exponent with no trailing zero coefficients.
class UnivariatePoly {
 public:
  UnivariatePoly() = default;
  explicit UnivariatePoly(Rational constant);
  explicit UnivariatePoly(std::vector<Rational> ascending_coeffs);

  /// The monomial c * s^k.
  static UnivariatePoly monomial(Rational c, unsigned k);
  static UnivariatePoly variable() { return monomial(1, 1); }

  bool is_zero() const { return coeffs_.empty(); }
  /// Degree, with deg(0) = -1.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  const Rational& leading() const;
  /// Coefficient of s^k (zero beyond the degree).
  Rational coeff(unsigned k) const;
  const std::vector<Rational>& coeffs() const { return coeffs_; }

  Rational eval(const Rational& s) const;
  UnivariatePoly derivative() const;

  UnivariatePoly operator-() const;
  UnivariatePoly operator+(const UnivariatePoly& rhs) const;
  UnivariatePoly operator-(const UnivariatePoly& rhs) const;
  UnivariatePoly operator*(const UnivariatePoly& rhs) const;
  UnivariatePoly operator*(const Rational& c) const;
  UnivariatePoly& operator+=(const UnivariatePoly& rhs);
  UnivariatePoly& operator-=(const UnivariatePoly& rhs);
  UnivariatePoly& operator*=(const UnivariatePoly& rhs);
  bool operator==(const UnivariatePoly& rhs) const = default;

  /// Quotient and remainder; divisor must be nonzero.
  static std::pair<UnivariatePoly, UnivariatePoly> divmod(
      const UnivariatePoly& a, const UnivariatePoly& b);

  /// Monic gcd, with gcd(0,0) = 0.
  static UnivariatePoly gcd(const UnivariatePoly& a, const UnivariatePoly& b);

  UnivariatePoly monic() const;

  std::string to_string(const std::string& var = "s") const;

 private:
  void trim();
  std::vector<Rational> coeffs_;
};

inline UnivariatePoly operator*(const Rational& c, const UnivariatePoly& p) {
  return p * c;
}

/// Quotient of two polynomials in s, kept reduced with a monic denominator.
/// Evaluation and differentiation at s = 0 require den(0) != 0; a vanishing
/// denominator at the origin signals a Reeb vector on the boundary of the
/// Reeb cone of the deformed variety.
class UnivariateRationalFunction {
 public:
  UnivariateRationalFunction() : num_(), den_(Rational(1)) {}
  UnivariateRationalFunction(UnivariatePoly num, UnivariatePoly den);
  explicit UnivariateRationalFunction(const Rational& constant)
      : UnivariateRationalFunction(UnivariatePoly(constant),
                                   UnivariatePoly(Rational(1))) {}

  const UnivariatePoly& num() const { return num_; }
  const UnivariatePoly& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }

  /// (f(0), f'(0)) by the quotient rule on coefficients. Throws
  /// PreconditionError if den(0) = 0.
  std::pair<Rational, Rational> eval_and_derivative_at_zero() const;

  /// f(s) at an arbitrary point with den(s) != 0.
  Rational eval(const Rational& s) const;

  UnivariateRationalFunction operator+(
      const UnivariateRationalFunction& rhs) const;
  UnivariateRationalFunction operator-(
      const UnivariateRationalFunction& rhs) const;
  UnivariateRationalFunction operator*(
      const UnivariateRationalFunction& rhs) const;
  UnivariateRationalFunction operator/(
      const UnivariateRationalFunction& rhs) const;
  bool operator==(const UnivariateRationalFunction& rhs) const = default;

  std::string to_string(const std::string& var = "s") const;

 private:
  void reduce();
  UnivariatePoly num_;
  UnivariatePoly den_;
};

}  // namespace kstab
