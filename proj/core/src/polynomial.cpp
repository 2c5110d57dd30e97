#include "kstab/polynomial.hpp"

#include <sstream>

namespace kstab {

UnivariatePoly::UnivariatePoly(Rational constant) {
  if (constant != 0) coeffs_.push_back(std::move(constant));
}

UnivariatePoly::UnivariatePoly(std::vector<Rational> ascending_coeffs)
    : coeffs_(std::move(ascending_coeffs)) {
  trim();
}

UnivariatePoly UnivariatePoly::monomial(Rational c, unsigned k) {
  UnivariatePoly p;
  if (c == 0) return p;
  p.coeffs_.assign(k + 1, Rational(0));
  p.coeffs_[k] = std::move(c);
  return p;
}

const Rational& UnivariatePoly::leading() const {
  if (coeffs_.empty()) throw PreconditionError("leading() of the zero polynomial");
  return coeffs_.back();
}

Rational UnivariatePoly::coeff(unsigned k) const {
  if (k >= coeffs_.size()) return Rational(0);
  return coeffs_[k];
}

Rational UnivariatePoly::eval(const Rational& s) const {
  Rational acc(0);
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * s + *it;
  return acc;
}

UnivariatePoly UnivariatePoly::derivative() const {
  if (coeffs_.size() <= 1) return UnivariatePoly();
  std::vector<Rational> d(coeffs_.size() - 1);
  for (std::size_t k = 1; k < coeffs_.size(); ++k)
    d[k - 1] = coeffs_[k] * Rational(static_cast<unsigned>(k));
  return UnivariatePoly(std::move(d));
}

UnivariatePoly UnivariatePoly::operator-() const {
  std::vector<Rational> c(coeffs_);
  for (auto& x : c) x = -x;
  UnivariatePoly p;
  p.coeffs_ = std::move(c);
  return p;
}

UnivariatePoly UnivariatePoly::operator+(const UnivariatePoly& rhs) const {
  std::vector<Rational> c(std::max(coeffs_.size(), rhs.coeffs_.size()), Rational(0));
  for (std::size_t k = 0; k < coeffs_.size(); ++k) c[k] += coeffs_[k];
  for (std::size_t k = 0; k < rhs.coeffs_.size(); ++k) c[k] += rhs.coeffs_[k];
  return UnivariatePoly(std::move(c));
}

UnivariatePoly UnivariatePoly::operator-(const UnivariatePoly& rhs) const {
  std::vector<Rational> c(std::max(coeffs_.size(), rhs.coeffs_.size()), Rational(0));
  for (std::size_t k = 0; k < coeffs_.size(); ++k) c[k] += coeffs_[k];
  for (std::size_t k = 0; k < rhs.coeffs_.size(); ++k) c[k] -= rhs.coeffs_[k];
  return UnivariatePoly(std::move(c));
}

UnivariatePoly UnivariatePoly::operator*(const UnivariatePoly& rhs) const {
  if (is_zero() || rhs.is_zero()) return UnivariatePoly();
  std::vector<Rational> c(coeffs_.size() + rhs.coeffs_.size() - 1, Rational(0));
  for (std::size_t i = 0; i < coeffs_.size(); ++i)
    for (std::size_t j = 0; j < rhs.coeffs_.size(); ++j)
      c[i + j] += coeffs_[i] * rhs.coeffs_[j];
  return UnivariatePoly(std::move(c));
}

UnivariatePoly UnivariatePoly::operator*(const Rational& c) const {
  if (c == 0) return UnivariatePoly();
  std::vector<Rational> out(coeffs_);
  for (auto& x : out) x *= c;
  UnivariatePoly p;
  p.coeffs_ = std::move(out);
  return p;
}

UnivariatePoly& UnivariatePoly::operator+=(const UnivariatePoly& rhs) {
  *this = *this + rhs;
  return *this;
}
UnivariatePoly& UnivariatePoly::operator-=(const UnivariatePoly& rhs) {
  *this = *this - rhs;
  return *this;
}
UnivariatePoly& UnivariatePoly::operator*=(const UnivariatePoly& rhs) {
  *this = *this * rhs;
  return *this;
}

std::pair<UnivariatePoly, UnivariatePoly> UnivariatePoly::divmod(
    const UnivariatePoly& a, const UnivariatePoly& b) {
  if (b.is_zero()) throw PreconditionError("polynomial division by zero");
  UnivariatePoly r = a;
  std::vector<Rational> q(a.coeffs_.size() > b.coeffs_.size() - 1
                              ? a.coeffs_.size() - b.coeffs_.size() + 1
                              : 0,
                          Rational(0));
  while (!r.is_zero() && r.degree() >= b.degree()) {
    const std::size_t shift = static_cast<std::size_t>(r.degree() - b.degree());
    const Rational factor = r.leading() / b.leading();
    q[shift] = factor;
    r -= b * monomial(factor, static_cast<unsigned>(shift));
  }
  return {UnivariatePoly(std::move(q)), std::move(r)};
}

UnivariatePoly UnivariatePoly::gcd(const UnivariatePoly& a, const UnivariatePoly& b) {
  UnivariatePoly x = a, y = b;
  while (!y.is_zero()) {
    auto [q, r] = divmod(x, y);
    x = std::move(y);
    y = std::move(r);
  }
  return x.is_zero() ? x : x.monic();
}

UnivariatePoly UnivariatePoly::monic() const {
  if (is_zero()) return *this;
  return *this * (Rational(1) / leading());
}

std::string UnivariatePoly::to_string(const std::string& var) const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t k = coeffs_.size(); k-- > 0;) {
    const Rational& c = coeffs_[k];
    if (c == 0) continue;
    if (!first) os << (c > 0 ? " + " : " - ");
    else if (c < 0) os << "-";
    const Rational a = c < 0 ? Rational(-c) : c;
    if (k == 0 || a != 1) os << kstab::to_string(a);
    if (k > 0) {
      if (a != 1) os << "*";
      os << var;
      if (k > 1) os << "^" << k;
    }
    first = false;
  }
  return os.str();
}

void UnivariatePoly::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

UnivariateRationalFunction::UnivariateRationalFunction(UnivariatePoly num,
                                                       UnivariatePoly den)
    : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero())
    throw PreconditionError("rational function with zero denominator");
  reduce();
}

void UnivariateRationalFunction::reduce() {
  if (num_.is_zero()) {
    den_ = UnivariatePoly(Rational(1));
    return;
  }
  const UnivariatePoly g = UnivariatePoly::gcd(num_, den_);
  if (g.degree() > 0) {
    num_ = UnivariatePoly::divmod(num_, g).first;
    den_ = UnivariatePoly::divmod(den_, g).first;
  }
  const Rational lead = den_.leading();
  if (lead != 1) {
    const Rational inv = Rational(1) / lead;
    num_ = num_ * inv;
    den_ = den_ * inv;
  }
}

std::pair<Rational, Rational>
UnivariateRationalFunction::eval_and_derivative_at_zero() const {
  const Rational d0 = den_.coeff(0);
  if (d0 == 0)
    throw PreconditionError(
        "rational function has a pole at the origin (Reeb vector on the "
        "boundary of the Reeb cone of the central fiber)");
  const Rational n0 = num_.coeff(0);
  const Rational n1 = num_.coeff(1);
  const Rational d1 = den_.coeff(1);
  return {n0 / d0, (n1 * d0 - n0 * d1) / (d0 * d0)};
}

Rational UnivariateRationalFunction::eval(const Rational& s) const {
  const Rational d = den_.eval(s);
  if (d == 0) throw PreconditionError("rational function evaluated at a pole");
  return num_.eval(s) / d;
}

UnivariateRationalFunction UnivariateRationalFunction::operator+(
    const UnivariateRationalFunction& rhs) const {
  return {num_ * rhs.den_ + rhs.num_ * den_, den_ * rhs.den_};
}

UnivariateRationalFunction UnivariateRationalFunction::operator-(
    const UnivariateRationalFunction& rhs) const {
  return {num_ * rhs.den_ - rhs.num_ * den_, den_ * rhs.den_};
}

UnivariateRationalFunction UnivariateRationalFunction::operator*(
    const UnivariateRationalFunction& rhs) const {
  return {num_ * rhs.num_, den_ * rhs.den_};
}

UnivariateRationalFunction UnivariateRationalFunction::operator/(
    const UnivariateRationalFunction& rhs) const {
  if (rhs.is_zero())
    throw PreconditionError("division by the zero rational function");
  return {num_ * rhs.den_, den_ * rhs.num_};
}

std::string UnivariateRationalFunction::to_string(const std::string& var) const {
  if (den_ == UnivariatePoly(Rational(1))) return num_.to_string(var);
  return "(" + num_.to_string(var) + ") / (" + den_.to_string(var) + ")";
}

}  // namespace kstab
