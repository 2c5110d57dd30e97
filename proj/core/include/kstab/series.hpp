#pragma once

#include <algorithm>
#include <vector>

#include "kstab/errors.hpp"
#include "kstab/rational.hpp"

namespace kstab {

/// Truncated Laurent series in t over a coefficient ring K.
///
/// coeff(valuation + k) = coeffs[k]; every exponent below the valuation is an
/// exact zero, every exponent >= order is unknown. Arithmetic tracks the
/// tightest order for which all terms of the result are determined, and never
/// reads past it. The zero-up-to-order series is stored with an empty
/// coefficient list and valuation == order.
template <typename K>
class TruncatedSeries {
 public:
  TruncatedSeries() : valuation_(0), order_(0) {}

  TruncatedSeries(int valuation, std::vector<K> coeffs, int order)
      : valuation_(valuation), order_(order), coeffs_(std::move(coeffs)) {
    if (valuation_ + static_cast<int>(coeffs_.size()) > order_)
      coeffs_.resize(static_cast<std::size_t>(order_ - valuation_));
    normalize();
  }

  static TruncatedSeries zero(int order) { return TruncatedSeries(order, {}, order); }

  static TruncatedSeries constant(K value, int order) {
    return TruncatedSeries(0, {std::move(value)}, order);
  }

  /// The monomial c * t^e.
  static TruncatedSeries monomial(K c, int e, int order) {
    return TruncatedSeries(e, {std::move(c)}, order);
  }

  bool is_zero() const { return coeffs_.empty(); }
  int valuation() const { return valuation_; }
  int order() const { return order_; }

  /// Coefficient of t^e; exact zero below the valuation, error at or past
  /// the truncation order.
  K coeff(int e) const {
    if (e >= order_)
      throw PreconditionError("series coefficient requested beyond truncation order");
    const int k = e - valuation_;
    if (k < 0 || k >= static_cast<int>(coeffs_.size())) return K{};
    return coeffs_[static_cast<std::size_t>(k)];
  }

  TruncatedSeries truncated(int new_order) const {
    if (new_order >= order_) return *this;
    return TruncatedSeries(valuation_, coeffs_, new_order);
  }

  TruncatedSeries operator-() const {
    std::vector<K> c(coeffs_);
    for (auto& x : c) x = -x;
    return TruncatedSeries(valuation_, std::move(c), order_);
  }

  TruncatedSeries operator+(const TruncatedSeries& rhs) const {
    const int order = std::min(order_, rhs.order_);
    const int val = std::min(is_zero() ? order : valuation_,
                             rhs.is_zero() ? order : rhs.valuation_);
    if (val >= order) return zero(order);
    std::vector<K> c(static_cast<std::size_t>(order - val));
    accumulate(c, val, *this, false);
    accumulate(c, val, rhs, false);
    return TruncatedSeries(val, std::move(c), order);
  }

  TruncatedSeries operator-(const TruncatedSeries& rhs) const {
    const int order = std::min(order_, rhs.order_);
    const int val = std::min(is_zero() ? order : valuation_,
                             rhs.is_zero() ? order : rhs.valuation_);
    if (val >= order) return zero(order);
    std::vector<K> c(static_cast<std::size_t>(order - val));
    accumulate(c, val, *this, false);
    accumulate(c, val, rhs, true);
    return TruncatedSeries(val, std::move(c), order);
  }

  TruncatedSeries operator*(const TruncatedSeries& rhs) const {
    const int order = std::min(order_ + rhs.valuation_, rhs.order_ + valuation_);
    if (is_zero() || rhs.is_zero()) return zero(order);
    const int val = valuation_ + rhs.valuation_;
    if (val >= order) return zero(order);
    std::vector<K> c(static_cast<std::size_t>(order - val));
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
      for (std::size_t j = 0; j < rhs.coeffs_.size(); ++j) {
        if (i + j >= c.size()) break;
        c[i + j] += coeffs_[i] * rhs.coeffs_[j];
      }
    }
    return TruncatedSeries(val, std::move(c), order);
  }

  TruncatedSeries operator*(const K& scalar) const {
    std::vector<K> c(coeffs_);
    for (auto& x : c) x = x * scalar;
    return TruncatedSeries(valuation_, std::move(c), order_);
  }

  /// Division; the divisor must have a nonzero coefficient somewhere below
  /// its truncation order, otherwise the quotient is entirely undetermined.
  TruncatedSeries operator/(const TruncatedSeries& rhs) const {
    if (rhs.is_zero())
      throw PreconditionError(
          "series division by a series indistinguishable from zero");
    // x = t^vx X, y = t^vy Y with X, Y unit power series; x/y = t^(vx-vy) X/Y.
    const int known_x = order_ - (is_zero() ? order_ : valuation_);
    const int known_y = rhs.order_ - rhs.valuation_;
    const int known = std::min(known_x, known_y);
    const int val = (is_zero() ? order_ : valuation_) - rhs.valuation_;
    const int order = val + known;
    if (is_zero() || known <= 0) return zero(order);
    std::vector<K> q(static_cast<std::size_t>(known));
    const K inv_lead = K{1} / rhs.coeffs_[0];
    for (int k = 0; k < known; ++k) {
      K acc = (k < static_cast<int>(coeffs_.size())) ? coeffs_[static_cast<std::size_t>(k)] : K{};
      for (int j = 1; j <= k; ++j) {
        if (j < static_cast<int>(rhs.coeffs_.size()))
          acc -= rhs.coeffs_[static_cast<std::size_t>(j)] * q[static_cast<std::size_t>(k - j)];
      }
      q[static_cast<std::size_t>(k)] = acc * inv_lead;
    }
    return TruncatedSeries(val, std::move(q), order);
  }

  /// Multiplication by t^delta.
  TruncatedSeries shifted(int delta) const {
    return TruncatedSeries(valuation_ + delta, coeffs_, order_ + delta);
  }

  /// t -> -t.
  TruncatedSeries negated_variable() const {
    std::vector<K> c(coeffs_);
    for (std::size_t k = 0; k < c.size(); ++k) {
      if ((valuation_ + static_cast<int>(k)) % 2 != 0) c[k] = -c[k];
    }
    return TruncatedSeries(valuation_, std::move(c), order_);
  }

  bool operator==(const TruncatedSeries& rhs) const {
    return valuation_ == rhs.valuation_ && order_ == rhs.order_ &&
           coeffs_ == rhs.coeffs_;
  }

  /// Equality of all coefficients both sides determine.
  bool agrees_with(const TruncatedSeries& rhs) const {
    const int order = std::min(order_, rhs.order_);
    const int lo = std::min(is_zero() ? order : valuation_,
                            rhs.is_zero() ? order : rhs.valuation_);
    for (int e = lo; e < order; ++e)
      if (coeff(e) != rhs.coeff(e)) return false;
    return true;
  }

 private:
  static void accumulate(std::vector<K>& c, int val, const TruncatedSeries& s,
                         bool negate) {
    for (std::size_t k = 0; k < s.coeffs_.size(); ++k) {
      const int e = s.valuation_ + static_cast<int>(k);
      if (e - val >= static_cast<int>(c.size())) break;
      if (negate)
        c[static_cast<std::size_t>(e - val)] -= s.coeffs_[k];
      else
        c[static_cast<std::size_t>(e - val)] += s.coeffs_[k];
    }
  }

  void normalize() {
    std::size_t lead = 0;
    while (lead < coeffs_.size() && coeffs_[lead] == K{}) ++lead;
    if (lead > 0) {
      coeffs_.erase(coeffs_.begin(), coeffs_.begin() + static_cast<long>(lead));
      valuation_ += static_cast<int>(lead);
    }
    while (!coeffs_.empty() && coeffs_.back() == K{}) {
      // Trailing zeros are kept implicit; order still bounds what is known.
      coeffs_.pop_back();
    }
    if (coeffs_.empty()) valuation_ = order_;
  }

  int valuation_;
  int order_;
  std::vector<K> coeffs_;
};

using RationalSeries = TruncatedSeries<Rational>;

/// Taylor expansion of 1 - exp(-a t) through t^(order-1): the k-th
/// coefficient is (-1)^(k+1) a^k / k!. Returns the zero series when a = 0;
/// callers treat that as a vanishing weight (the Reeb vector left the cone).
RationalSeries one_minus_exp_series(const Rational& a, int order);

/// Taylor expansion of exp(a t) through t^(order-1).
RationalSeries exp_series(const Rational& a, int order);

}  // namespace kstab
