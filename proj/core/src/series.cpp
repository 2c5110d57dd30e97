#include "kstab/series.hpp"

namespace kstab {

RationalSeries one_minus_exp_series(const Rational& a, int order) {
  if (order < 1) throw PreconditionError("one_minus_exp_series: order must be >= 1");
  if (a == 0) return RationalSeries::zero(order);
  std::vector<Rational> c;
  c.reserve(static_cast<std::size_t>(order > 1 ? order - 1 : 0));
  Rational term(1);  // (-1)^(k+1) a^k / k! accumulated incrementally
  for (int k = 1; k < order; ++k) {
    term *= -a;
    term /= k;
    c.push_back(-term);
  }
  return RationalSeries(1, std::move(c), order);
}

RationalSeries exp_series(const Rational& a, int order) {
  if (order < 1) throw PreconditionError("exp_series: order must be >= 1");
  std::vector<Rational> c;
  c.reserve(static_cast<std::size_t>(order));
  Rational term(1);
  c.push_back(term);
  for (int k = 1; k < order; ++k) {
    term *= a;
    term /= k;
    c.push_back(term);
  }
  return RationalSeries(0, std::move(c), order);
}

}  // namespace kstab
