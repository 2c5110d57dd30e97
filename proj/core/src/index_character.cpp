#include "kstab/index_character.hpp"

#include <boost/multiprecision/cpp_bin_float.hpp>

namespace kstab {

IndexCharacter build_index_character(const ConeVariety& v, const ReebVector& xi,
                                     const std::optional<Direction>& w) {
  if (!reeb_cone_contains(v, xi))
    throw PreconditionError(
        "build_index_character: xi is not in the open Reeb cone");
  std::vector<Rational> slopes(v.num_coords(), Rational(0));
  Rational degree_slope(0);
  if (w) {
    if (w->size() != v.num_coords())
      throw PreconditionError("direction length does not match N");
    slopes = *w;
    if (v.is_hypersurface()) {
      const auto dw = direction_degree(v, *w);
      if (!dw)
        throw PreconditionError(
            "defining polynomial is not semi-invariant under the joint "
            "(xi, direction) torus");
      degree_slope = *dw;
    }
  }
  IndexCharacter f;
  const auto weights = coordinate_weights(v, xi);
  for (unsigned i = 0; i < v.num_coords(); ++i)
    f.denominator_forms.push_back({weights[i], slopes[i]});
  if (v.is_hypersurface())
    f.numerator_forms.push_back({degree(v, xi), degree_slope});
  f.n = static_cast<unsigned>(f.denominator_forms.size() -
                              f.numerator_forms.size());
  return f;
}

namespace {

void require_interior_forms(const IndexCharacter& f) {
  for (const auto& form : f.denominator_forms)
    if (form.value == 0)
      throw PreconditionError(
          "vanishing coordinate weight: the polarization lies on the "
          "boundary of the Reeb cone");
  for (const auto& form : f.numerator_forms)
    if (form.value == 0)
      throw PreconditionError("vanishing degree form in the index character");
}

// (1 - e^(-a t)) / t through `known` coefficients, a != 0.
RationalSeries factor_over_t(const Rational& a, int known) {
  return one_minus_exp_series(a, known + 1).shifted(-1);
}

}  // namespace

RationalSeries laurent_series(const IndexCharacter& f, int through_exponent) {
  require_interior_forms(f);
  const int n = static_cast<int>(f.n);
  // Each factor is known to this many terms; products and the final quotient
  // keep that count, so the expansion is valid through the requested power.
  const int known = std::max(n + 3, through_exponent + n + 2);
  RationalSeries num = RationalSeries::constant(Rational(1), known);
  for (const auto& form : f.numerator_forms)
    num = num * factor_over_t(form.value, known);
  RationalSeries den = RationalSeries::constant(Rational(1), known);
  for (const auto& form : f.denominator_forms)
    den = den * factor_over_t(form.value, known);
  return (num / den).shifted(-n).truncated(through_exponent + 1);
}

Rational laurent_leading(const IndexCharacter& f) {
  if (f.n < 1) throw PreconditionError("index character with pole order < 1");
  require_interior_forms(f);
  Rational acc(1);
  for (const auto& form : f.numerator_forms) acc *= form.value;
  for (const auto& form : f.denominator_forms) acc /= form.value;
  return acc / Rational(factorial(f.n - 1));
}

LaurentData laurent_coefficients(const IndexCharacter& f) {
  if (f.n < 2)
    throw PreconditionError(
        "laurent_coefficients requires pole order n >= 2 (a1 is undefined "
        "for curves)");
  const int n = static_cast<int>(f.n);
  const RationalSeries s = laurent_series(f, 1 - n);
  return {s.coeff(-n) / Rational(factorial(f.n - 1)),
          s.coeff(1 - n) / Rational(factorial(f.n - 2))};
}

std::pair<UnivariateRationalFunction, UnivariateRationalFunction> laurent_ratfuns(
    const IndexCharacter& f) {
  if (f.n < 2)
    throw PreconditionError("laurent_ratfuns requires pole order n >= 2");
  require_interior_forms(f);
  using PolySeries = TruncatedSeries<UnivariatePoly>;
  const int known = 3;
  // (1 - e^(-(a + b s) t)) / t = sum_k (-1)^k (a + b s)^(k+1) t^k / (k+1)!
  const auto factor = [&](const LinearForm& form) {
    const UnivariatePoly lin =
        UnivariatePoly(form.value) + UnivariatePoly::monomial(form.slope, 1);
    std::vector<UnivariatePoly> c;
    UnivariatePoly pow = lin;
    Rational fact(1);
    for (int k = 0; k < known; ++k) {
      c.push_back(pow * (k % 2 == 0 ? Rational(1) / fact : Rational(-1) / fact));
      pow *= lin;
      fact *= (k + 2);
    }
    return PolySeries(0, std::move(c), known);
  };
  PolySeries num = PolySeries::constant(UnivariatePoly(Rational(1)), known);
  for (const auto& form : f.numerator_forms) num = num * factor(form);
  PolySeries den = PolySeries::constant(UnivariatePoly(Rational(1)), known);
  for (const auto& form : f.denominator_forms) den = den * factor(form);
  // F t^n = (N0 + N1 t + ...) / (D0 + D1 t + ...); two-term quotient rule.
  const UnivariatePoly n0 = num.coeff(0), n1 = num.coeff(1);
  const UnivariatePoly d0 = den.coeff(0), d1 = den.coeff(1);
  const Rational c0 = Rational(1) / Rational(factorial(f.n - 1));
  const Rational c1 = Rational(1) / Rational(factorial(f.n - 2));
  UnivariateRationalFunction a0(n0 * c0, d0);
  UnivariateRationalFunction a1((n1 * d0 - n0 * d1) * c1, d0 * d0);
  return {std::move(a0), std::move(a1)};
}

bool gorenstein_duality_check_lambda(const ConeVariety& v, const ReebVector& xi,
                                     const Rational& lambda,
                                     int through_exponent) {
  const IndexCharacter f = build_index_character(v, xi);
  const RationalSeries lhs = laurent_series(f, through_exponent);
  const int n = static_cast<int>(f.n);
  const RationalSeries mirrored = lhs.negated_variable();
  const RationalSeries rhs =
      (exp_series(lambda, through_exponent + n + 2) * mirrored) *
      Rational(n % 2 == 0 ? 1 : -1);
  return lhs.truncated(through_exponent + 1)
      .agrees_with(rhs.truncated(through_exponent + 1));
}

bool gorenstein_duality_check(const ConeVariety& v, const ReebVector& xi,
                              int through_exponent) {
  if (v.gorenstein_m != 1)
    throw PreconditionError(
        "Gorenstein duality check implemented for index m = 1 only");
  return gorenstein_duality_check_lambda(v, xi, canonical_weight(v, xi),
                                         through_exponent);
}

std::map<long, BigInt> index_character_partial_sums(const ConeVariety& v,
                                                    const ReebVector& xi,
                                                    long cutoff) {
  if (cutoff < 0) throw PreconditionError("negative cutoff");
  const IndexCharacter f = build_index_character(v, xi);
  const auto to_int = [](const Rational& x) {
    if (!is_integer(x) || x < 1)
      throw PreconditionError(
          "partial sums need integer weights >= 1 (integer Reeb vector)");
    return static_cast<long>(numerator(x));
  };
  // Power series in x = e^(-t): N(x) / prod_i (1 - x^(a_i)).
  const std::size_t len = static_cast<std::size_t>(cutoff) + 1;
  std::vector<BigInt> series(len, BigInt(0));
  series[0] = 1;
  for (const auto& form : f.numerator_forms) {
    const long d = to_int(form.value);
    std::vector<BigInt> next(len, BigInt(0));
    for (std::size_t k = 0; k < len; ++k) {
      next[k] += series[k];
      if (k + static_cast<std::size_t>(d) < len)
        next[k + static_cast<std::size_t>(d)] -= series[k];
    }
    series = std::move(next);
  }
  for (const auto& form : f.denominator_forms) {
    const long a = to_int(form.value);
    // Divide by (1 - x^a): cumulative sums with stride a.
    for (std::size_t k = static_cast<std::size_t>(a); k < len; ++k)
      series[k] += series[k - static_cast<std::size_t>(a)];
  }
  std::map<long, BigInt> out;
  for (long w = 0; w <= cutoff; ++w) out[w] = series[static_cast<std::size_t>(w)];
  return out;
}

bool numeric_leading_check(const ConeVariety& v, const ReebVector& xi,
                           const BigFloat& t, const BigFloat& rel_tol) {
  const IndexCharacter f = build_index_character(v, xi);
  const Rational a0_exact = laurent_leading(f);
  BigFloat value(1);
  for (const auto& form : f.numerator_forms)
    value *= BigFloat(1) - exp(-to_bigfloat(form.value) * t);
  for (const auto& form : f.denominator_forms)
    value /= BigFloat(1) - exp(-to_bigfloat(form.value) * t);
  const BigFloat approx =
      value * pow(t, static_cast<int>(f.n)) / BigFloat(factorial(f.n - 1));
  const BigFloat expected = to_bigfloat(a0_exact);
  return abs(approx - expected) <= rel_tol * abs(expected);
}

}  // namespace kstab
