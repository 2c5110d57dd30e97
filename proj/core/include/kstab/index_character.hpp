#pragma once

#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "kstab/cone_variety.hpp"
#include "kstab/polynomial.hpp"
#include "kstab/series.hpp"

namespace kstab {

/// A weight that is affine-linear in the deformation parameter s:
/// value + slope * s. The slope is zero when no direction is attached.
struct LinearForm {
  Rational value;
  Rational slope;
  bool operator==(const LinearForm&) const = default;
};

/// Index character in product form,
///
///   F(t) = prod_num (1 - e^(-l t)) / prod_den (1 - e^(-l t)),
///
/// with each linear form l evaluated on xi (and optionally deformed along a
/// direction w, contributing the s-slope). A hypersurface has one numerator
/// form (the degree) and N denominator forms (the coordinate weights);
/// ambient space has no numerator forms. The pole order at t = 0 is
/// n = #denominators - #numerators.
struct IndexCharacter {
  std::vector<LinearForm> numerator_forms;
  std::vector<LinearForm> denominator_forms;
  unsigned n;
};

/// Leading Laurent data of F at t = 0, in the convention
/// F = a0 (n-1)!/t^n + a1 (n-2)!/t^(n-1) + O(t^(2-n)).
struct LaurentData {
  Rational a0;
  Rational a1;
};

/// Builds the product form of F(xi + s w, t) on v. Requires xi in the open
/// Reeb cone; when a direction is given, fsupport must be w-homogeneous
/// (automatic for central fibers of the degenerations built from w).
IndexCharacter build_index_character(const ConeVariety& v, const ReebVector& xi,
                                     const std::optional<Direction>& w = std::nullopt);

/// Laurent expansion of F at s = 0 through t^through_exponent (exact).
RationalSeries laurent_series(const IndexCharacter& f, int through_exponent);

/// a0 alone; defined for n >= 1.
Rational laurent_leading(const IndexCharacter& f);

/// (a0, a1) at s = 0; requires n >= 2 (for n = 1 the a1 normalization
/// (n-2)! is undefined).
LaurentData laurent_coefficients(const IndexCharacter& f);

/// a0(s) and a1(s) as exact rational functions of the deformation
/// parameter. Their values and derivatives at s = 0 feed every Futaki
/// computation.
std::pair<UnivariateRationalFunction, UnivariateRationalFunction> laurent_ratfuns(
    const IndexCharacter& f);

/// Term-by-term check of F(t) = (-1)^n e^(lambda t) F(-t) through
/// t^through_exponent with lambda = l(xi). Requires Gorenstein index 1.
bool gorenstein_duality_check(const ConeVariety& v, const ReebVector& xi,
                              int through_exponent);

/// Same identity with an explicit lambda (perturbation control for tests).
bool gorenstein_duality_check_lambda(const ConeVariety& v, const ReebVector& xi,
                                     const Rational& lambda, int through_exponent);

/// Partial sums of the exponential-sum form of F for integer weights: the
/// dimension of each graded piece of weight <= cutoff, read off from the
/// power-series expansion of the product form in x = e^(-t). Independent of
/// the lattice enumeration in hilbert_count_bruteforce, which it is tested
/// against.
std::map<long, BigInt> index_character_partial_sums(const ConeVariety& v,
                                                    const ReebVector& xi,
                                                    long cutoff);

/// Evaluates F at a small real t in ~212-bit floating point and compares
/// t^n F / (n-1)! against the exact a0 to the given relative tolerance.
bool numeric_leading_check(const ConeVariety& v, const ReebVector& xi,
                           const BigFloat& t, const BigFloat& rel_tol);

}  // namespace kstab
