#include "kstab/gauge.hpp"

namespace kstab {

Rational a1_over_a0(const ConeVariety& v, const ReebVector& xi) {
  const LaurentData lc = laurent_coefficients(build_index_character(v, xi));
  return lc.a1 / lc.a0;
}

NormalizedReeb normalize_reeb(const ConeVariety& v, const ReebVector& xi) {
  if (!reeb_cone_contains(v, xi))
    throw PreconditionError("normalize_reeb: xi is not in the open Reeb cone");
  const Rational ratio = a1_over_a0(v, xi);
  if (ratio <= 0)
    throw PreconditionError(
        "normalize_reeb: a1/a0 <= 0, no normalized polarization along this "
        "direction (not a log-terminal direction)");
  const Rational target = Rational(v.n) * Rational(v.n - 1) / 2;
  const Rational c = target / ratio;
  ReebVector scaled(xi);
  for (Rational& x : scaled) x *= c;
  const Rational check = a1_over_a0(v, scaled);
  if (check != target)
    throw InternalConsistencyError(
        "normalize_reeb: certificate failed after scaling");
  return {std::move(scaled), check};
}

Direction normalize_direction(const ConeVariety& y, const NormalizedReeb& nr,
                              const Direction& w) {
  const Rational target = Rational(y.n) * Rational(y.n - 1) / 2;
  if (a1_over_a0(y, nr.xi) != target)
    throw PreconditionError(
        "normalize_direction: xi is not normalized on this variety");
  const auto [a0s, a1s] = laurent_ratfuns(build_index_character(y, nr.xi, w));
  const Rational deriv = (a1s / a0s).eval_and_derivative_at_zero().second;
  const Rational c = deriv / target;
  const auto xi_ambient = coordinate_weights(y, nr.xi);
  Direction projected(w);
  for (std::size_t i = 0; i < projected.size(); ++i)
    projected[i] -= c * xi_ambient[i];
  // The projection is exact: D_{xi}(a1/a0) = n(n-1)/2 by degree-1
  // homogeneity, so the residual derivative must vanish identically.
  const auto [b0s, b1s] =
      laurent_ratfuns(build_index_character(y, nr.xi, projected));
  const Rational residual = (b1s / b0s).eval_and_derivative_at_zero().second;
  if (residual != 0)
    throw InternalConsistencyError(
        "normalize_direction: projected direction still moves a1/a0");
  return projected;
}

}  // namespace kstab
