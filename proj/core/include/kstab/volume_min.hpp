#pragma once

#include <optional>
#include <vector>

#include "kstab/cone_variety.hpp"
#include "kstab/gauge.hpp"
#include "kstab/index_character.hpp"

namespace kstab {

/// Affine parametrization of the normalized slice
/// { xi in the open Reeb cone : (a1/a0)(xi) = n(n-1)/2 }: a base point on the
/// slice plus a rational basis of the tangent space (dimension r-1). Since
/// a1/a0 = l(xi)(n-1)/(2m) is linear, the slice is the affine hyperplane
/// l(xi) = n m intersected with the cone.
struct SlicePolytope {
  ReebVector base;
  std::vector<ReebVector> tangent;

  unsigned dim() const { return static_cast<unsigned>(tangent.size()); }
  ReebVector at(const std::vector<Rational>& params) const;
};

enum class MinimizerKind { ExactRational, Numeric };

/// Volume minimizer over the normalized slice. For the numeric path,
/// xi_star is the (exactly rationalized) final iterate and residual_bound
/// records the certificate: the isolating interval width for the certified
/// 1-d bisection, or the gradient norm for Newton. The volume is always the
/// exact a0 evaluated at the returned point.
struct Minimizer {
  ReebVector xi_star;
  MinimizerKind kind;
  Rational volume;
  Rational residual_bound;
  std::vector<Rational> params;
};

/// Builds the normalized slice through the ray of xi0. Requires xi0 in the
/// open Reeb cone with l(xi0) > 0.
SlicePolytope build_slice(const ConeVariety& v, const ReebVector& xi0);

/// Exact minimization for one-dimensional slices (rank-2 torus). The
/// critical equation is a univariate polynomial with a single sign change on
/// the admissible interval by convexity of a0; the root is recovered exactly
/// when rational, otherwise isolated to an interval of width < 10^-12 with a
/// sign-change certificate.
Minimizer minimize_volume_exact_1d(const ConeVariety& v,
                                   const SlicePolytope& slice);

/// Projected Newton iteration on the slice parameters in ~212-bit floats,
/// with exact rational gradient/Hessian formulas evaluated numerically and
/// backtracking to stay inside the cone. Stops when the gradient norm drops
/// below tol; throws after 1000 iterations.
Minimizer minimize_volume_numeric(
    const ConeVariety& v, const SlicePolytope& slice, const Rational& tol,
    const std::optional<std::vector<Rational>>& start = std::nullopt);

/// a0(xi), the normalized volume of the link.
Rational volume(const ConeVariety& v, const ReebVector& xi);

}  // namespace kstab
