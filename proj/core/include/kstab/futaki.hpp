#pragma once

#include <optional>
#include <string>
#include <vector>

#include "kstab/cone_variety.hpp"
#include "kstab/gauge.hpp"
#include "kstab/volume_min.hpp"

namespace kstab {

/// Where the normality of a central fiber comes from. It is never verified
/// algorithmically here: registered families carry known-normal fibers,
/// user-supplied degenerations must be asserted explicitly.
enum class Normality { KnownFamily, Asserted, Unchecked };

std::string to_string(Normality n);

/// Equivariant special degeneration: a one-parameter diagonal subgroup with
/// integer weights w, commuting with the torus, together with the central
/// fiber it produces (the minimal-w-weight part of the defining polynomial).
struct TestConfiguration {
  std::vector<BigInt> w;
  ConeVariety central_fiber;
  Normality normality = Normality::Unchecked;
  /// True when the central fiber has the same support as the source, so the
  /// degeneration is a product configuration.
  bool is_product = false;
  std::string name;
};

/// Monomials of minimal w-weight: the terms that survive the flat limit as
/// the subgroup parameter approaches zero. Always nonempty.
std::vector<Monomial> initial_part(const std::vector<Monomial>& fsupport,
                                   const std::vector<BigInt>& w);

TestConfiguration make_test_configuration(const ConeVariety& x,
                                          std::vector<BigInt> w,
                                          Normality normality,
                                          std::string name = {});

enum class SignClass { Positive, Zero, Negative };

/// Futaki invariant of one test configuration, evaluated on the central
/// fiber along the degeneration direction. Both published formulas are
/// computed and must agree exactly:
///   fut            = a0/(n-1) D_w(a1/a0) + a1 D_w a0 / (n(n-1) a0)
///   fut_via_volume = 1/2 D_{w'} a0, with w' the normalized direction.
struct FutakiReport {
  Rational fut;
  Rational fut_via_volume;
  Rational a0_central_fiber;
  Rational a1_central_fiber;
  Direction w_normalized;
  SignClass verdict_contribution;
  Normality normality;
  bool is_product;
  std::string name;
};

FutakiReport futaki_invariant(const TestConfiguration& tc,
                              const NormalizedReeb& xi);

enum class Stability { Stable, Unstable, MarginallyDestabilized };

/// Outcome of the K-stability test against an explicit list of
/// degenerations. `coverage` names exactly what was checked; the verdict
/// never claims more than that.
struct Verdict {
  Stability stability;
  std::optional<std::size_t> witness;  // index into the evaluated reports
  std::vector<FutakiReport> reports;
  std::string coverage;
};

std::string to_string(Stability s);

/// Evaluates every supplied test configuration at the volume minimizer and
/// combines the signs: Stable needs Fut > 0 for every non-product
/// configuration; a negative value is a destabilizing witness; an exact zero
/// with a fiber different from x is marginal. Checks first that xi_star is
/// critical for a0 along every supplied toric slice direction (exact), and
/// refuses to proceed otherwise.
Verdict k_stability_verdict(const ConeVariety& x, const NormalizedReeb& xi_star,
                            const std::vector<TestConfiguration>& tcs,
                            const std::vector<ReebVector>& toric_directions);

}  // namespace kstab
