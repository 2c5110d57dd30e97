#include "kstab/futaki.hpp"

#include <algorithm>
#include <sstream>

namespace kstab {

std::string to_string(Normality n) {
  switch (n) {
    case Normality::KnownFamily: return "known-family";
    case Normality::Asserted: return "asserted";
    case Normality::Unchecked: return "unchecked";
  }
  return "?";
}

std::string to_string(Stability s) {
  switch (s) {
    case Stability::Stable: return "Stable";
    case Stability::Unstable: return "Unstable";
    case Stability::MarginallyDestabilized: return "MarginallyDestabilized";
  }
  return "?";
}

std::vector<Monomial> initial_part(const std::vector<Monomial>& fsupport,
                                   const std::vector<BigInt>& w) {
  if (fsupport.empty()) return {};
  BigInt min_weight = monomial_direction_weight(fsupport.front(), w);
  for (std::size_t k = 1; k < fsupport.size(); ++k)
    min_weight = std::min(min_weight, monomial_direction_weight(fsupport[k], w));
  std::vector<Monomial> kept;
  for (const auto& mono : fsupport)
    if (monomial_direction_weight(mono, w) == min_weight) kept.push_back(mono);
  return kept;
}

TestConfiguration make_test_configuration(const ConeVariety& x,
                                          std::vector<BigInt> w,
                                          Normality normality,
                                          std::string name) {
  if (w.size() != x.num_coords())
    throw PreconditionError("degeneration weight length does not match N");
  if (!x.is_hypersurface())
    throw PreconditionError(
        "test configurations are built from hypersurface data");
  std::vector<Monomial> fiber_support = initial_part(x.fsupport, w);
  const bool product = fiber_support.size() == x.fsupport.size();
  ConeVariety fiber = ConeVariety::hypersurface(x.weights, std::move(fiber_support),
                                                x.variable_names);
  fiber.gorenstein_m = x.gorenstein_m;
  return TestConfiguration{std::move(w), std::move(fiber), normality, product,
                           std::move(name)};
}

FutakiReport futaki_invariant(const TestConfiguration& tc,
                              const NormalizedReeb& xi) {
  const ConeVariety& y = tc.central_fiber;
  if (!reeb_cone_contains(y, xi.xi))
    throw PreconditionError(
        "futaki_invariant: xi is outside the Reeb cone of the central fiber");
  const unsigned n = y.n;
  if (n < 2)
    throw PreconditionError("futaki_invariant needs dimension n >= 2");
  const Rational target = Rational(n) * Rational(n - 1) / 2;
  if (a1_over_a0(y, xi.xi) != target)
    throw PreconditionError(
        "futaki_invariant: xi is not normalized on the central fiber");

  Direction w_dir(tc.w.size());
  for (std::size_t i = 0; i < tc.w.size(); ++i) w_dir[i] = Rational(tc.w[i]);

  // Definition form, everything on the central fiber.
  const auto [a0s, a1s] = laurent_ratfuns(build_index_character(y, xi.xi, w_dir));
  const auto [a0_val, a0_der] = a0s.eval_and_derivative_at_zero();
  const auto ratio_der = (a1s / a0s).eval_and_derivative_at_zero().second;
  const Rational a1_val = a1s.eval_and_derivative_at_zero().first;
  const Rational fut = a0_val / Rational(n - 1) * ratio_der +
                       a1_val * a0_der / (Rational(n) * Rational(n - 1) * a0_val);

  // Volume-derivative form along the normalized direction.
  const Direction w_norm = normalize_direction(y, xi, w_dir);
  const auto [b0s, b1s] = laurent_ratfuns(build_index_character(y, xi.xi, w_norm));
  const Rational fut_vol = b0s.eval_and_derivative_at_zero().second / 2;

  if (fut != fut_vol) {
    std::ostringstream os;
    os << "Futaki invariant mismatch between the definition form ("
       << to_string(fut) << ") and the volume-derivative form ("
       << to_string(fut_vol) << ")";
    throw InternalConsistencyError(os.str());
  }

  FutakiReport report;
  report.fut = fut;
  report.fut_via_volume = fut_vol;
  report.a0_central_fiber = a0_val;
  report.a1_central_fiber = a1_val;
  report.w_normalized = w_norm;
  report.verdict_contribution = fut == 0 ? SignClass::Zero
                                : fut > 0 ? SignClass::Positive
                                          : SignClass::Negative;
  report.normality = tc.normality;
  report.is_product = tc.is_product;
  report.name = tc.name;
  return report;
}

Verdict k_stability_verdict(const ConeVariety& x, const NormalizedReeb& xi_star,
                            const std::vector<TestConfiguration>& tcs,
                            const std::vector<ReebVector>& toric_directions) {
  // The minimizer certificate: a0 must be critical along the supplied slice
  // directions. These are directions in the torus algebra; their ambient
  // images are automatically semi-invariant.
  for (const auto& dir : toric_directions) {
    const Direction ambient = coordinate_weights(x, dir);
    const auto [a0s, a1s] =
        laurent_ratfuns(build_index_character(x, xi_star.xi, ambient));
    if (a0s.eval_and_derivative_at_zero().second != 0)
      throw PreconditionError(
          "k_stability_verdict: xi_star is not a critical point of the "
          "volume along the supplied toric directions");
  }

  Verdict verdict;
  verdict.stability = Stability::Stable;
  std::ostringstream cov;
  cov << "verdict relative to " << tcs.size()
      << " supplied test configuration(s)";
  if (!tcs.empty()) {
    cov << " [";
    for (std::size_t i = 0; i < tcs.size(); ++i)
      cov << (i ? ", " : "") << (tcs[i].name.empty() ? "?" : tcs[i].name);
    cov << "]";
  }
  cov << " and " << toric_directions.size() << " toric slice direction(s)";
  verdict.coverage = cov.str();

  for (const auto& tc : tcs) {
    FutakiReport report = futaki_invariant(tc, xi_star);
    verdict.reports.push_back(report);
    if (tc.is_product) continue;  // product configurations never destabilize
    const std::size_t idx = verdict.reports.size() - 1;
    if (report.verdict_contribution == SignClass::Negative) {
      verdict.stability = Stability::Unstable;
      if (!verdict.witness) verdict.witness = idx;
    } else if (report.verdict_contribution == SignClass::Zero &&
               verdict.stability == Stability::Stable) {
      verdict.stability = Stability::MarginallyDestabilized;
      verdict.witness = idx;
    }
  }
  if (verdict.stability == Stability::Unstable) {
    // Prefer the strictly negative witness even if a zero came first.
    for (std::size_t i = 0; i < verdict.reports.size(); ++i)
      if (verdict.reports[i].verdict_contribution == SignClass::Negative &&
          !verdict.reports[i].is_product) {
        verdict.witness = i;
        break;
      }
  }
  return verdict;
}

}  // namespace kstab
