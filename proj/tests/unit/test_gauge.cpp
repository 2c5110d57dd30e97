#include "kstab/gauge.hpp"

#include "doctest.h"
#include "kstab/families.hpp"
#include "test_util.hpp"

using namespace kstab;

TEST_SUITE_BEGIN("gauge");

TEST_CASE("normalization scale for the Brieskorn-Pham ray") {
  for (const auto [p, q] : {std::pair<long, long>{3, 2}, {5, 3}, {6, 4}}) {
    const auto inst = make_family(Family::BP, p, q);
    const long m = std::gcd(p, q);
    // xi with ambient weights (pq, pq, 2q, 2p) is (pq, 2m) in torus basis.
    const ReebVector xi = {Rational(p * q), Rational(2 * m)};
    const auto nr = normalize_reeb(inst.variety, xi);
    const Rational c(3, 2 * (p + q));
    CHECK(nr.xi == ReebVector{c * xi[0], c * xi[1]});
    CHECK(nr.certificate == Rational(3));
    CHECK(canonical_weight(inst.variety, nr.xi) == Rational(3));
  }
}

TEST_CASE("YY3 normalization scale") {
  for (const auto [p, q] : {std::pair<long, long>{3, 3}, {4, 3}, {5, 2}}) {
    const auto inst = make_family(Family::YY3, p, q);
    const ReebVector xi = {Rational(p * q - 1), Rational(2)};
    const auto weights = coordinate_weights(inst.variety, xi);
    CHECK(weights == std::vector<Rational>{Rational(p * q - 1), Rational(p * q - 1),
                                           Rational(2 * (q - 1)),
                                           Rational(2 * (p - 1))});
    const auto nr = normalize_reeb(inst.variety, xi);
    const Rational c(3, 2 * (p + q - 2));
    CHECK(nr.xi == ReebVector{c * xi[0], c * xi[1]});
  }
}

TEST_CASE("normalize_reeb is idempotent and scale equivariant") {
  testing::RationalGen gen(8128);
  const auto inst = make_family(Family::YY2, 5, 4);
  for (int trial = 0; trial < 10;) {
    ReebVector xi = {gen.positive(), gen.positive()};
    if (!reeb_cone_contains(inst.variety, xi)) continue;
    const auto nr = normalize_reeb(inst.variety, xi);
    const auto again = normalize_reeb(inst.variety, nr.xi);
    CHECK(again.xi == nr.xi);
    const Rational c = gen.positive();
    const auto scaled = normalize_reeb(inst.variety, {c * xi[0], c * xi[1]});
    CHECK(scaled.xi == nr.xi);
    CHECK(canonical_weight(inst.variety, nr.xi) ==
          Rational(inst.variety.n) * Rational(inst.variety.gorenstein_m));
    ++trial;
  }
}

TEST_CASE("projection along the polarization itself vanishes") {
  const auto inst = make_family(Family::BP, 4, 3);
  const auto nr = normalize_reeb(inst.variety, {Rational(12), Rational(2)});
  const Direction xi_ambient = coordinate_weights(inst.variety, nr.xi);
  const Direction projected = normalize_direction(inst.variety, nr, xi_ambient);
  for (const Rational& x : projected) CHECK(x == 0);
}

TEST_CASE("projection of the degeneration direction on the A-type fiber") {
  // On the BP(3,2) fiber uv + w^2, D_eta(a1/a0) = 1, so
  // w' = eta - (1/3) * ambient(xi).
  const auto inst = make_family(Family::BP, 3, 2);
  const auto& fiber = inst.registered_tcs[0].central_fiber;
  const auto nr = normalize_reeb(fiber, {Rational(6), Rational(2)});
  const Direction eta = {Rational(0), Rational(0), Rational(1), Rational(0)};
  const Direction w = normalize_direction(fiber, nr, eta);
  const auto xi_ambient = coordinate_weights(fiber, nr.xi);
  for (std::size_t i = 0; i < 4; ++i)
    CHECK(w[i] == eta[i] - xi_ambient[i] / 3);

  // Re-projecting a normalized direction is the identity.
  const Direction again = normalize_direction(fiber, nr, w);
  CHECK(again == w);
}

TEST_CASE("non-log-terminal ray is rejected") {
  // A hypersurface of degree above the weight sum has l < 0 everywhere.
  TorusWeights diag(1, 3, {{BigInt(1), BigInt(1), BigInt(1)}});
  const auto heavy = ConeVariety::hypersurface(
      diag, {Monomial{4, 0, 0}, Monomial{0, 4, 0}, Monomial{0, 0, 4}});
  CHECK_THROWS_AS(normalize_reeb(heavy, {Rational(1)}), PreconditionError);
}

TEST_SUITE_END();
