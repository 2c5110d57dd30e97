#include "kstab/volume_min.hpp"

#include "doctest.h"
#include "kstab/families.hpp"
#include "test_util.hpp"

using namespace kstab;

namespace {

ConeVariety ambient_diag(unsigned n) {
  std::vector<std::vector<BigInt>> rows(n, std::vector<BigInt>(n, BigInt(0)));
  for (unsigned i = 0; i < n; ++i) rows[i][i] = 1;
  return ConeVariety::ambient(TorusWeights(n, n, std::move(rows)));
}

bool proportional(const std::vector<Rational>& a, const std::vector<Rational>& b) {
  REQUIRE(a.size() == b.size());
  Rational ratio(0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (b[i] == 0) return a[i] == 0;
    const Rational r = a[i] / b[i];
    if (ratio == 0)
      ratio = r;
    else if (r != ratio)
      return false;
  }
  return ratio > 0;
}

}  // namespace

TEST_SUITE_BEGIN("volume_min");

TEST_CASE("normalized slice of ambient C^3") {
  const auto c3 = ambient_diag(3);
  const ReebVector xi0 = {Rational(2), Rational(1), Rational(1)};
  const auto slice = build_slice(c3, xi0);
  CHECK(slice.dim() == 2);
  CHECK(canonical_weight(c3, slice.base) == Rational(3));
  for (const auto& dir : slice.tangent) {
    Rational sum(0);
    for (const auto& x : dir) sum += x;
    CHECK(sum == 0);
  }
}

TEST_CASE("rank-2 families have one-dimensional slices") {
  CHECK(build_slice(make_family(Family::BP, 3, 2).variety, {Rational(1), Rational(1)})
            .dim() == 1);
  CHECK(build_slice(make_family(Family::YY2, 4, 3).variety,
                    {Rational(1), Rational(1)})
            .dim() == 1);
}

TEST_CASE("exact minimizer of the BP family") {
  for (long p = 2; p <= 8; ++p) {
    for (long q = 2; q <= 8; ++q) {
      if (std::max(p, q) <= 2) continue;
      const auto inst = make_family(Family::BP, p, q);
      const auto slice = build_slice(inst.variety, inst.inner_point);
      const auto min = minimize_volume_exact_1d(inst.variety, slice);
      CHECK(min.kind == MinimizerKind::ExactRational);
      CHECK(proportional(
          coordinate_weights(inst.variety, min.xi_star),
          {Rational(p * q), Rational(p * q), Rational(2 * q), Rational(2 * p)}));
      CHECK(min.volume == Rational(2 * (p + q) * (p + q) * (p + q),
                                   27 * p * p * q * q));
    }
  }
}

TEST_CASE("exact minimizer of the YY2 family") {
  for (long p = 2; p <= 6; ++p) {
    for (long q = 2; q <= 6; ++q) {
      const auto inst = make_family(Family::YY2, p, q);
      const auto slice = build_slice(inst.variety, inst.inner_point);
      const auto min = minimize_volume_exact_1d(inst.variety, slice);
      CHECK(min.kind == MinimizerKind::ExactRational);
      CHECK(proportional(coordinate_weights(inst.variety, min.xi_star),
                         {Rational(q * p), Rational(q * p), Rational(2 * q),
                          Rational(2 * (p - 1))}));
      const Rational s(p + q - 1);
      CHECK(min.volume == 2 * s * s * s / Rational(27 * p * q * q * (p - 1)));
    }
  }
}

TEST_CASE("symmetric quadric minimizes at the midpoint") {
  // uv + w^2 with the rank-2 torus (1,-1,0), (0,2,1).
  TorusWeights w(2, 3,
                 {{BigInt(1), BigInt(-1), BigInt(0)},
                  {BigInt(0), BigInt(2), BigInt(1)}});
  const auto quadric =
      ConeVariety::hypersurface(w, {Monomial{1, 1, 0}, Monomial{0, 0, 2}});
  const auto slice = build_slice(quadric, {Rational(1), Rational(1)});
  const auto min = minimize_volume_exact_1d(quadric, slice);
  CHECK(min.kind == MinimizerKind::ExactRational);
  CHECK(coordinate_weights(quadric, min.xi_star) ==
        std::vector<Rational>{2, 2, 2});
  CHECK(min.volume == Rational(1, 2));
}

TEST_CASE("critical point certificate: the slice derivative vanishes") {
  const auto inst = make_family(Family::YY3, 4, 3);
  const auto slice = build_slice(inst.variety, inst.inner_point);
  const auto min = minimize_volume_exact_1d(inst.variety, slice);
  REQUIRE(min.kind == MinimizerKind::ExactRational);
  const Direction tangent_ambient =
      coordinate_weights(inst.variety, slice.tangent[0]);
  const auto [a0s, a1s] = laurent_ratfuns(
      build_index_character(inst.variety, min.xi_star, tangent_ambient));
  CHECK(a0s.eval_and_derivative_at_zero().second == 0);
}

TEST_CASE("numeric minimizer on ambient C^3 finds the barycenter") {
  const auto c3 = ambient_diag(3);
  const auto slice = build_slice(c3, {Rational(5), Rational(1), Rational(2)});
  const auto min =
      minimize_volume_numeric(c3, slice, Rational(1, 1000000000000LL));
  const auto w = coordinate_weights(c3, min.xi_star);
  for (const auto& x : w) {
    const Rational err = x - 1;
    CHECK(abs(err) < Rational(1, 100000000));
  }
  CHECK(min.kind == MinimizerKind::Numeric);
}

TEST_CASE("numeric and exact solvers agree on rank-2 instances") {
  const Rational tol(1, 10000000000LL);
  for (const auto [p, q] :
       {std::pair<long, long>{4, 3}, {3, 2}, {7, 5}, {12, 7}}) {
    const auto inst = make_family(Family::BP, p, q);
    const auto slice = build_slice(inst.variety, inst.inner_point);
    const auto exact = minimize_volume_exact_1d(inst.variety, slice);
    const auto numeric = minimize_volume_numeric(inst.variety, slice, tol);
    REQUIRE(exact.params.size() == 1);
    REQUIRE(numeric.params.size() == 1);
    CHECK(abs(exact.params[0] - numeric.params[0]) < Rational(1, 100000000));
  }
}

TEST_CASE("numeric solver converges from a near-boundary start") {
  const auto inst = make_family(Family::BP, 3, 2);
  const auto slice = build_slice(inst.variety, inst.inner_point);
  const auto exact = minimize_volume_exact_1d(inst.variety, slice);
  // The admissible interval is (-3/5, 3); start next to each wall.
  for (const Rational& start : {Rational(-59, 100), Rational(29, 10)}) {
    REQUIRE(reeb_cone_contains(inst.variety, slice.at({start})));
    const auto numeric = minimize_volume_numeric(
        inst.variety, slice, Rational(1, 10000000000LL),
        std::vector<Rational>{start});
    CHECK(abs(exact.params[0] - numeric.params[0]) < Rational(1, 100000000));
  }
}

TEST_CASE("volume is convex along the slice") {
  testing::RationalGen gen(161803);
  for (const auto& inst :
       {make_family(Family::BP, 3, 2), make_family(Family::YY2, 3, 2),
        make_family(Family::YY3, 3, 3)}) {
    const auto slice = build_slice(inst.variety, inst.inner_point);
    int sampled = 0;
    while (sampled < 100) {
      const Rational u = Rational(gen.integer(-100, 300)) / 100;
      const Rational h = Rational(gen.integer(1, 20)) / 100;
      const auto xs = {u - h, u, u + h};
      bool inside = true;
      for (const auto& x : xs)
        if (!reeb_cone_contains(inst.variety, slice.at({x}))) inside = false;
      if (!inside) continue;
      const Rational second = volume(inst.variety, slice.at({u - h})) -
                              2 * volume(inst.variety, slice.at({u})) +
                              volume(inst.variety, slice.at({u + h}));
      CHECK(second >= 0);
      ++sampled;
    }
  }
}

TEST_CASE("volume shrinks along the K-stable subfamily") {
  for (long m = 1; m <= 3; ++m) {
    Rational prev(0);
    for (long p = 3; p <= 20; ++p) {
      const auto inst = make_family(Family::BP, p * m, (p - 1) * m);
      const auto slice = build_slice(inst.variety, inst.inner_point);
      const auto min = minimize_volume_exact_1d(inst.variety, slice);
      const Rational expected(2 * (2 * p - 1) * (2 * p - 1) * (2 * p - 1),
                              27 * m * p * p * (p - 1) * (p - 1));
      CHECK(min.volume == expected);
      if (p > 3) CHECK(min.volume < prev);
      prev = min.volume;
    }
  }
}

TEST_SUITE_END();
