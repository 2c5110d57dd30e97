#include "kstab/cone_variety.hpp"

#include "doctest.h"
#include "kstab/families.hpp"
#include "test_util.hpp"

using namespace kstab;

namespace {

ConeVariety bp(long p, long q) { return make_family(Family::BP, p, q).variety; }

ReebVector xi2(const Rational& x, const Rational& y) { return {x, y}; }

}  // namespace

TEST_SUITE_BEGIN("cone_variety");

TEST_CASE("coordinate weights of the Brieskorn-Pham torus") {
  const auto v = bp(3, 2);
  const auto w = coordinate_weights(v, xi2(6, 2));
  CHECK(w == std::vector<Rational>{6, 6, 4, 6});

  CHECK(coordinate_weights(v, xi2(0, 0)) ==
        std::vector<Rational>(4, Rational(0)));

  // Normalized polarization: the same ray scaled by 3/(2(p+q)) = 3/10.
  const auto wn = coordinate_weights(v, xi2(Rational(9, 5), Rational(3, 5)));
  CHECK(wn == std::vector<Rational>{Rational(9, 5), Rational(9, 5),
                                    Rational(6, 5), Rational(9, 5)});
}

TEST_CASE("presentation Reeb cone membership") {
  const auto v = bp(3, 2);
  CHECK(reeb_cone_contains(v, xi2(1, 1)));
  CHECK(coordinate_weights(v, xi2(1, 1)) == std::vector<Rational>{1, 5, 2, 3});
  CHECK_FALSE(reeb_cone_contains(v, xi2(1, 0)));   // v gets weight -1
  CHECK_FALSE(reeb_cone_contains(v, xi2(0, 1)));   // u sits on the boundary
}

TEST_CASE("degree of the defining polynomial") {
  const auto v = bp(5, 3);
  // At the polarization with ambient weights (pq, pq, 2q, 2p) the degree is
  // 2pq for every monomial of uv + z^p + w^q.
  const auto xi = xi2(15, 2);
  CHECK(coordinate_weights(v, xi) == std::vector<Rational>{15, 15, 6, 10});
  CHECK(degree(v, xi) == Rational(30));

  const auto yy3 = make_family(Family::YY3, 4, 3).variety;
  const auto xi3 = xi2(11, 2);  // ambient (pq-1, pq-1, 2(q-1), 2(p-1))
  CHECK(degree(yy3, xi3) == Rational(22));
}

TEST_CASE("inhomogeneous support is rejected") {
  TorusWeights w(1, 4, {{BigInt(1), BigInt(1), BigInt(1), BigInt(1)}});
  CHECK_THROWS_AS(ConeVariety::hypersurface(
                      w, {Monomial{1, 1, 0, 0}, Monomial{0, 0, 3, 0}}),
                  PreconditionError);
}

TEST_CASE("canonical weight") {
  // BP(p, q) at the normalized polarization has l = n = 3.
  const auto v = bp(3, 2);
  CHECK(canonical_weight(v, xi2(Rational(9, 5), Rational(3, 5))) == Rational(3));

  TorusWeights diag(3, 3,
                    {{BigInt(1), BigInt(0), BigInt(0)},
                     {BigInt(0), BigInt(1), BigInt(0)},
                     {BigInt(0), BigInt(0), BigInt(1)}});
  const auto c3 = ConeVariety::ambient(diag);
  CHECK(canonical_weight(c3, {Rational(1), Rational(1), Rational(1)}) ==
        Rational(3));

  const auto yy2 = make_family(Family::YY2, 4, 3).variety;
  // xi with ambient weights (qp, qp, 2q, 2(p-1)) gives l = 2(q+p-1).
  CHECK(canonical_weight(yy2, xi2(12, 2)) == Rational(12));
}

TEST_CASE("linearity in the polarization") {
  testing::RationalGen gen(31337);
  const auto v = make_family(Family::YY3, 5, 4).variety;
  for (int trial = 0; trial < 25; ++trial) {
    const ReebVector x = {gen.value(), gen.value()};
    const ReebVector y = {gen.value(), gen.value()};
    const Rational c = gen.value();
    ReebVector combo(2);
    for (int i = 0; i < 2; ++i) combo[i] = x[i] + c * y[i];
    const auto wx = coordinate_weights(v, x);
    const auto wy = coordinate_weights(v, y);
    const auto wc = coordinate_weights(v, combo);
    for (int i = 0; i < 4; ++i) CHECK(wc[i] == wx[i] + c * wy[i]);
    CHECK(degree(v, combo) == degree(v, x) + c * degree(v, y));
    CHECK(canonical_weight(v, combo) ==
          canonical_weight(v, x) + c * canonical_weight(v, y));
  }
}

TEST_CASE("cone membership is scale invariant") {
  testing::RationalGen gen(99);
  const auto v = bp(4, 3);
  for (int trial = 0; trial < 25; ++trial) {
    const ReebVector xi = {gen.value(), gen.value()};
    const Rational c = gen.positive();
    ReebVector scaled(2);
    for (int i = 0; i < 2; ++i) scaled[i] = c * xi[i];
    if (reeb_cone_contains(v, xi)) CHECK(reeb_cone_contains(v, scaled));
  }
}

TEST_CASE("brute-force Hilbert counts") {
  TorusWeights diag2(2, 2, {{BigInt(1), BigInt(0)}, {BigInt(0), BigInt(1)}});
  const auto c2 = ConeVariety::ambient(diag2);
  const auto counts = hilbert_count_bruteforce(c2, {Rational(1), Rational(1)}, 3);
  CHECK(counts.at(0) == 1);
  CHECK(counts.at(1) == 2);
  CHECK(counts.at(2) == 3);
  CHECK(counts.at(3) == 4);

  // The quadric surface uv + w^2 in C^3, all weights 1: dimensions 1, 3, 5.
  TorusWeights diag1(1, 3, {{BigInt(1), BigInt(1), BigInt(1)}});
  const auto quadric = ConeVariety::hypersurface(
      diag1, {Monomial{1, 1, 0}, Monomial{0, 0, 2}});
  const auto qc = hilbert_count_bruteforce(quadric, {Rational(1)}, 2);
  CHECK(qc.at(0) == 1);
  CHECK(qc.at(1) == 3);
  CHECK(qc.at(2) == 5);
}

TEST_CASE("enumeration size cap raises a size error") {
  TorusWeights diag4(1, 4, {{BigInt(1), BigInt(1), BigInt(1), BigInt(1)}});
  const auto c4 = ConeVariety::ambient(diag4);
  CHECK_THROWS_AS(hilbert_count_bruteforce(c4, {Rational(1)}, 100),
                  PreconditionError);
}

TEST_CASE("non-integer weights are rejected by the oracle") {
  const auto v = bp(3, 2);
  CHECK_THROWS_AS(
      hilbert_count_bruteforce(v, xi2(Rational(1, 2), Rational(1)), 10),
      PreconditionError);
}

TEST_SUITE_END();
