#include "kstab/series.hpp"

#include "doctest.h"
#include "kstab/polynomial.hpp"
#include "test_util.hpp"

using namespace kstab;

TEST_SUITE_BEGIN("series");

TEST_CASE("one_minus_exp_series matches the Taylor coefficients") {
  const auto s = one_minus_exp_series(Rational(1), 4);
  CHECK(s.valuation() == 1);
  CHECK(s.coeff(1) == Rational(1));
  CHECK(s.coeff(2) == Rational(-1, 2));
  CHECK(s.coeff(3) == Rational(1, 6));

  const auto z = one_minus_exp_series(Rational(0), 4);
  CHECK(z.is_zero());

  const auto h = one_minus_exp_series(Rational(3, 2), 3);
  CHECK(h.coeff(1) == Rational(3, 2));
  CHECK(h.coeff(2) == Rational(-9, 8));
  CHECK(h.order() == 3);
}

TEST_CASE("basic products and quotients") {
  const auto t = RationalSeries::monomial(Rational(1), 1, 8);
  const auto t2 = t * t;
  CHECK(t2.valuation() == 2);
  CHECK(t2.coeff(2) == Rational(1));

  // 1 / (1 - e^(-w t)) = 1/(w t) + 1/2 + (w/12) t + ...
  const Rational w(5, 2);
  const auto inv = RationalSeries::constant(Rational(1), 8) /
                   one_minus_exp_series(w, 8);
  CHECK(inv.valuation() == -1);
  CHECK(inv.coeff(-1) == Rational(1) / w);
  CHECK(inv.coeff(0) == Rational(1, 2));
  CHECK(inv.coeff(1) == w / 12);

  // (t - t^2/2) / t = 1 - t/2
  const RationalSeries num(1, {Rational(1), Rational(-1, 2)}, 6);
  const auto quo = num / t;
  CHECK(quo.valuation() == 0);
  CHECK(quo.coeff(0) == Rational(1));
  CHECK(quo.coeff(1) == Rational(-1, 2));
}

TEST_CASE("division by an effective zero is rejected") {
  const auto t = RationalSeries::monomial(Rational(1), 1, 6);
  CHECK_THROWS_AS(t / RationalSeries::zero(6), PreconditionError);
}

TEST_CASE("ring axioms on random series") {
  testing::RationalGen gen(20240901);
  for (int trial = 0; trial < 50; ++trial) {
    const auto x = gen.series();
    const auto y = gen.series();
    const auto z = gen.series();
    CHECK(((x + y) + z).agrees_with(x + (y + z)));
    CHECK((x * y).agrees_with(y * x));
    CHECK(((x * y) * z).agrees_with(x * (y * z)));
    CHECK((x * (y + z)).agrees_with(x * y + x * z));
  }
}

TEST_CASE("division inverts multiplication when defined") {
  testing::RationalGen gen(77);
  for (int trial = 0; trial < 50; ++trial) {
    const auto x = gen.series();
    auto y = gen.series();
    while (y.is_zero()) y = gen.series();
    const auto back = (x * y) / y;
    CHECK(back.agrees_with(x));
  }
}

TEST_CASE("negated_variable flips odd coefficients") {
  const RationalSeries s(-1, {Rational(2), Rational(3), Rational(5)}, 4);
  const auto m = s.negated_variable();
  CHECK(m.coeff(-1) == Rational(-2));
  CHECK(m.coeff(0) == Rational(3));
  CHECK(m.coeff(1) == Rational(-5));
}

TEST_SUITE_END();

TEST_SUITE_BEGIN("polynomial");

TEST_CASE("rational function evaluation and derivative at the origin") {
  // f(s) = 1/(2 - s) -> (1/2, 1/4)
  const UnivariateRationalFunction f(
      UnivariatePoly(Rational(1)),
      UnivariatePoly({Rational(2), Rational(-1)}));
  const auto [v, d] = f.eval_and_derivative_at_zero();
  CHECK(v == Rational(1, 2));
  CHECK(d == Rational(1, 4));
}

TEST_CASE("deformed leading coefficient of the A-type fiber") {
  // f(s) = C / (2 q lambda - s) at p = 3, q = 2, lambda = 3/10, with
  // C = 1/(2 lambda^2 p^2 q); direct substitution gives the frozen values.
  const Rational lambda(3, 10);
  const Rational c = Rational(1) / (2 * lambda * lambda * 9 * 2);
  const Rational two_q_lambda = 2 * 2 * lambda;
  CHECK(two_q_lambda == Rational(6, 5));
  const UnivariateRationalFunction f(
      UnivariatePoly(c), UnivariatePoly({two_q_lambda, Rational(-1)}));
  const auto [v, d] = f.eval_and_derivative_at_zero();
  CHECK(v == Rational(125, 486));
  CHECK(d == v / two_q_lambda);
  CHECK(d == Rational(625, 2916));
}

TEST_CASE("linear ratio form") {
  // f(s) = lambda (2p + 2q) - s with lambda = 3/(2(p+q)) -> (3, -1)
  const long p = 4, q = 7;
  const Rational lambda(3, 2 * (p + q));
  const UnivariateRationalFunction f(
      UnivariatePoly({lambda * (2 * p + 2 * q), Rational(-1)}),
      UnivariatePoly(Rational(1)));
  const auto [v, d] = f.eval_and_derivative_at_zero();
  CHECK(v == Rational(3));
  CHECK(d == Rational(-1));
}

TEST_CASE("pole at the origin is reported") {
  const UnivariateRationalFunction f(UnivariatePoly(Rational(1)),
                                     UnivariatePoly::variable());
  CHECK_THROWS_AS(f.eval_and_derivative_at_zero(), PreconditionError);
}

TEST_CASE("derivative agrees with a central finite difference") {
  testing::RationalGen gen(5150);
  const Rational h(1, 1000000);
  int checked = 0;
  while (checked < 40) {
    std::vector<Rational> nc, dc;
    for (int k = 0; k <= 3; ++k) nc.push_back(gen.value());
    for (int k = 0; k <= 3; ++k) dc.push_back(gen.value());
    UnivariatePoly den(dc);
    if (den.is_zero() || den.coeff(0) == 0) continue;
    if (den.eval(h) == 0 || den.eval(-h) == 0) continue;
    const UnivariateRationalFunction f(UnivariatePoly(nc), den);
    const auto [v, d] = f.eval_and_derivative_at_zero();
    if (d == 0) continue;
    const Rational fd = (f.eval(h) - f.eval(-h)) / (2 * h);
    const Rational rel = (fd - d) / d;
    CHECK(abs(rel) <= Rational(1, 10000));
    ++checked;
  }
}

TEST_CASE("polynomial gcd and reduction") {
  // (s^2 - 1)/(s - 1) reduces to s + 1.
  const UnivariatePoly num({Rational(-1), Rational(0), Rational(1)});
  const UnivariatePoly den({Rational(-1), Rational(1)});
  const UnivariateRationalFunction f(num, den);
  CHECK(f.den() == UnivariatePoly(Rational(1)));
  CHECK(f.num() == UnivariatePoly({Rational(1), Rational(1)}));
}

TEST_SUITE_END();
