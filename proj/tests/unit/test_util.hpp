#pragma once

#include <random>

#include "kstab/rational.hpp"
#include "kstab/series.hpp"

namespace kstab::testing {

/// Deterministic rational generator for property tests.
class RationalGen {
 public:
  explicit RationalGen(unsigned seed) : rng_(seed) {}

  Rational nonzero(int lo = -9, int hi = 9) {
    Rational x = value(lo, hi);
    while (x == 0) x = value(lo, hi);
    return x;
  }

  Rational value(int lo = -9, int hi = 9) {
    std::uniform_int_distribution<int> num(lo, hi);
    std::uniform_int_distribution<int> den(1, 9);
    return Rational(num(rng_), den(rng_));
  }

  Rational positive(int hi = 9) {
    std::uniform_int_distribution<int> num(1, hi);
    std::uniform_int_distribution<int> den(1, 9);
    return Rational(num(rng_), den(rng_));
  }

  long integer(long lo, long hi) {
    std::uniform_int_distribution<long> d(lo, hi);
    return d(rng_);
  }

  RationalSeries series(int min_val = -3, int max_val = 3, int order = 8) {
    std::uniform_int_distribution<int> vd(min_val, max_val);
    const int val = vd(rng_);
    std::vector<Rational> coeffs;
    for (int k = val; k < order; ++k) coeffs.push_back(value());
    return RationalSeries(val, std::move(coeffs), order);
  }

  std::mt19937& rng() { return rng_; }

 private:
  std::mt19937 rng_;
};

}  // namespace kstab::testing
