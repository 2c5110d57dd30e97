#include "kstab/volume_min.hpp"

#include <algorithm>
#include <sstream>

#include "kstab/polynomial.hpp"

namespace kstab {

ReebVector SlicePolytope::at(const std::vector<Rational>& params) const {
  if (params.size() != tangent.size())
    throw PreconditionError("slice parameter count does not match dimension");
  ReebVector xi(base);
  for (std::size_t j = 0; j < tangent.size(); ++j)
    for (std::size_t i = 0; i < xi.size(); ++i) xi[i] += params[j] * tangent[j][i];
  return xi;
}

SlicePolytope build_slice(const ConeVariety& v, const ReebVector& xi0) {
  if (!reeb_cone_contains(v, xi0))
    throw PreconditionError("build_slice: xi0 is not in the open Reeb cone");
  const unsigned r = v.rank();
  // l as a linear functional on the torus algebra.
  std::vector<Rational> l(r, Rational(0));
  const Character chi_f =
      v.is_hypersurface() ? fcharacter(v) : Character(r, BigInt(0));
  for (unsigned j = 0; j < r; ++j) {
    for (unsigned i = 0; i < v.num_coords(); ++i)
      l[j] += Rational(v.weights.entry(j, i));
    l[j] -= Rational(chi_f[j]);
  }
  const Rational l_xi0 = canonical_weight(v, xi0);
  if (l_xi0 <= 0)
    throw PreconditionError(
        "build_slice: l(xi0) <= 0, the normalized slice does not meet this "
        "ray");
  const Rational target = Rational(v.n) * Rational(v.gorenstein_m);
  SlicePolytope slice;
  slice.base = xi0;
  for (Rational& x : slice.base) x *= target / l_xi0;
  // Tangent space: kernel of l.
  unsigned pivot = r;
  for (unsigned j = 0; j < r; ++j)
    if (l[j] != 0) {
      pivot = j;
      break;
    }
  if (pivot == r)
    throw InternalConsistencyError("build_slice: l vanishes identically");
  for (unsigned j = 0; j < r; ++j) {
    if (j == pivot) continue;
    ReebVector dir(r, Rational(0));
    dir[j] = 1;
    dir[pivot] = -l[j] / l[pivot];
    slice.tangent.push_back(std::move(dir));
  }
  return slice;
}

namespace {

struct AffineWeights {
  // a_i(u) = A[i] + sum_j B[i][j] u_j, and the degree form likewise.
  std::vector<Rational> a0;
  std::vector<std::vector<Rational>> grad;
  Rational d0;
  std::vector<Rational> dgrad;
  unsigned n;
};

AffineWeights affine_weights(const ConeVariety& v, const SlicePolytope& slice) {
  AffineWeights aw;
  aw.n = v.n;
  aw.a0 = coordinate_weights(v, slice.base);
  for (const auto& dir : slice.tangent)
    aw.grad.push_back(coordinate_weights(v, dir));
  if (v.is_hypersurface()) {
    aw.d0 = degree(v, slice.base);
    for (const auto& dir : slice.tangent) aw.dgrad.push_back(degree(v, dir));
  } else {
    aw.d0 = Rational(1);  // ambient space: constant numerator
    aw.dgrad.assign(slice.tangent.size(), Rational(0));
  }
  return aw;
}

// a0 as a univariate rational function along a 1-d slice. Returns
// numerator (degree form or 1) and denominator (n-1)! * prod a_i(u).
std::pair<UnivariatePoly, UnivariatePoly> volume_ratfun_1d(
    const ConeVariety& v, const AffineWeights& aw) {
  UnivariatePoly num =
      v.is_hypersurface()
          ? UnivariatePoly(aw.d0) + UnivariatePoly::monomial(aw.dgrad[0], 1)
          : UnivariatePoly(Rational(1));
  UnivariatePoly den(Rational(factorial(aw.n - 1)));
  for (std::size_t i = 0; i < aw.a0.size(); ++i) {
    den *= UnivariatePoly(aw.a0[i]) + UnivariatePoly::monomial(aw.grad[0][i], 1);
  }
  return {std::move(num), std::move(den)};
}

struct Interval {
  bool lo_bounded = false, hi_bounded = false;
  Rational lo, hi;
};

Interval admissible_interval_1d(const AffineWeights& aw) {
  Interval iv;
  for (std::size_t i = 0; i < aw.a0.size(); ++i) {
    const Rational& slope = aw.grad[0][i];
    if (slope == 0) {
      if (aw.a0[i] <= 0)
        throw PreconditionError("empty admissible interval on the slice");
      continue;
    }
    const Rational bound = -aw.a0[i] / slope;
    if (slope > 0) {
      if (!iv.lo_bounded || bound > iv.lo) iv.lo = bound;
      iv.lo_bounded = true;
    } else {
      if (!iv.hi_bounded || bound < iv.hi) iv.hi = bound;
      iv.hi_bounded = true;
    }
  }
  if (iv.lo_bounded && iv.hi_bounded && iv.lo >= iv.hi)
    throw PreconditionError("empty admissible interval on the slice");
  return iv;
}

}  // namespace

Minimizer minimize_volume_exact_1d(const ConeVariety& v,
                                   const SlicePolytope& slice) {
  if (slice.dim() != 1)
    throw PreconditionError("minimize_volume_exact_1d needs a 1-d slice");
  const AffineWeights aw = affine_weights(v, slice);
  const Interval iv = admissible_interval_1d(aw);
  if (!iv.lo_bounded || !iv.hi_bounded)
    throw PreconditionError(
        "normalized slice is unbounded: the volume infimum is approached "
        "along a cone direction and no interior minimizer exists");
  auto [num, den] = volume_ratfun_1d(v, aw);
  // Sign of a0'(u) inside the cone equals the sign of g = num' den - num den'.
  const UnivariatePoly g = num.derivative() * den - num * den.derivative();
  const auto sign_at = [&](const Rational& u) {
    const Rational val = g.eval(u);
    return val == 0 ? 0 : (val > 0 ? 1 : -1);
  };
  // a0 blows up at both walls, so the derivative is negative near lo and
  // positive near hi; hunt inward for a sign bracket.
  const Rational width = iv.hi - iv.lo;
  Rational a, b;
  bool found_a = false, found_b = false;
  Rational step = width / 4;
  for (int k = 0; k < 200 && !(found_a && found_b); ++k) {
    if (!found_a) {
      const Rational cand = iv.lo + step;
      const int s = sign_at(cand);
      if (s < 0) {
        a = cand;
        found_a = true;
      } else if (s == 0) {
        a = cand;
        b = cand;
        found_a = found_b = true;
      }
    }
    if (!found_b) {
      const Rational cand = iv.hi - step;
      const int s = sign_at(cand);
      if (s > 0) {
        b = cand;
        found_b = true;
      } else if (s == 0) {
        a = cand;
        b = cand;
        found_a = found_b = true;
      }
    }
    step /= 2;
  }
  if (!found_a || !found_b)
    throw PreconditionError(
        "no interior critical point found: the volume minimum sits on the "
        "boundary of the normalized slice");
  const Rational tol("1/1000000000000");
  while (b - a > tol) {
    const Rational mid = (a + b) / 2;
    const int s = sign_at(mid);
    if (s == 0) {
      a = mid;
      b = mid;
      break;
    }
    (s < 0 ? a : b) = mid;
  }
  Rational u_star;
  MinimizerKind kind;
  Rational residual;
  if (a == b) {
    u_star = a;
    kind = MinimizerKind::ExactRational;
    residual = 0;
  } else {
    const Rational candidate = simplest_rational_in(a, b);
    if (g.eval(candidate) == 0) {
      u_star = candidate;
      kind = MinimizerKind::ExactRational;
      residual = 0;
    } else {
      u_star = (a + b) / 2;
      kind = MinimizerKind::Numeric;
      residual = b - a;
    }
  }
  Minimizer m;
  m.params = {u_star};
  m.xi_star = slice.at(m.params);
  m.kind = kind;
  m.residual_bound = residual;
  m.volume = volume(v, m.xi_star);
  return m;
}

Minimizer minimize_volume_numeric(
    const ConeVariety& v, const SlicePolytope& slice, const Rational& tol,
    const std::optional<std::vector<Rational>>& start) {
  if (slice.dim() < 1)
    throw PreconditionError("minimize_volume_numeric needs slice dimension >= 1");
  if (tol <= 0) throw PreconditionError("tolerance must be positive");
  const AffineWeights aw = affine_weights(v, slice);
  const std::size_t k = slice.dim();
  const std::size_t nc = aw.a0.size();

  std::vector<BigFloat> u(k, BigFloat(0));
  if (start) {
    if (start->size() != k)
      throw PreconditionError("start point dimension does not match slice");
    for (std::size_t j = 0; j < k; ++j) u[j] = to_bigfloat((*start)[j]);
  }
  const BigFloat tolf = to_bigfloat(tol);

  const auto weights_at = [&](const std::vector<BigFloat>& p,
                              std::vector<BigFloat>& out) {
    bool inside = true;
    out.resize(nc);
    for (std::size_t i = 0; i < nc; ++i) {
      BigFloat ai = to_bigfloat(aw.a0[i]);
      for (std::size_t j = 0; j < k; ++j)
        ai += to_bigfloat(aw.grad[j][i]) * p[j];
      out[i] = ai;
      if (ai <= 0) inside = false;
    }
    return inside;
  };
  const auto value_at = [&](const std::vector<BigFloat>& p,
                            const std::vector<BigFloat>& w) {
    BigFloat d(1);
    if (v.is_hypersurface()) {
      d = to_bigfloat(aw.d0);
      for (std::size_t j = 0; j < k; ++j) d += to_bigfloat(aw.dgrad[j]) * p[j];
    }
    BigFloat den(BigFloat(factorial(aw.n - 1)));
    for (const BigFloat& wi : w) den *= wi;
    return d / den;
  };

  std::vector<BigFloat> w;
  if (!weights_at(u, w))
    throw PreconditionError("numeric minimizer started outside the Reeb cone");
  BigFloat f = value_at(u, w);

  for (int iter = 0; iter < 1000; ++iter) {
    // Gradient and Hessian of log a0; grad a0 = a0 g, hess a0 = a0 (g g^T + H).
    BigFloat d(1);
    std::vector<BigFloat> dj(k, BigFloat(0));
    if (v.is_hypersurface()) {
      d = to_bigfloat(aw.d0);
      for (std::size_t j = 0; j < k; ++j) {
        dj[j] = to_bigfloat(aw.dgrad[j]);
        d += dj[j] * u[j];
      }
    }
    std::vector<BigFloat> g(k, BigFloat(0));
    std::vector<std::vector<BigFloat>> H(k, std::vector<BigFloat>(k, BigFloat(0)));
    for (std::size_t j = 0; j < k; ++j) {
      g[j] = dj[j] / d;
      for (std::size_t i = 0; i < nc; ++i)
        g[j] -= to_bigfloat(aw.grad[j][i]) / w[i];
    }
    for (std::size_t j = 0; j < k; ++j) {
      for (std::size_t l = 0; l < k; ++l) {
        BigFloat h = -dj[j] * dj[l] / (d * d);
        for (std::size_t i = 0; i < nc; ++i)
          h += to_bigfloat(aw.grad[j][i]) * to_bigfloat(aw.grad[l][i]) /
               (w[i] * w[i]);
        H[j][l] = h + g[j] * g[l];
      }
    }
    BigFloat grad_norm(0);
    for (std::size_t j = 0; j < k; ++j) grad_norm += (f * g[j]) * (f * g[j]);
    grad_norm = sqrt(grad_norm);
    if (grad_norm < tolf) {
      Minimizer m;
      m.params.resize(k);
      for (std::size_t j = 0; j < k; ++j)
        m.params[j] = static_cast<Rational>(u[j]);
      m.xi_star = slice.at(m.params);
      m.kind = MinimizerKind::Numeric;
      m.residual_bound = static_cast<Rational>(grad_norm);
      m.volume = volume(v, m.xi_star);
      return m;
    }
    // Newton direction on (g g^T + H) p = -g, Gaussian elimination with
    // partial pivoting; fall back to steepest descent if near-singular.
    std::vector<std::vector<BigFloat>> M(H);
    std::vector<BigFloat> rhs(k);
    for (std::size_t j = 0; j < k; ++j) rhs[j] = -g[j];
    std::vector<BigFloat> p(k, BigFloat(0));
    bool solved = true;
    for (std::size_t col = 0; col < k && solved; ++col) {
      std::size_t piv = col;
      for (std::size_t r2 = col + 1; r2 < k; ++r2)
        if (abs(M[r2][col]) > abs(M[piv][col])) piv = r2;
      if (M[piv][col] == 0) {
        solved = false;
        break;
      }
      std::swap(M[piv], M[col]);
      std::swap(rhs[piv], rhs[col]);
      for (std::size_t r2 = col + 1; r2 < k; ++r2) {
        const BigFloat factor = M[r2][col] / M[col][col];
        for (std::size_t c2 = col; c2 < k; ++c2) M[r2][c2] -= factor * M[col][c2];
        rhs[r2] -= factor * rhs[col];
      }
    }
    if (solved) {
      for (std::size_t col = k; col-- > 0;) {
        BigFloat acc = rhs[col];
        for (std::size_t c2 = col + 1; c2 < k; ++c2) acc -= M[col][c2] * p[c2];
        p[col] = acc / M[col][col];
      }
    } else {
      for (std::size_t j = 0; j < k; ++j) p[j] = -g[j];
    }
    // Backtrack into the cone and require decrease.
    BigFloat alpha(1);
    bool stepped = false;
    for (int bt = 0; bt < 80; ++bt) {
      std::vector<BigFloat> cand(k);
      for (std::size_t j = 0; j < k; ++j) cand[j] = u[j] + alpha * p[j];
      std::vector<BigFloat> wc;
      if (weights_at(cand, wc)) {
        const BigFloat fc = value_at(cand, wc);
        if (fc < f) {
          u = std::move(cand);
          w = std::move(wc);
          f = fc;
          stepped = true;
          break;
        }
      }
      alpha /= 2;
    }
    if (!stepped) {
      // No descent step left at float precision; accept if the gradient is
      // already tiny relative to tol, otherwise report failure below.
      std::ostringstream os;
      os << "numeric volume minimization stalled at gradient norm " << grad_norm;
      throw PreconditionError(os.str());
    }
  }
  throw PreconditionError(
      "numeric volume minimization did not converge within 1000 iterations");
}

Rational volume(const ConeVariety& v, const ReebVector& xi) {
  return laurent_leading(build_index_character(v, xi));
}

}  // namespace kstab
