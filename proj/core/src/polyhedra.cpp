#include "kstab/polyhedra.hpp"

#include <algorithm>

namespace kstab {

std::optional<RationalVector> solve_square(const RationalMatrix& m,
                                           const RationalVector& b) {
  const std::size_t n = m.size();
  RationalMatrix a(m);
  RationalVector rhs(b);
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    while (piv < n && a[piv][col] == 0) ++piv;
    if (piv == n) return std::nullopt;
    std::swap(a[piv], a[col]);
    std::swap(rhs[piv], rhs[col]);
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col || a[r][col] == 0) continue;
      const Rational f = a[r][col] / a[col][col];
      for (std::size_t c = col; c < n; ++c) a[r][c] -= f * a[col][c];
      rhs[r] -= f * rhs[col];
    }
  }
  RationalVector x(n);
  for (std::size_t i = 0; i < n; ++i) x[i] = rhs[i] / a[i][i];
  return x;
}

namespace {

bool satisfies_all(const RationalMatrix& a, const RationalVector& b,
                   const RationalVector& x) {
  for (std::size_t r = 0; r < a.size(); ++r) {
    Rational acc(0);
    for (std::size_t c = 0; c < x.size(); ++c) acc += a[r][c] * x[c];
    if (acc < b[r]) return false;
  }
  return true;
}

// Nullspace dimension and a spanning vector when the nullity is one.
std::optional<RationalVector> nullspace_vector(const RationalMatrix& rows,
                                               unsigned d) {
  RationalMatrix a(rows);
  std::vector<int> pivot_col;
  std::size_t r = 0;
  for (unsigned c = 0; c < d && r < a.size(); ++c) {
    std::size_t piv = r;
    while (piv < a.size() && a[piv][c] == 0) ++piv;
    if (piv == a.size()) continue;
    std::swap(a[piv], a[r]);
    for (std::size_t r2 = 0; r2 < a.size(); ++r2) {
      if (r2 == r || a[r2][c] == 0) continue;
      const Rational f = a[r2][c] / a[r][c];
      for (unsigned c2 = 0; c2 < d; ++c2) a[r2][c2] -= f * a[r][c2];
    }
    pivot_col.push_back(static_cast<int>(c));
    ++r;
  }
  if (r + 1 != d) return std::nullopt;  // nullity != 1
  // The single free column determines the kernel vector.
  std::vector<bool> is_pivot(d, false);
  for (int c : pivot_col) is_pivot[static_cast<std::size_t>(c)] = true;
  unsigned free_col = d;
  for (unsigned c = 0; c < d; ++c)
    if (!is_pivot[c]) {
      free_col = c;
      break;
    }
  RationalVector v(d, Rational(0));
  v[free_col] = 1;
  for (std::size_t k = 0; k < pivot_col.size(); ++k) {
    const unsigned pc = static_cast<unsigned>(pivot_col[k]);
    v[pc] = -a[k][free_col] / a[k][pc];
  }
  return v;
}

std::vector<std::vector<std::size_t>> subsets_of_size(std::size_t n,
                                                      std::size_t k) {
  std::vector<std::vector<std::size_t>> out;
  std::vector<std::size_t> idx(k);
  // Iterative combination walk.
  if (k > n) return out;
  for (std::size_t i = 0; i < k; ++i) idx[i] = i;
  while (true) {
    out.push_back(idx);
    std::size_t i = k;
    while (i-- > 0) {
      if (idx[i] != i + n - k) {
        ++idx[i];
        for (std::size_t j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
        break;
      }
      if (i == 0) return out;
    }
  }
}

}  // namespace

namespace {

unsigned rational_matrix_rank(RationalMatrix a, unsigned d) {
  unsigned rank = 0;
  for (unsigned c = 0; c < d && rank < a.size(); ++c) {
    std::size_t piv = rank;
    while (piv < a.size() && a[piv][c] == 0) ++piv;
    if (piv == a.size()) continue;
    std::swap(a[piv], a[rank]);
    for (std::size_t r = rank + 1; r < a.size(); ++r) {
      if (a[r][c] == 0) continue;
      const Rational f = a[r][c] / a[rank][c];
      for (unsigned c2 = c; c2 < d; ++c2) a[r][c2] -= f * a[rank][c2];
    }
    ++rank;
  }
  return rank;
}

}  // namespace

std::vector<std::vector<BigInt>> cone_extreme_rays(const RationalMatrix& a,
                                                   unsigned d) {
  if (d == 0) return {};
  if (rational_matrix_rank(a, d) < d)
    throw PreconditionError("cone_extreme_rays: cone contains a line");
  std::vector<std::vector<BigInt>> rays;
  const RationalVector zero_rhs(a.size(), Rational(0));
  const auto add_candidate = [&](const RationalVector& v) {
    bool nonzero = false;
    for (const Rational& x : v)
      if (x != 0) nonzero = true;
    if (!nonzero) return;
    RationalVector neg(v);
    for (Rational& x : neg) x = -x;
    const bool fwd = satisfies_all(a, zero_rhs, v);
    const bool bwd = satisfies_all(a, zero_rhs, neg);
    if (fwd && bwd)
      throw PreconditionError("cone_extreme_rays: cone contains a line");
    if (!fwd && !bwd) return;
    const auto prim = primitive_vector(fwd ? v : neg);
    if (std::find(rays.begin(), rays.end(), prim) == rays.end())
      rays.push_back(prim);
  };
  if (d == 1) {
    add_candidate({Rational(1)});
    add_candidate({Rational(-1)});
  } else {
    for (const auto& subset : subsets_of_size(a.size(), d - 1)) {
      RationalMatrix rows;
      for (std::size_t i : subset) rows.push_back(a[i]);
      const auto v = nullspace_vector(rows, d);
      if (v) add_candidate(*v);
    }
  }
  std::sort(rays.begin(), rays.end());
  return rays;
}

Polyhedron Polyhedron::translated(const RationalVector& shift) const {
  Polyhedron out(*this);
  for (auto& v : out.vertices)
    for (std::size_t i = 0; i < v.size(); ++i) v[i] += shift[i];
  return out;
}

Polyhedron polyhedron_from_inequalities(const RationalMatrix& a,
                                        const RationalVector& b, unsigned d) {
  Polyhedron poly;
  poly.rays = cone_extreme_rays(a, d);  // throws on lineality
  for (const auto& subset : subsets_of_size(a.size(), d)) {
    RationalMatrix m;
    RationalVector rhs;
    for (std::size_t i : subset) {
      m.push_back(a[i]);
      rhs.push_back(b[i]);
    }
    const auto x = solve_square(m, rhs);
    if (!x || !satisfies_all(a, b, *x)) continue;
    if (std::find(poly.vertices.begin(), poly.vertices.end(), *x) ==
        poly.vertices.end())
      poly.vertices.push_back(*x);
  }
  std::sort(poly.vertices.begin(), poly.vertices.end());
  return poly;
}

}  // namespace kstab
