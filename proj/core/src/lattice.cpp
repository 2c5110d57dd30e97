#include "kstab/lattice.hpp"

#include <algorithm>

namespace kstab {

IntMatrix::IntMatrix(unsigned rows, unsigned cols, std::vector<BigInt> data)
    : rows_(rows), cols_(cols), data_(std::move(data)) {
  if (data_.size() != static_cast<std::size_t>(rows_) * cols_)
    throw PreconditionError("matrix data size mismatch");
}

IntMatrix IntMatrix::identity(unsigned n) {
  IntMatrix m(n, n);
  for (unsigned i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::transposed() const {
  IntMatrix t(cols_, rows_);
  for (unsigned r = 0; r < rows_; ++r)
    for (unsigned c = 0; c < cols_; ++c) t.at(c, r) = at(r, c);
  return t;
}

IntMatrix IntMatrix::operator*(const IntMatrix& rhs) const {
  if (cols_ != rhs.rows_) throw PreconditionError("matrix product shape mismatch");
  IntMatrix out(rows_, rhs.cols_);
  for (unsigned r = 0; r < rows_; ++r)
    for (unsigned k = 0; k < cols_; ++k) {
      if (at(r, k) == 0) continue;
      for (unsigned c = 0; c < rhs.cols_; ++c)
        out.at(r, c) += at(r, k) * rhs.at(k, c);
    }
  return out;
}

bool IntMatrix::is_zero() const {
  return std::all_of(data_.begin(), data_.end(),
                     [](const BigInt& x) { return x == 0; });
}

std::vector<BigInt> IntMatrix::row(unsigned r) const {
  std::vector<BigInt> out(cols_);
  for (unsigned c = 0; c < cols_; ++c) out[c] = at(r, c);
  return out;
}

std::vector<BigInt> IntMatrix::col(unsigned c) const {
  std::vector<BigInt> out(rows_);
  for (unsigned r = 0; r < rows_; ++r) out[r] = at(r, c);
  return out;
}

IntMatrix IntMatrix::row_slice(unsigned first, unsigned count) const {
  IntMatrix out(count, cols_);
  for (unsigned r = 0; r < count; ++r)
    for (unsigned c = 0; c < cols_; ++c) out.at(r, c) = at(first + r, c);
  return out;
}

namespace {

void swap_rows(IntMatrix& m, unsigned a, unsigned b) {
  if (a == b) return;
  for (unsigned c = 0; c < m.cols(); ++c) std::swap(m.at(a, c), m.at(b, c));
}

void swap_cols(IntMatrix& m, unsigned a, unsigned b) {
  if (a == b) return;
  for (unsigned r = 0; r < m.rows(); ++r) std::swap(m.at(r, a), m.at(r, b));
}

// row[a] -= q * row[b]
void row_axpy(IntMatrix& m, unsigned a, unsigned b, const BigInt& q) {
  if (q == 0) return;
  for (unsigned c = 0; c < m.cols(); ++c) m.at(a, c) -= q * m.at(b, c);
}

void col_axpy(IntMatrix& m, unsigned a, unsigned b, const BigInt& q) {
  if (q == 0) return;
  for (unsigned r = 0; r < m.rows(); ++r) m.at(r, a) -= q * m.at(r, b);
}

void negate_row(IntMatrix& m, unsigned r) {
  for (unsigned c = 0; c < m.cols(); ++c) m.at(r, c) = -m.at(r, c);
}

BigInt abs_big(const BigInt& x) { return x < 0 ? BigInt(-x) : x; }

// Truncated quotient; used for Euclidean size reduction.
BigInt trunc_div(const BigInt& a, const BigInt& b) { return a / b; }

BigInt floor_div(const BigInt& a, const BigInt& b) {
  BigInt q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

}  // namespace

SmithResult smith_normal_form(const IntMatrix& a) {
  IntMatrix d = a;
  IntMatrix u = IntMatrix::identity(a.rows());
  IntMatrix v = IntMatrix::identity(a.cols());
  const unsigned steps = std::min(a.rows(), a.cols());
  for (unsigned t = 0; t < steps; ++t) {
    // Locate the smallest nonzero entry in the trailing block.
    unsigned pr = t, pc = t;
    bool found = false;
    for (unsigned r = t; r < d.rows(); ++r)
      for (unsigned c = t; c < d.cols(); ++c) {
        if (d.at(r, c) == 0) continue;
        if (!found || abs_big(d.at(r, c)) < abs_big(d.at(pr, pc))) {
          pr = r;
          pc = c;
          found = true;
        }
      }
    if (!found) break;
    swap_rows(d, t, pr);
    swap_rows(u, t, pr);
    swap_cols(d, t, pc);
    swap_cols(v, t, pc);
    bool clean = false;
    while (!clean) {
      clean = true;
      for (unsigned r = t + 1; r < d.rows(); ++r) {
        if (d.at(r, t) == 0) continue;
        const BigInt q = trunc_div(d.at(r, t), d.at(t, t));
        row_axpy(d, r, t, q);
        row_axpy(u, r, t, q);
        if (d.at(r, t) != 0) {
          swap_rows(d, t, r);
          swap_rows(u, t, r);
          clean = false;
        }
      }
      for (unsigned c = t + 1; c < d.cols(); ++c) {
        if (d.at(t, c) == 0) continue;
        const BigInt q = trunc_div(d.at(t, c), d.at(t, t));
        col_axpy(d, c, t, q);
        col_axpy(v, c, t, q);
        if (d.at(t, c) != 0) {
          swap_cols(d, t, c);
          swap_cols(v, t, c);
          clean = false;
        }
      }
      if (!clean) continue;
      // Enforce the divisibility chain: fold any non-divisible entry into
      // the pivot's row and start over.
      for (unsigned r = t + 1; r < d.rows() && clean; ++r)
        for (unsigned c = t + 1; c < d.cols() && clean; ++c)
          if (d.at(r, c) % d.at(t, t) != 0) {
            row_axpy(d, t, r, BigInt(-1));
            row_axpy(u, t, r, BigInt(-1));
            clean = false;
          }
    }
    if (d.at(t, t) < 0) {
      negate_row(d, t);
      negate_row(u, t);
    }
  }
  return {std::move(u), std::move(d), std::move(v)};
}

HermiteResult hermite_normal_form(const IntMatrix& a) {
  IntMatrix h = a;
  IntMatrix u = IntMatrix::identity(a.rows());
  unsigned r = 0;
  for (unsigned c = 0; c < h.cols() && r < h.rows(); ++c) {
    // Euclid on the rows below r in column c.
    while (true) {
      unsigned best = h.rows();
      for (unsigned i = r; i < h.rows(); ++i) {
        if (h.at(i, c) == 0) continue;
        if (best == h.rows() || abs_big(h.at(i, c)) < abs_big(h.at(best, c)))
          best = i;
      }
      if (best == h.rows()) break;  // column is zero below r
      swap_rows(h, r, best);
      swap_rows(u, r, best);
      bool any = false;
      for (unsigned i = r + 1; i < h.rows(); ++i) {
        if (h.at(i, c) == 0) continue;
        const BigInt q = trunc_div(h.at(i, c), h.at(r, c));
        row_axpy(h, i, r, q);
        row_axpy(u, i, r, q);
        if (h.at(i, c) != 0) any = true;
      }
      if (!any) break;
    }
    if (h.at(r, c) == 0) continue;
    if (h.at(r, c) < 0) {
      negate_row(h, r);
      negate_row(u, r);
    }
    for (unsigned i = 0; i < r; ++i) {
      const BigInt q = floor_div(h.at(i, c), h.at(r, c));
      row_axpy(h, i, r, q);
      row_axpy(u, i, r, q);
    }
    ++r;
  }
  return {std::move(h), std::move(u)};
}

unsigned rational_rank(const IntMatrix& a) {
  const HermiteResult hr = hermite_normal_form(a);
  unsigned rank = 0;
  for (unsigned r = 0; r < hr.h.rows(); ++r) {
    bool nonzero = false;
    for (unsigned c = 0; c < hr.h.cols(); ++c)
      if (hr.h.at(r, c) != 0) nonzero = true;
    if (nonzero) ++rank;
  }
  return rank;
}

std::vector<BigInt> reduce_mod_row_lattice(std::vector<BigInt> v,
                                           const IntMatrix& h) {
  for (unsigned r = 0; r < h.rows(); ++r) {
    unsigned pivot = h.cols();
    for (unsigned c = 0; c < h.cols(); ++c)
      if (h.at(r, c) != 0) {
        pivot = c;
        break;
      }
    if (pivot == h.cols()) continue;
    const BigInt q = floor_div(v[pivot], h.at(r, pivot));
    if (q == 0) continue;
    for (unsigned c = 0; c < h.cols(); ++c) v[c] -= q * h.at(r, c);
  }
  return v;
}

std::vector<BigInt> primitive_vector(const std::vector<Rational>& v) {
  BigInt lcm_den(1);
  for (const Rational& x : v) {
    const BigInt d = denominator(x);
    lcm_den = lcm_den / gcd(lcm_den, d) * d;
  }
  std::vector<BigInt> out(v.size());
  BigInt g(0);
  for (std::size_t i = 0; i < v.size(); ++i) {
    out[i] = numerator(v[i]) * (lcm_den / denominator(v[i]));
    g = gcd(g, out[i]);
  }
  if (g == 0) throw PreconditionError("primitive_vector of the zero vector");
  for (BigInt& x : out) x /= g;
  return out;
}

}  // namespace kstab
