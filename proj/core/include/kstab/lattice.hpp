#pragma once

#include <vector>

#include "kstab/errors.hpp"
#include "kstab/rational.hpp"

namespace kstab {

/// Dense integer matrix, row-major. Sized for the small exact-sequence and
/// cone computations here, not for bulk linear algebra.
class IntMatrix {
 public:
  IntMatrix() : rows_(0), cols_(0) {}
  IntMatrix(unsigned rows, unsigned cols)
      : rows_(rows), cols_(cols), data_(static_cast<std::size_t>(rows) * cols) {}
  IntMatrix(unsigned rows, unsigned cols, std::vector<BigInt> data);

  static IntMatrix identity(unsigned n);

  unsigned rows() const { return rows_; }
  unsigned cols() const { return cols_; }
  BigInt& at(unsigned r, unsigned c) { return data_[static_cast<std::size_t>(r) * cols_ + c]; }
  const BigInt& at(unsigned r, unsigned c) const {
    return data_[static_cast<std::size_t>(r) * cols_ + c];
  }

  IntMatrix transposed() const;
  IntMatrix operator*(const IntMatrix& rhs) const;
  bool operator==(const IntMatrix& rhs) const = default;
  bool is_zero() const;

  std::vector<BigInt> row(unsigned r) const;
  std::vector<BigInt> col(unsigned c) const;
  IntMatrix row_slice(unsigned first, unsigned count) const;

 private:
  unsigned rows_, cols_;
  std::vector<BigInt> data_;
};

/// U A V = D with U, V unimodular and D diagonal with the divisibility chain
/// d1 | d2 | ..., all nonnegative.
struct SmithResult {
  IntMatrix u, d, v;
};

SmithResult smith_normal_form(const IntMatrix& a);

/// H = U A with U unimodular and H in row Hermite form: pivots positive,
/// entries above each pivot reduced into [0, pivot), zero rows last.
struct HermiteResult {
  IntMatrix h, u;
};

HermiteResult hermite_normal_form(const IntMatrix& a);

/// Rank over the rationals.
unsigned rational_rank(const IntMatrix& a);

/// Reduces v modulo the row lattice of h (h in Hermite form) so the result
/// is the canonical coset representative.
std::vector<BigInt> reduce_mod_row_lattice(std::vector<BigInt> v,
                                           const IntMatrix& h);

/// Primitive integer vector with the same direction; input must be nonzero.
std::vector<BigInt> primitive_vector(const std::vector<Rational>& v);

}  // namespace kstab
