#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "kstab/errors.hpp"
#include "kstab/rational.hpp"

namespace kstab {

/// Element of the weight lattice of the torus (a character), as r integers.
using Character = std::vector<BigInt>;

/// Element of the Lie algebra of the torus, as r rationals. Used as a
/// polarization whenever it lies in the open Reeb cone of its variety.
using ReebVector = std::vector<Rational>;

/// Exponent vector of a monomial in the ambient coordinates.
using Monomial = std::vector<long>;

/// Ambient direction vector (one entry per coordinate) for one-parameter
/// subgroups of the diagonal torus and for normalized directions.
using Direction = std::vector<Rational>;

/// Integer weights of a rank-r diagonal torus acting on C^N: column i is the
/// multi-weight of the coordinate z_i.
class TorusWeights {
 public:
  TorusWeights(unsigned rank, unsigned num_coords,
               std::vector<std::vector<BigInt>> rows);

  unsigned rank() const { return rank_; }
  unsigned num_coords() const { return num_coords_; }
  const BigInt& entry(unsigned row, unsigned col) const {
    return rows_[row][col];
  }
  /// Multi-weight of coordinate `col`.
  Character column(unsigned col) const;

  /// W^T xi: the weight of each coordinate under xi.
  std::vector<Rational> coordinate_weights(const ReebVector& xi) const;

  /// W applied to an exponent vector: the character of that monomial.
  Character monomial_character(const Monomial& mono) const;

  bool operator==(const TorusWeights& rhs) const = default;

 private:
  unsigned rank_;
  unsigned num_coords_;
  std::vector<std::vector<BigInt>> rows_;
};

/// Polarized affine cone: either all of C^N (empty fsupport) or the
/// hypersurface cut out by a polynomial with the given monomial support,
/// semi-invariant under the torus. Coefficients are treated as generic and
/// never stored; every computed invariant depends on the support alone.
struct ConeVariety {
  TorusWeights weights;
  std::vector<Monomial> fsupport;
  /// Complex dimension: N for ambient space, N-1 for a hypersurface.
  unsigned n;
  /// Gorenstein index; hypersurfaces and ambient space have m = 1.
  unsigned gorenstein_m = 1;
  std::vector<std::string> variable_names;

  bool is_hypersurface() const { return !fsupport.empty(); }
  unsigned num_coords() const { return weights.num_coords(); }
  unsigned rank() const { return weights.rank(); }

  static ConeVariety ambient(TorusWeights w,
                             std::vector<std::string> names = {});
  static ConeVariety hypersurface(TorusWeights w, std::vector<Monomial> fsup,
                                  std::vector<std::string> names = {});
};

/// Pairing <chi, xi>.
Rational pair_character(const Character& chi, const ReebVector& xi);

/// The weight of each ambient coordinate under xi (exact).
std::vector<Rational> coordinate_weights(const ConeVariety& v,
                                         const ReebVector& xi);

/// Presentation-level Reeb cone test: every coordinate weight positive.
/// Sufficient for embeddings by ring generators; boundary points fail.
bool reeb_cone_contains(const ConeVariety& v, const ReebVector& xi);

/// The common character of the defining polynomial. Throws
/// PreconditionError if the monomials of fsupport do not all share one
/// character (semi-invariance failure).
Character fcharacter(const ConeVariety& v);

/// d(xi) = <chi_f, xi>, the degree of the defining polynomial under xi.
Rational degree(const ConeVariety& v, const ReebVector& xi);

/// Weight of the canonical trivialization: for a hypersurface
/// l(xi) = sum of coordinate weights - degree, for ambient space the plain
/// sum. Linear in xi.
Rational canonical_weight(const ConeVariety& v, const ReebVector& xi);

/// The w-weight (integer pairing) of a monomial for an integer direction.
BigInt monomial_direction_weight(const Monomial& mono,
                                 const std::vector<BigInt>& w);

/// The common w-weight of fsupport under an ambient direction, if the
/// support is w-homogeneous; nullopt otherwise. Rational directions allowed.
std::optional<Rational> direction_degree(const ConeVariety& v,
                                         const Direction& w);

/// Graded dimensions of the coordinate ring by explicit lattice-point
/// enumeration, for integer positive coordinate weights. For a hypersurface,
/// dim R_w = #(ambient monomials of weight w) - #(of weight w - d), the
/// defining polynomial being a regular element. Enumeration is capped at
/// 10^4 points; larger requests raise a size error. Intended as a
/// brute-force oracle, not a production path.
std::map<long, BigInt> hilbert_count_bruteforce(const ConeVariety& v,
                                                const ReebVector& xi,
                                                long cutoff);

}  // namespace kstab
