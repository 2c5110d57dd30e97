#pragma once

#include <optional>
#include <vector>

#include "kstab/lattice.hpp"
#include "kstab/rational.hpp"

namespace kstab {

using RationalMatrix = std::vector<std::vector<Rational>>;
using RationalVector = std::vector<Rational>;

/// Solves M x = b for square M over the rationals; nullopt if singular.
std::optional<RationalVector> solve_square(const RationalMatrix& m,
                                           const RationalVector& b);

/// Extreme rays of the pointed cone { x in Q^d : A x >= 0 }, as primitive
/// integer vectors in deterministic (lexicographic) order. Enumerates
/// (d-1)-element constraint subsets; meant for the small cones arising from
/// torus presentations. Throws if the cone contains a line.
std::vector<std::vector<BigInt>> cone_extreme_rays(const RationalMatrix& a,
                                                   unsigned d);

/// Pointed rational polyhedron as vertex list plus recession-cone rays.
struct Polyhedron {
  std::vector<RationalVector> vertices;
  std::vector<std::vector<BigInt>> rays;

  bool empty() const { return vertices.empty(); }
  Polyhedron translated(const RationalVector& shift) const;
};

/// { x : A x >= b } by brute-force vertex enumeration over the d-element
/// constraint subsets; rays come from the recession cone A x >= 0.
Polyhedron polyhedron_from_inequalities(const RationalMatrix& a,
                                        const RationalVector& b, unsigned d);

}  // namespace kstab
