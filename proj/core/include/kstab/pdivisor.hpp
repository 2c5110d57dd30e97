#pragma once

#include <optional>
#include <string>
#include <vector>

#include "kstab/lattice.hpp"
#include "kstab/polyhedra.hpp"

namespace kstab {

/// Exact sequence 0 -> Z^r -F-> Z^N -P-> Z^(N-r) -> 0 with a splitting
/// s F = id. F is the inclusion of the acting torus into the diagonal torus,
/// i.e. the transpose of the weight matrix.
struct ExactSequenceData {
  IntMatrix f;  // N x r
  IntMatrix p;  // (N-r) x N
  IntMatrix s;  // r x N

  unsigned num_coords() const { return f.rows(); }
  unsigned rank() const { return f.cols(); }
};

/// Computes (P, s) from F via Smith normal form and canonicalizes P by its
/// Hermite form (s is reduced modulo the row lattice of P). Requires F
/// injective with unit elementary divisors; a non-saturated image raises a
/// torsion-cokernel error.
ExactSequenceData cokernel_and_splitting(const IntMatrix& f);

/// Validates a user-chosen (P, s) against F: P F = 0, s F = id, P surjective
/// with kernel exactly the image of F.
ExactSequenceData exact_sequence_with_splitting(IntMatrix f, IntMatrix p,
                                                IntMatrix s);

/// Tail cone sigma = s(F(Q^r) cap Q^N_{>=0}) = { xi : F xi >= 0 }, the
/// closure of the presentation Reeb cone. Primitive rays, sorted.
std::vector<std::vector<BigInt>> tail_cone(const ExactSequenceData& data);

/// Extreme rays of the dual cone sigma^v.
std::vector<std::vector<BigInt>> dual_tail_cone(const ExactSequenceData& data);

/// Coordinates of C^N grouped by the primitive downstairs ray their
/// P-column spans.
struct RayGroup {
  std::vector<BigInt> ray;
  std::vector<unsigned> coords;
};

std::vector<RayGroup> downstairs_rays(const ExactSequenceData& data);

/// Delta_rho = s(P^{-1}(rho) cap Q^N_{>=0}): a polyhedron in Q^r with tail
/// cone sigma, or nullopt when the fiber is empty. Different splittings move
/// the result by a lattice vector.
std::optional<Polyhedron> delta_polytope(const ExactSequenceData& data,
                                         const std::vector<BigInt>& rho);

/// Support function Psi(w) = min over Delta of <w, u>, finite on sigma^v.
/// Linear iff Delta has a single vertex; the vertex is then the slope.
struct SupportFunction {
  std::vector<RationalVector> vertices;

  Rational eval(const RationalVector& w) const;
  bool is_linear() const { return vertices.size() == 1; }
};

SupportFunction support_function(const Polyhedron& delta);

/// Translates the polytope by the integer vector that puts the floor of its
/// lexicographically smallest vertex at the origin: a canonical
/// representative of the lattice-translation class (splitting-independent).
Polyhedron canonical_translate(const Polyhedron& delta);

enum class CoefficientClass {
  LatticeTranslate,    // single integral vertex: trivial
  NonIntegralVertex,   // single non-integral vertex: non-integral slope
  MultiVertex,         // two or more vertices
  Empty,
};

std::string to_string(CoefficientClass c);

/// One downstairs ray with its fiber polytope and point multiplicity (how
/// many base points carry this coefficient; supplied by the caller as
/// registered metadata, the base curve itself is not modeled).
struct PDivisorEntry {
  RayGroup group;
  std::optional<Polyhedron> delta;
  unsigned multiplicity = 1;
};

struct PDivisor {
  ExactSequenceData data;
  std::vector<std::vector<BigInt>> sigma;
  std::vector<std::vector<BigInt>> sigma_dual;
  std::vector<PDivisorEntry> entries;
};

PDivisor build_pdivisor(ExactSequenceData data);

struct SlopeReportEntry {
  RayGroup group;
  unsigned multiplicity;
  CoefficientClass cls;
  Polyhedron canonical_delta;
};

/// Counting bound on non-product equivariant test configurations from the
/// coefficient polytopes: distinct nontrivial lattice-translation classes,
/// after single integral vertices are shifted away, capped at two for rank-2
/// (complexity-one threefold) data. An upper bound, not a classification.
struct SlopeReport {
  std::vector<SlopeReportEntry> entries;
  unsigned count_nontrivial_bound = 0;
  bool capped = false;
  std::string note;
};

SlopeReport slope_integrality_report(const PDivisor& pd);

}  // namespace kstab
