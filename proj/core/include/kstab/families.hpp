#pragma once

#include <string>
#include <vector>

#include "kstab/cone_variety.hpp"
#include "kstab/futaki.hpp"
#include "kstab/pdivisor.hpp"

namespace kstab {

/// The three rank-2 hypersurface families in C^4:
///   BP   uv + z^p + w^q
///   YY2  uv + z^p + z w^q
///   YY3  uv + z^p w + z w^q
enum class Family { BP, YY2, YY3 };

std::string to_string(Family f);
Family family_from_string(const std::string& name);

/// Closed-form stability inequalities for regression checks; the pipeline
/// never consults these when computing a verdict.
struct ExpectedCondition {
  bool first;
  bool second;
  std::string description;
  bool stable() const { return first && second; }
};

struct FamilyInstance {
  Family family;
  long p;
  long q;
  ConeVariety variety;
  std::vector<TestConfiguration> registered_tcs;
  ExpectedCondition expected;
  /// A convenient integer point of the open Reeb cone.
  ReebVector inner_point;

  std::string label() const;
};

/// Validates the parameter range (p, q >= 2; BP additionally max(p,q) > 2)
/// and assembles the variety with its two registered equivariant
/// degenerations, which carry known-normal central fibers.
FamilyInstance make_family(Family f, long p, long q);

/// Number m with link = #m(S^2 x S^3), m = 0 meaning S^5:
/// gcd(p,q)-1 for BP, gcd(p-1,q) for YY2, gcd(p-1,q-1)+1 for YY3.
long link_topology(Family f, long p, long q);

/// Polyhedral-divisor presentation of the family's torus action. For BP the
/// registered presentation (torus inclusion, projection, and splitting) is
/// used and the coefficient shared by the u,v coordinates carries point
/// multiplicity gcd(p,q); the other families get the canonical splitting
/// with unit multiplicities.
PDivisor family_pdivisor(const FamilyInstance& instance);

}  // namespace kstab
