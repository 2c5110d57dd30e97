#pragma once

#include "kstab/cone_variety.hpp"
#include "kstab/index_character.hpp"

namespace kstab {

/// A Reeb vector scaled onto the normalized slice 2 a1 = n(n-1) a0,
/// together with the exact certificate value (a1/a0)(xi) = n(n-1)/2.
struct NormalizedReeb {
  ReebVector xi;
  Rational certificate;
};

/// (a1/a0)(xi) on v; for hypersurfaces this equals l(xi)(n-1)/2.
Rational a1_over_a0(const ConeVariety& v, const ReebVector& xi);

/// Scales xi onto the normalized slice: returns c xi with
/// c = n(n-1) / (2 (a1/a0)(xi)). Throws if xi is outside the open Reeb cone
/// or if a1/a0 is not positive (no log-terminal polarization along this ray).
NormalizedReeb normalize_reeb(const ConeVariety& v, const ReebVector& xi);

/// Projects a direction onto the tangent space of the normalized slice:
/// w' = w - (2 D_w(a1/a0) / (n(n-1))) xi, the Reeb vector taken in ambient
/// coordinates. After projection D_{w'}(a1/a0) = 0 exactly. The result has
/// rational (generally non-integer) coordinates and is used only inside
/// Futaki formulas, never to build degenerations.
Direction normalize_direction(const ConeVariety& y, const NormalizedReeb& nr,
                              const Direction& w);

}  // namespace kstab
