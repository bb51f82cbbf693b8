#pragma once

#include "fusionkit/abelian.hpp"
#include "fusionkit/fusion_ring.hpp"

namespace fusionkit {

/// Deligne product ring: basis = pairs (index = a1*rank2 + a2), coefficients
/// multiply, labels joined with U+22A0.
FusionRing deligne_product(const FusionRing& r1, const FusionRing& r2);

/// Pointed ring of a finite abelian group: one invertible per element,
/// N_{gh}^{g+h} = 1, dual = negation. Basis in mixed-radix element order.
FusionRing pointed_ring(const FiniteAbelianGroup& g);

} // namespace fusionkit
