#pragma once

#include <optional>
#include <vector>

#include "fusionkit/fusion_ring.hpp"

namespace fusionkit {

/// Checks that `map` (basis of r1 -> basis of r2) is a fusion-ring
/// isomorphism: a bijection preserving unit, duals and all coefficients.
/// Deliberately simple; used to re-verify every witness independently of
/// how it was found.
bool verify_iso_witness(const FusionRing& r1, const FusionRing& r2,
                        const std::vector<int>& map);

/// Backtracking search for a basis bijection preserving unit, dual and all
/// coefficients, pruned by (dimension, invertibility, universal degree
/// order) fingerprints. Deterministic given the basis ordering. Returns
/// std::nullopt when no isomorphism exists. Throws bound_error when the
/// combined rank exceeds 4 * max_rank().
std::optional<std::vector<int>> ring_isomorphic(const FusionRing& r1,
                                                const FusionRing& r2);

} // namespace fusionkit
