#pragma once

#include <optional>
#include <vector>

#include "fusionkit/abelian.hpp"
#include "fusionkit/exact_dim.hpp"
#include "fusionkit/fusion_ring.hpp"

namespace fusionkit {

/// Frobenius-Perron dimensions of all simples plus the global dimension
/// Sum dim(X)^2. `all_exact` is true when every dimension snapped to
/// Z[sqrt(2)] and the full multiplicativity equations verify exactly.
struct DimensionData {
  std::vector<ExactDim> dims;
  ExactDim total;
  bool all_exact = true;
};

/// Power iteration on the (strictly positive) total left-multiplication
/// matrix to 1e-12 residual, then exact snap + verification. Throws
/// std::runtime_error when the dimension equation cannot be satisfied
/// (corrupt ring).
DimensionData fp_dims(const FusionRing& r);

/// Distinct simple dimensions, ascending.
std::vector<ExactDim> cd_set(const FusionRing& r);

/// The group of invertible simple objects. `structure` is present iff the
/// group is abelian (for non-abelian G the multiplication table is still
/// returned).
struct InvertibleData {
  std::vector<int> indices;              // basis indices, ascending
  std::vector<int> group_index;          // basis index -> position in indices, or -1
  AbelianTable table;                    // on positions
  bool abelian = true;
  std::optional<AbelianStructure> structure;

  bool is_invertible(int basis_index) const {
    return group_index[basis_index] >= 0;
  }
};

InvertibleData invertibles(const FusionRing& r);

/// Is X (x) X* exactly the unit (single constituent, multiplicity 1)?
bool is_invertible_object(const FusionRing& r, int x);

/// Stabilizer G[X] = { g invertible : g (x) X = X } together with the
/// decomposition of X (x) X*, and whether the decomposition carries each
/// stabilizer element exactly once (the expected shape for a valid ring).
struct StabilizerData {
  std::vector<int> stabilizer;     // basis indices of G[X]
  FusionRing::Product decomposition;
  bool canonical_shape = true;
};

StabilizerData stabilizer_decomposition(const FusionRing& r, int x);

/// Structure report for generalized Tambara-Yamagami rings: non-pointed
/// rings in which any product of two non-invertible simples is a sum of
/// invertibles. Throws std::invalid_argument on pointed input.
struct GtyReport {
  bool is_gty = false;
  int n = 0;                        // number of non-invertible simples
  int invertible_count = 0;
  int adjoint_rank = 0;
  std::int64_t universal_order = 0;
  bool counts_match = false;        // invertible_count == 2n
  bool action_transitive = false;
  bool z2_normal = false;
  bool all_checks() const {
    return is_gty && counts_match && adjoint_rank == 2 &&
           universal_order == 2 * static_cast<std::int64_t>(n) &&
           action_transitive && z2_normal;
  }
};

GtyReport gty_structure(const FusionRing& r);

} // namespace fusionkit
