#pragma once

#include <vector>

#include "fusionkit/exact_dim.hpp"
#include "fusionkit/fusion_ring.hpp"

namespace fusionkit {

/// A fusion subring: a set of basis indices containing the unit and closed
/// under duals and tensor constituents.
struct Subring {
  const FusionRing* parent = nullptr;
  std::vector<int> simples; // sorted

  int rank() const { return static_cast<int>(simples.size()); }
  bool contains(int x) const;
  bool contains_all(const Subring& o) const;
  bool is_whole() const { return parent && rank() == parent->rank(); }
  bool is_trivial() const { return rank() == 1; }
  bool operator==(const Subring& o) const { return simples == o.simples; }
  bool operator<(const Subring& o) const {
    if (simples.size() != o.simples.size()) return simples.size() < o.simples.size();
    return simples < o.simples;
  }
};

/// Smallest subring containing S: closure under tensor constituents and
/// duals (idempotent, monotone).
Subring subring_generated(const FusionRing& r, const std::vector<int>& s);

/// Closure of all constituents of X (x) X* over all simples X.
Subring adjoint_subring(const FusionRing& r);

/// Join: smallest subring containing both.
Subring subring_join(const Subring& a, const Subring& b);

/// All invertible members (dimension-1 check via X (x) X* = 1)?
bool subring_is_pointed(const Subring& s);

/// Sum of dim^2 over members; requires precomputed full-ring dims.
ExactDim subring_fpdim(const Subring& s, const std::vector<ExactDim>& dims);

/// Extracts a standalone ring on the subring's basis (labels preserved).
/// Also returns the index map from new basis to parent basis.
FusionRing extract_subring(const Subring& s, std::vector<int>* new_to_parent = nullptr);

/// Complete subring lattice: every closure of every subset appears (computed
/// as the join-closure of single-generator subrings), deduplicated, sorted by
/// (rank, members). Throws bound_error when rank() exceeds max_rank().
struct SubringLattice {
  std::vector<Subring> members;
  /// contains[i][j] == true iff members[i] contains members[j].
  std::vector<std::vector<bool>> contains;
};

SubringLattice subring_lattice(const FusionRing& r);

} // namespace fusionkit
