#pragma once

#include <vector>

#include "fusionkit/abelian.hpp"
#include "fusionkit/fusion_ring.hpp"
#include "fusionkit/subring.hpp"

namespace fusionkit {

/// A grading of a fusion ring by a finite abelian group: degree map on
/// simples with N_{ab}^c > 0 implying deg c = deg a + deg b.
struct Grading {
  FiniteAbelianGroup group;
  std::vector<FiniteAbelianGroup::Elem> degree; // per basis index
  bool faithful = true;

  std::vector<int> component(const FiniteAbelianGroup::Elem& g) const;
};

/// True iff the degree map is compatible with every nonzero coefficient and
/// faithfulness matches surjectivity of the degree map.
bool grading_consistent(const FusionRing& r, const Grading& g);

/// The universal grading: simples X, Y share a degree iff some constituent
/// of X (x) Y* is adjoint. Requires a valid commutative ring; throws
/// std::invalid_argument when class multiplication is inconsistent.
struct UniversalGrading {
  Grading grading;
  std::vector<int> class_of;            // basis index -> class id
  std::vector<std::vector<int>> classes; // class id -> sorted members
  AbelianStructure structure;           // of the class group
  int trivial_class = 0;
};

UniversalGrading universal_grading(const FusionRing& r);

} // namespace fusionkit
