#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "fusionkit/cyclic_forms.hpp"
#include "fusionkit/nising.hpp"
#include "fusionkit/premetric.hpp"
#include "fusionkit/root_of_unity.hpp"

namespace fusionkit {

/// Squared-braiding invariants of a (non-degenerate) Ising braiding: the
/// scalar of delta against Z and the quadratic value on delta. These two
/// scalars are all that the center computations depend on.
struct IsingPairing {
  RootOfUnity s_delta_z; // -1
  RootOfUnity q_delta;   // -1
};

/// Derives s_delta_z from the centralizer dimension count: in a
/// non-degenerate rank-3 ring the centralizer of <delta> has total dimension
/// 2, so Z cannot centralize delta. Asserts the candidate is unique.
IsingPairing derive_ising_pairing();

/// Squared-braiding data for the family ring inside Ising (x) cyclic pointed,
/// parameterized by xi with xi^{2^{N+1}} = 1; the twist label is xi^{2^N}.
struct InducedBraiding {
  int N;
  RootOfUnity xi;
  IsingPairing pairing;

  InducedBraiding(int n, RootOfUnity x);
  InducedBraiding(int n, RootOfUnity x, IsingPairing p);
  RootOfUnity zeta() const { return xi.pow(std::int64_t(1) << N); }
};

/// One entry of the squared-braiding table. `scalar_defined` is true when at
/// least one of the two objects is invertible (the squared braiding is then
/// an honest scalar); otherwise the value is the pointed-grading pairing
/// only, flagged projective.
struct BraidingEntry {
  int x, y; // basis indices in make_nising(N)
  RootOfUnity value;
  bool scalar_defined;
};

std::vector<BraidingEntry> squared_braiding_table(const InducedBraiding& br);

/// Scalar of the squared braiding of basis object x against the generator
/// Z (x) 1 (x must be invertible).
RootOfUnity scalar_vs_generator(const InducedBraiding& br, int invertible_i,
                                bool is_delta);

/// Mueger center of the induced braiding: invertibles whose scalar against
/// the generator is 1 (sufficient: the generator tensor-generates the ring
/// and the center is pointed), classified through the restricted quadratic
/// form.
struct InducedCenter {
  std::vector<int> center_basis;     // basis indices in make_nising(N)
  std::vector<std::string> center_labels;
  CenterVerdict verdict;
  std::optional<std::string> witness_label;
  QuadraticForm center_form;         // q restricted to the center subgroup
  QuadraticForm pointed_form;        // induced q on all invertibles
  std::optional<std::string> a_chain_center_generator; // order-2 generator of
                                                       // the center of <1⊠2>
};

InducedCenter induced_center(const InducedBraiding& br);

/// Per-xi comparison of "center is slightly degenerate" against "the cyclic
/// pointed form is non-degenerate"; the two agree for every N > 2.
struct DegeneracyRow {
  RootOfUnity xi;
  CenterClass verdict;
  bool pointed_nondegenerate;
  bool agree;
};

struct DegeneracyTable {
  int N;
  RootOfUnity zeta;
  std::vector<DegeneracyRow> rows;
  bool equivalence_holds;  // all rows agree
  bool iff_asserted;       // the equivalence is a theorem only for N > 2
  bool pass() const { return !iff_asserted || equivalence_holds; }
};

DegeneracyTable degeneracy_criterion(int n, const RootOfUnity& zeta);

/// Induced quadratic form on the invertibles of make_nising(N):
/// q(delta^eps (x) 2t) = q_delta^eps * xi^{(2t)^2} on Z_2 x Z_{2^{N-1}}.
QuadraticForm induced_pointed_form(const InducedBraiding& br);

} // namespace fusionkit
